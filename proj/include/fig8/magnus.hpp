#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fig8/bigint.hpp"
#include "fig8/word.hpp"

namespace fig8 {

// Truncated power series in the noncommuting variables x, y, up to degree D.
// Coefficients are stored densely; the monomial of degree d with letters
// l_1 ... l_d (x = 0, y = 1) has index (2^d - 1) + binary(l_1 ... l_d).
class MagnusSeries {
 public:
  explicit MagnusSeries(int degree);  // the series 1
  static MagnusSeries generator(char letter, int degree);  // a, b, A or B

  int degree() const { return degree_; }
  const BigInt& coefficient(std::string_view monomial) const;
  const std::vector<BigInt>& coefficients() const { return coef_; }

  // Nonzero terms of exactly this degree, as (monomial, coefficient).
  std::vector<std::pair<std::string, BigInt>> terms_of_degree(int d) const;

  MagnusSeries operator*(const MagnusSeries& rhs) const;
  // this * (1 + v) and this * (1 + v)^-1, with v = x or y.
  void mul_generator(int var);
  void mul_generator_inverse(int var);

  bool operator==(const MagnusSeries& other) const {
    return degree_ == other.degree_ && coef_ == other.coef_;
  }
  std::string str() const;  // e.g. "1 + xy - yx"

  static std::size_t index_of(std::string_view monomial);

 private:
  int degree_;
  std::vector<BigInt> coef_;
};

// Image of w under a -> 1 + x, b -> 1 + y, truncated at degree D.
// Throws InputError when D < 1 or w uses letters other than a, b.
MagnusSeries magnus_expand(const GroupWord& w, int degree);

// Least k <= max_k with a nonzero degree-k term; nullopt ("deeper") if none.
// Throws DomainError on the trivial word.
std::optional<int> lcs_depth(const GroupWord& w, int max_k);

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Unipotent (k+1)x(k+1) representation over Z/m that does not kill w, for w
// of lower central depth exactly k. A degree-k monomial v = v_1 ... v_k with
// nonzero coefficient c_v is chosen; a and b go to I + sum of E_{j,j+1} over
// the positions j where v_j is x (resp. y), so the corner entry of the image
// of w is c_v. m is the least prime not dividing c_v, minimized over v.
struct UnipotentWitness {
  int k = 0;
  std::string monomial;
  BigInt coefficient;
  std::uint64_t modulus = 0;
  IntMatrix image_a, image_b, image_w;  // entries in [0, m)
  // Order of the full upper unitriangular group over Z/m: m^{k(k+1)/2}.
  BigInt ambient_order;
  // Order of the subgroup generated by the images of a and b, when it was
  // small enough to enumerate.
  std::optional<std::uint64_t> image_order;
};

// Throws InputError if lcs_depth(w) != k.
UnipotentWitness unipotent_witness(const GroupWord& w, int k);

// [..[[a,b],b]..,b] with j brackets.
GroupWord iterated_bracket(int j);

}  // namespace fig8
