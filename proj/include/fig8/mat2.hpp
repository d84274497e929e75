#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "fig8/bigint.hpp"
#include "fig8/word.hpp"

namespace fig8 {

// 2x2 integer matrix of determinant 1, either exact (characteristic zero) or
// over the integers modulo m with entries kept in [0, m).
class ExactMat2 {
 public:
  ExactMat2() : ExactMat2(1, 0, 0, 1) {}
  // Throws DomainError unless a11*a22 - a12*a21 == 1.
  ExactMat2(BigInt a11, BigInt a12, BigInt a21, BigInt a22);
  // Entries reduced mod m; throws DomainError unless det == 1 (mod m).
  static ExactMat2 modular(BigInt a11, BigInt a12, BigInt a21, BigInt a22, BigInt modulus);
  static ExactMat2 identity(std::optional<BigInt> modulus = std::nullopt);

  const BigInt& a11() const { return e_[0]; }
  const BigInt& a12() const { return e_[1]; }
  const BigInt& a21() const { return e_[2]; }
  const BigInt& a22() const { return e_[3]; }
  const std::optional<BigInt>& modulus() const { return mod_; }

  BigInt trace() const;
  BigInt det() const;
  bool is_identity() const;
  // Largest absolute entry (exact matrices).
  BigInt max_abs_entry() const;

  ExactMat2 operator*(const ExactMat2& rhs) const;
  // Adjugate; exact because det == 1.
  ExactMat2 inverse() const;
  ExactMat2 reduced_mod(const BigInt& m) const;

  bool operator==(const ExactMat2& other) const;

  // [[a11,a12],[a21,a22]] with decimal strings.
  nlohmann::json to_json() const;

 private:
  struct Unchecked {};
  ExactMat2(Unchecked, BigInt a11, BigInt a12, BigInt a21, BigInt a22, std::optional<BigInt> m);
  void normalize();

  BigInt e_[4];
  std::optional<BigInt> mod_;
};

using Assignment = std::map<char, ExactMat2>;

// Product of the assigned matrices in word order; inverse letters use the
// adjugate. Throws InputError for an unassigned generator or mixed moduli.
ExactMat2 eval_word(const GroupWord& w, const Assignment& assignment);

}  // namespace fig8
