#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace fig8 {

// Weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  // Sorts the parts; throws InputError on a non-positive part or empty list.
  explicit Partition(std::vector<int> parts);
  // "3,1,1"
  static Partition parse(std::string_view text);
  static Partition single(int n) { return Partition({n}); }
  static Partition ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return n_; }
  std::size_t length() const { return parts_.size(); }
  std::string str() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

enum class Parity { even, odd };
std::string to_string(Parity p);

// Permutation of {0..n-1}, printed 1-based. Acts on the right:
// (s * t)(i) = t(s(i)).
class Permutation {
 public:
  Permutation() = default;
  // Throws InputError unless `images` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  // Cycle notation "(1 2 3)(4 5)", 1-based; "()" or "e" is the identity.
  // The degree is max(n, largest point).
  static Permutation parse(std::string_view text, int n = 0);
  // (c0 c1 ... ) as a single cycle on n points.
  static Permutation cycle(const std::vector<int>& points, int n);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return img_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation conjugate_by(const Permutation& g) const;  // g^-1 * this * g

  bool is_identity() const;
  std::vector<std::vector<int>> cycles() const;  // including fixed points
  std::size_t num_cycles() const;
  Partition cycle_type() const;
  Parity parity() const;
  bool is_full_cycle() const { return num_cycles() == 1; }

  // Cycle notation, fixed points omitted; "()" for the identity.
  std::string str() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> img_;
};

// [s, t] = s t s^-1 t^-1
Permutation commutator(const Permutation& s, const Permutation& t);

// A fixed permutation of the given cycle type: consecutive points per cycle.
Permutation class_representative(const Partition& p);

// Every permutation of {0..n-1} of the given cycle type, sorted.
std::vector<Permutation> class_elements(const Partition& p);

// Subgroup generated by `gens`; stops early (returning what it has) once the
// size exceeds `limit`.
std::vector<Permutation> generated_group(const std::vector<Permutation>& gens, int degree,
                                         std::size_t limit = static_cast<std::size_t>(-1));

// True when the group generated by `gens` acts transitively on {0..n-1}.
bool is_transitive(const std::vector<Permutation>& gens, int degree);

}  // namespace fig8
