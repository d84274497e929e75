#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace fig8 {

// Set of generator letters (lowercase). Uppercase letters denote inverses.
class Alphabet {
 public:
  explicit Alphabet(std::string generators);

  static const Alphabet& free2();   // a, b
  static const Alphabet& free_xy(); // x, y (target of the genus-2 retraction)
  static const Alphabet& genus2();  // a, b, c, d

  const std::string& generators() const { return gens_; }
  std::size_t rank() const { return gens_.size(); }
  bool contains(char letter) const;
  // Position of the generator underlying `letter` (case-insensitive), or -1.
  int index_of(char letter) const;

  bool operator==(const Alphabet& other) const { return gens_ == other.gens_; }

 private:
  std::string gens_;
};

constexpr char inverse_letter(char c) {
  return (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A')
                                 : static_cast<char>(c - 'A' + 'a');
}
constexpr bool is_inverse_letter(char c) { return c >= 'A' && c <= 'Z'; }
constexpr char generator_of(char c) {
  return is_inverse_letter(c) ? inverse_letter(c) : c;
}

// Freely reduce a letter string (no alphabet check).
std::string free_reduce(std::string_view letters);

// A freely reduced word in a free group or surface group. The unreduced input
// is never retained.
class GroupWord {
 public:
  GroupWord() : alphabet_(Alphabet::free2()) {}
  explicit GroupWord(const Alphabet& alphabet) : alphabet_(alphabet) {}

  // Throws InputError on any character outside the alphabet.
  static GroupWord parse(std::string_view text, const Alphabet& alphabet = Alphabet::free2());
  // Caller guarantees the letters are valid for the alphabet.
  static GroupWord from_letters(std::string_view letters, const Alphabet& alphabet);

  const std::string& str() const { return letters_; }
  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  char operator[](std::size_t i) const { return letters_[i]; }

  GroupWord inverse() const;
  GroupWord power(long k) const;
  GroupWord conjugate_by(const GroupWord& z) const;  // z^-1 * this * z
  GroupWord operator*(const GroupWord& rhs) const;

  bool is_cyclically_reduced() const;
  GroupWord cyclic_reduction() const;
  // True when the (cyclically reduced) word equals v^k for some k >= 2.
  bool is_proper_power() const;

  // Exponent sum per generator, in alphabet order.
  std::vector<long> abelianization() const;

  bool operator==(const GroupWord& other) const {
    return letters_ == other.letters_ && alphabet_ == other.alphabet_;
  }

 private:
  GroupWord(std::string letters, const Alphabet& alphabet)
      : letters_(std::move(letters)), alphabet_(alphabet) {}

  std::string letters_;
  Alphabet alphabet_;
};

// Commutator [u, v] = u v u^-1 v^-1.
GroupWord commutator(const GroupWord& u, const GroupWord& v);

}  // namespace fig8
