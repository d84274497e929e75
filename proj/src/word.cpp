#include "fig8/word.hpp"

#include <algorithm>

#include "fig8/error.hpp"

namespace fig8 {

Alphabet::Alphabet(std::string generators) : gens_(std::move(generators)) {
  for (char c : gens_) {
    if (c < 'a' || c > 'z') throw InputError("alphabet generators must be lowercase letters");
  }
}

const Alphabet& Alphabet::free2() {
  static const Alphabet a("ab");
  return a;
}

const Alphabet& Alphabet::free_xy() {
  static const Alphabet a("xy");
  return a;
}

const Alphabet& Alphabet::genus2() {
  static const Alphabet a("abcd");
  return a;
}

bool Alphabet::contains(char letter) const { return index_of(letter) >= 0; }

int Alphabet::index_of(char letter) const {
  if (!((letter >= 'a' && letter <= 'z') || (letter >= 'A' && letter <= 'Z'))) return -1;
  auto pos = gens_.find(generator_of(letter));
  return pos == std::string::npos ? -1 : static_cast<int>(pos);
}

std::string free_reduce(std::string_view letters) {
  std::string out;
  out.reserve(letters.size());
  for (char c : letters) {
    if (!out.empty() && out.back() == inverse_letter(c)) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return out;
}

GroupWord GroupWord::parse(std::string_view text, const Alphabet& alphabet) {
  for (char c : text) {
    if (!alphabet.contains(c)) {
      throw InputError(std::string("invalid letter '") + c + "' for alphabet {" +
                       alphabet.generators() + "}");
    }
  }
  return GroupWord(free_reduce(text), alphabet);
}

GroupWord GroupWord::from_letters(std::string_view letters, const Alphabet& alphabet) {
  return GroupWord(free_reduce(letters), alphabet);
}

GroupWord GroupWord::inverse() const {
  std::string out(letters_.rbegin(), letters_.rend());
  for (char& c : out) c = inverse_letter(c);
  return GroupWord(std::move(out), alphabet_);
}

GroupWord GroupWord::power(long k) const {
  const GroupWord base = k < 0 ? inverse() : *this;
  std::string out;
  const long reps = k < 0 ? -k : k;
  out.reserve(static_cast<std::size_t>(reps) * base.length());
  for (long i = 0; i < reps; ++i) out += base.letters_;
  return GroupWord(free_reduce(out), alphabet_);
}

GroupWord GroupWord::conjugate_by(const GroupWord& z) const { return z.inverse() * *this * z; }

GroupWord GroupWord::operator*(const GroupWord& rhs) const {
  if (!(alphabet_ == rhs.alphabet_)) throw InputError("cannot multiply words over different alphabets");
  return GroupWord(free_reduce(letters_ + rhs.letters_), alphabet_);
}

bool GroupWord::is_cyclically_reduced() const {
  return letters_.size() < 2 || letters_.front() != inverse_letter(letters_.back());
}

GroupWord GroupWord::cyclic_reduction() const {
  std::size_t lo = 0, hi = letters_.size();
  while (hi - lo >= 2 && letters_[lo] == inverse_letter(letters_[hi - 1])) {
    ++lo;
    --hi;
  }
  return GroupWord(letters_.substr(lo, hi - lo), alphabet_);
}

bool GroupWord::is_proper_power() const {
  const std::string& s = cyclic_reduction().letters_;
  const std::size_t n = s.size();
  for (std::size_t period = 1; period <= n / 2; ++period) {
    if (n % period != 0) continue;
    bool ok = true;
    for (std::size_t i = period; i < n && ok; ++i) ok = s[i] == s[i - period];
    if (ok) return true;
  }
  return false;
}

std::vector<long> GroupWord::abelianization() const {
  std::vector<long> sums(alphabet_.rank(), 0);
  for (char c : letters_) sums[static_cast<std::size_t>(alphabet_.index_of(c))] += is_inverse_letter(c) ? -1 : 1;
  return sums;
}

GroupWord commutator(const GroupWord& u, const GroupWord& v) {
  return u * v * u.inverse() * v.inverse();
}

}  // namespace fig8
