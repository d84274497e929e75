#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fig8/exec.hpp"
#include "fig8/resfin.hpp"
#include "fig8/word.hpp"

namespace fig8 {

// Genus-2 surface group <a, b, c, d | [a,b] = [c,d]>. Words use the alphabet
// abcd (Alphabet::genus2()).

// z1 = [a,b], z2 = [c,d], and the relator [a,b][c,d]^-1.
const GroupWord& z1();
const GroupWord& z2();
const GroupWord& genus2_relator();

// r(a) = r(c) = x, r(b) = r(d) = y, into the free group on x, y.
GroupWord retract(const GroupWord& w);

// phi^m: a, b fixed; c -> z1^-m c z1^m, d -> z1^-m d z1^m.
// Throws InputError when m < 0.
GroupWord dehn_twist(const GroupWord& w, long m);

// Block rewriting: an {a,b}-block equal to z1^k becomes z2^k and a {c,d}-block
// equal to z2^k becomes z1^k, one block per pass, until no block is a
// nontrivial commutator power or the whole word is a power of z1.
GroupWord rewrite_blocks(const GroupWord& w);

enum class Verdict { nontrivial, trivial_consistent };
std::string to_string(Verdict v);

struct Certificate {
  Verdict verdict = Verdict::trivial_consistent;
  GroupWord rewritten{Alphabet::genus2()};
  long twist = 0;  // m
  GroupWord witness{Alphabet::free_xy()};
  // Finite quotient separating the witness (x, y read as a, b).
  std::optional<PrimeWitness> prime;
};

// w0 = rewrite_blocks(w), m = ceil(|w0| / 4) + 1 so that 4(m - 1) >= |w0|,
// witness = retract(dehn_twist(w0, m)). A nonempty witness proves w != 1.
Certificate certify_nontrivial(const GroupWord& w);

std::vector<Certificate> certify_all(const std::vector<GroupWord>& words, Exec exec = Exec::serial);

enum class WordProblem { trivial, nontrivial };

// Dehn's algorithm on the cyclic word over the 16 cyclic conjugates of the
// relator and its inverse: any cyclic subword of length >= 5 that is a prefix
// of one of them is replaced by the inverse of the complement.
WordProblem dehn_oracle(const GroupWord& w);

struct LengthBound {
  std::size_t witness_length = 0;
  std::size_t bound = 0;  // l^2 + l for l = |w|
  bool pass = false;
};
// Throws DomainError when the certificate is trivial-consistent.
LengthBound length_bound_check(const GroupWord& w);

}  // namespace fig8
