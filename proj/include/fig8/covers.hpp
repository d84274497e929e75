#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fig8/perm.hpp"
#include "fig8/word.hpp"

namespace fig8 {

// Compact surface of genus g with k >= 1 boundary components, and a degree n
// covering of each boundary circle given by its cycle type.
struct CoverSpec {
  int genus = 0;
  std::vector<Partition> boundary_classes;

  // Throws InputError on negative genus, no boundary, or mixed degrees.
  static CoverSpec make(int genus, std::vector<Partition> classes);
  int degree() const { return boundary_classes.front().size(); }
};

enum class Decision { extends, does_not_extend, unknown };
std::string to_string(Decision d);

// Images of a1, b1, ..., ag, bg and of the boundary loops s1, ..., sk under
// a homomorphism to S_n, subject to [a1,b1] ... [ag,bg] s1 ... sk = e.
struct CoverWitness {
  std::vector<Permutation> handles;
  std::vector<Permutation> boundary;

  bool relation_holds() const;
  std::vector<Permutation> generators() const;
};

struct CoverDecision {
  Decision decision = Decision::unknown;
  std::optional<CoverWitness> witness;
};

struct ExtendOptions {
  // Only accept witnesses whose image acts transitively (connected covers).
  bool transitive_only = false;
  // Backtracking node limit; exceeding it gives Decision::unknown.
  std::size_t node_budget = 20'000'000;
};

// Does the boundary covering extend to a covering of the surface?
// Genus 0: iff some s_i in the given classes multiply to e (Frobenius count).
// Genus >= 1: iff the parities of the classes sum to zero.
CoverDecision extends_cover(const CoverSpec& spec, const ExtendOptions& opts = {});

// n-cycles c1, c2 with c1 * c2 == sigma. Throws DomainError on odd sigma.
std::pair<Permutation, Permutation> two_n_cycles(const Permutation& sigma);

// (alpha, beta) with [alpha, beta] == sigma. Throws DomainError on odd sigma.
std::pair<Permutation, Permutation> commutator_witness(const Permutation& sigma);

// Degree-n cover of the once-punctured torus glued from n copies of the
// fundamental square: sigma (an n-cycle) glues horizontally, tau vertically.
struct StripCover {
  int degree = 0;
  Permutation sigma, tau;
  Permutation boundary_monodromy;  // [sigma, tau]
  std::size_t boundary_components = 0;
  int euler_characteristic = 0;  // degree * (-1)
  int genus = 0;
};
// Throws InputError unless sigma is an n-cycle with n == tau's degree.
StripCover strip_cover(const Permutation& sigma, const Permutation& tau);

using Monodromy = std::map<char, Permutation>;

// Image of a word under generator -> permutation (right action).
Permutation monodromy_of(const GroupWord& w, const Monodromy& images);

// Number of components of the preimage of each boundary word: the number of
// cycles of its monodromy. Throws InputError on an unassigned generator.
std::vector<std::size_t> boundary_lift_components(const Monodromy& images,
                                                  const std::vector<GroupWord>& boundary_words);

struct RegularOptions {
  // Degrees above this give Decision::unknown.
  int max_degree = 8;
  std::size_t node_budget = 50'000'000;
};

struct RegularDecision {
  Decision decision = Decision::unknown;
  std::optional<CoverWitness> witness;
  // Order of the group generated by the witness (equal to the degree).
  std::size_t group_order = 0;
  // Whether the witness group is transitive, hence acts regularly.
  bool acts_regularly = false;
};

// Boundary images s_i in the given classes and handle images such that the
// whole image has order exactly n and the surface relation holds.
RegularDecision regular_extends(const CoverSpec& spec, const RegularOptions& opts = {});

// Permutation representation of degree <= |w| + 1 in which the path of w from
// point 0 does not return to 0, so w lies outside the point stabilizer.
struct PermRepresentation {
  int degree = 0;
  Monodromy images;
  int endpoint = 0;  // image of point 0 under w
};
// Generators are the first `rank` letters of the alphabet a, b, c, ...
// Throws DomainError on the trivial word, InputError on a letter beyond rank.
PermRepresentation stallings_excluding_subgroup(const GroupWord& w, int rank);

}  // namespace fig8
