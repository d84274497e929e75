#pragma once

#include <cstddef>

#include "fig8/exec.hpp"
#include "fig8/word.hpp"

namespace fig8 {

// Fuchsian groups with a built-in generator assignment.
enum class FuchsianGroup {
  // a -> [[1,1],[1,2]], b -> [[1,-1],[-1,2]]: the once-punctured torus
  // uniformized by the commutator subgroup of the modular group.
  modular_torus,
};

struct SelfIntersection {
  std::size_t count = 0;
  // Word-length radius of the conjugator search that produced `count`.
  std::size_t radius = 0;
  // Crossing translates found, counted modulo the cyclic group of w.
  std::size_t crossing_classes = 0;
};

// Geometric self-intersection number of the closed geodesic in the
// conjugacy class of w. Conjugates g w g^-1 with |g| <= radius are tested
// for transversal axis crossing (exactly, via traces), identified modulo
// conjugation by w, and halved. The search runs at radius 2|w| + extra and
// again at +2; a mismatch throws std::logic_error.
//
// Throws InputError if w is not cyclically reduced over {a, b}, DomainError
// if w is parabolic, elliptic or a proper power.
SelfIntersection self_intersection(const GroupWord& w,
                                   FuchsianGroup group = FuchsianGroup::modular_torus,
                                   std::size_t extra_radius = 4, Exec exec = Exec::serial);

// Single search at a fixed radius, no stability check.
SelfIntersection self_intersection_at_radius(const GroupWord& w, std::size_t radius,
                                             Exec exec = Exec::serial);

}  // namespace fig8
