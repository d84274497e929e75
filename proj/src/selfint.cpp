#include "fig8/selfint.hpp"

#include <omp.h>

#include <array>
#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "fig8/error.hpp"

namespace fig8 {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

template <class T>
struct M2 {
  T a, b, c, d;
};

template <class T>
T checked_mul(T x, T y) {
  T r;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("self-intersection search overflow");
  return r;
}

template <class T>
T checked_add(T x, T y) {
  T r;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("self-intersection search overflow");
  return r;
}

template <class T>
M2<T> mul(const M2<T>& x, const M2<T>& y) {
  return {checked_add(checked_mul(x.a, y.a), checked_mul(x.b, y.c)),
          checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.d)),
          checked_add(checked_mul(x.c, y.a), checked_mul(x.d, y.c)),
          checked_add(checked_mul(x.c, y.b), checked_mul(x.d, y.d))};
}

template <class T>
M2<T> inv(const M2<T>& x) {
  return {x.d, -x.b, -x.c, x.a};
}

M2<i128> widen(const M2<i64>& x) { return {x.a, x.b, x.c, x.d}; }

i128 abs128(i128 x) { return x < 0 ? -x : x; }

i128 max_abs(const M2<i128>& x) {
  i128 m = abs128(x.a);
  for (i128 v : {x.b, x.c, x.d}) m = abs128(v) > m ? abs128(v) : m;
  return m;
}

// Letters in the order a, A, b, B.
constexpr std::array<char, 4> kLetters{'a', 'A', 'b', 'B'};
constexpr std::array<M2<i64>, 4> kGens{M2<i64>{1, 1, 1, 2}, M2<i64>{2, -1, -1, 1},
                                       M2<i64>{1, -1, -1, 2}, M2<i64>{2, 1, 1, 1}};
constexpr int inverse_index(int i) { return i ^ 1; }

int letter_index(char c) {
  for (int i = 0; i < 4; ++i) {
    if (kLetters[static_cast<std::size_t>(i)] == c) return i;
  }
  throw InputError("self-intersection words must use the alphabet {a, b}");
}

using Vec2 = std::array<long double, 2>;

long double cross(const Vec2& u, const Vec2& v) { return u[0] * v[1] - u[1] * v[0]; }

// Eigenvector of M for eigenvalue lambda, as a point of the projective line.
Vec2 eigvec(long double a, long double b, long double c, long double d, long double lambda) {
  const Vec2 v1{b, lambda - a};
  const Vec2 v2{lambda - d, c};
  const long double n1 = std::fabs(v1[0]) + std::fabs(v1[1]);
  const long double n2 = std::fabs(v2[0]) + std::fabs(v2[1]);
  return n1 >= n2 ? v1 : v2;
}

struct Eigen {
  long double big;   // eigenvalue of larger modulus
  long double small;
};

Eigen eigen(long double trace) {
  const long double disc = std::sqrt(trace * trace - 4.0L);
  const long double big = trace > 0 ? (trace + disc) / 2.0L : (trace - disc) / 2.0L;
  return {big, 1.0L / big};
}

// Finds the crossing conjugates of W and identifies them modulo <W>.
class CrossingSearch {
 public:
  explicit CrossingSearch(const M2<i64>& w) : w_(w), w_inv_(inv(w)) {
    trace_ = w.a + w.d;
    upper_ = checked_mul<i128>(trace_, trace_) - 2;
    const Eigen e = eigen(static_cast<long double>(trace_));
    eig_ = e;
    const long double a = w.a, b = w.b, c = w.c, d = w.d;
    attracting_ = eigvec(a, b, c, d, e.big);
    repelling_ = eigvec(a, b, c, d, e.small);
    translation_ = 2.0L * std::log(std::fabs(e.big));
  }

  using Key = std::array<i128, 4>;

  // Depth-first search over reduced words g with prefix `start` (given by its
  // matrix and last letter), up to total length `radius`.
  void search(const M2<i64>& g, const M2<i64>& g_inv, int last, std::size_t depth,
              std::size_t radius, std::vector<Key>& out) const {
    struct Frame {
      M2<i64> g, gi;
      int last;
      std::size_t depth;
    };
    std::vector<Frame> stack{{g, g_inv, last, depth}};
    while (!stack.empty()) {
      const Frame f = stack.back();
      stack.pop_back();
      visit(f.g, f.gi, out);
      if (f.depth == radius) continue;
      for (int i = 0; i < 4; ++i) {
        if (f.last >= 0 && i == inverse_index(f.last)) continue;
        const auto& l = kGens[static_cast<std::size_t>(i)];
        const auto& li = kGens[static_cast<std::size_t>(inverse_index(i))];
        stack.push_back({mul(f.g, l), mul(li, f.gi), i, f.depth + 1});
      }
    }
  }

  long double translation() const { return translation_; }

 private:
  void visit(const M2<i64>& g, const M2<i64>& gi, std::vector<Key>& out) const {
    // u = tr(W g W g^-1); the axes of W and gWg^-1 cross iff 2 < u < t^2 - 2.
    const M2<i64> p = mul(w_, g);
    const M2<i64> q = mul(w_, gi);
    const i128 u = checked_add(checked_add(checked_mul<i128>(p.a, q.a), checked_mul<i128>(p.b, q.c)),
                               checked_add(checked_mul<i128>(p.c, q.b), checked_mul<i128>(p.d, q.d)));
    if (!(u > 2 && u < upper_)) return;
    const M2<i128> conj = mul(widen(mul(g, w_)), widen(gi));
    out.push_back(canonical(conj));
  }

  // Signed position of the crossing point of axis(C) along axis(W).
  long double position(const M2<i128>& cm) const {
    const long double a = static_cast<long double>(cm.a), b = static_cast<long double>(cm.b),
                      c = static_cast<long double>(cm.c), d = static_cast<long double>(cm.d);
    const Vec2 e1 = eigvec(a, b, c, d, eig_.big);
    const Vec2 e2 = eigvec(a, b, c, d, eig_.small);
    const long double x1 = cross(e1, repelling_) / cross(e1, attracting_);
    const long double x2 = cross(e2, repelling_) / cross(e2, attracting_);
    return 0.5L * std::log(-x1 * x2);
  }

  M2<i128> shift_up(const M2<i128>& cm) const { return mul(mul(widen(w_), cm), widen(w_inv_)); }
  M2<i128> shift_down(const M2<i128>& cm) const { return mul(mul(widen(w_inv_), cm), widen(w_)); }

  Key canonical(M2<i128> cm) const {
    // Exact descent to the smallest entries in the <W>-orbit keeps the
    // floating-point position well conditioned.
    for (;;) {
      const i128 m = max_abs(cm);
      const M2<i128> up = shift_up(cm), down = shift_down(cm);
      if (max_abs(up) < m) {
        cm = up;
      } else if (max_abs(down) < m) {
        cm = down;
      } else {
        break;
      }
    }
    long double s = position(cm);
    for (int guard = 0; guard < 64 && !(s >= 0.0L && s < translation_); ++guard) {
      if (!std::isfinite(static_cast<double>(s))) throw std::logic_error("crossing position is not finite");
      cm = s < 0.0L ? shift_up(cm) : shift_down(cm);
      s = position(cm);
    }
    // Orbit members whose crossing lies in a slightly widened fundamental
    // segment; the lexicographically smallest is the representative.
    const long double delta = 1e-6L * translation_;
    Key best{};
    bool have = false;
    for (const M2<i128>& cand : {shift_down(cm), cm, shift_up(cm)}) {
      const long double p = position(cand);
      if (!(p >= -delta && p <= translation_ + delta)) continue;
      const Key k{cand.a, cand.b, cand.c, cand.d};
      if (!have || k < best) best = k;
      have = true;
    }
    if (!have) throw std::logic_error("crossing canonicalization failed");
    return best;
  }

  M2<i64> w_, w_inv_;
  i64 trace_ = 0;
  i128 upper_ = 0;
  Eigen eig_{};
  Vec2 attracting_{}, repelling_{};
  long double translation_ = 0.0L;
};

M2<i64> evaluate(const GroupWord& w) {
  M2<i64> m{1, 0, 0, 1};
  for (char c : w.str()) m = mul(m, kGens[static_cast<std::size_t>(letter_index(c))]);
  return m;
}

void validate(const GroupWord& w) {
  for (char c : w.str()) letter_index(c);
  if (w.empty()) throw DomainError("the empty word has no geodesic");
  if (!w.is_cyclically_reduced()) throw InputError("word must be cyclically reduced");
  if (w.is_proper_power()) throw DomainError("word is a proper power");
}

}  // namespace

SelfIntersection self_intersection_at_radius(const GroupWord& w, std::size_t radius, Exec exec) {
  validate(w);
  const M2<i64> wm = evaluate(w);
  const i64 t = wm.a + wm.d;
  if (t >= -2 && t <= 2) throw DomainError("word is not hyperbolic (|trace| <= 2)");

  const CrossingSearch search(wm);
  std::set<CrossingSearch::Key> classes;
  const M2<i64> id{1, 0, 0, 1};

  if (exec == Exec::serial || radius < 2) {
    std::vector<CrossingSearch::Key> found;
    search.search(id, id, -1, 0, radius, found);
    classes.insert(found.begin(), found.end());
  } else {
    // Words of length < 2 are visited here; each length-2 prefix is a task.
    std::vector<CrossingSearch::Key> found;
    struct Prefix {
      M2<i64> g, gi;
      int last;
    };
    std::vector<Prefix> prefixes;
    search.search(id, id, -1, 0, 0, found);
    for (int i = 0; i < 4; ++i) {
      const auto& l = kGens[static_cast<std::size_t>(i)];
      const auto& li = kGens[static_cast<std::size_t>(inverse_index(i))];
      search.search(l, li, i, 1, 1, found);
      for (int j = 0; j < 4; ++j) {
        if (j == inverse_index(i)) continue;
        const auto& l2 = kGens[static_cast<std::size_t>(j)];
        const auto& l2i = kGens[static_cast<std::size_t>(inverse_index(j))];
        prefixes.push_back({mul(l, l2), mul(l2i, li), j});
      }
    }
    classes.insert(found.begin(), found.end());
    std::vector<std::vector<CrossingSearch::Key>> parts(prefixes.size());
    const long n = static_cast<long>(prefixes.size());
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < n; ++k) {
      const auto& p = prefixes[static_cast<std::size_t>(k)];
      search.search(p.g, p.gi, p.last, 2, radius, parts[static_cast<std::size_t>(k)]);
    }
    for (const auto& part : parts) classes.insert(part.begin(), part.end());
  }

  if (classes.size() % 2 != 0) {
    throw std::logic_error("odd number of crossing classes; search radius too small");
  }
  return {classes.size() / 2, radius, classes.size()};
}

SelfIntersection self_intersection(const GroupWord& w, FuchsianGroup group, std::size_t extra_radius,
                                   Exec exec) {
  if (group != FuchsianGroup::modular_torus) throw InputError("unsupported Fuchsian group");
  const std::size_t radius = 2 * w.length() + extra_radius;
  const SelfIntersection base = self_intersection_at_radius(w, radius, exec);
  const SelfIntersection wider = self_intersection_at_radius(w, radius + 2, exec);
  if (base.count != wider.count) {
    throw std::logic_error("self-intersection count not stable under radius + 2");
  }
  return base;
}

}  // namespace fig8
