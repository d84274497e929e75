#include "fig8/census.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <numeric>
#include <set>

#include "fig8/error.hpp"
#include "fig8/hyperbolic.hpp"

namespace fig8 {

Slope Slope::make(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0) throw InputError("0/0 is not a slope");
  const std::int64_t g = std::gcd(p, q);
  p /= g;
  q /= g;
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  return Slope{p, q};
}

std::string Slope::str() const { return std::to_string(p) + "/" + std::to_string(q); }

bool farey_neighbors(const Slope& s, const Slope& t) {
  const std::int64_t d = s.p * t.q - t.p * s.q;
  return d == 1 || d == -1;
}

TraceTriple TraceTriple::modular() { return TraceTriple{}; }

TraceTriple TraceTriple::make(double x, double y, double z) {
  TraceTriple t;
  t.coord = {x, y, z};
  if (!(std::min({x, y, z}) >= 3.0)) throw InputError("trace coordinates must be >= 3");
  if (!(t.cusp_defect() <= 1e-9)) throw InputError("triple violates x^2 + y^2 + z^2 = xyz");
  return t;
}

double TraceTriple::cusp_defect() const {
  const auto [x, y, z] = coord;
  const double rhs = x * y * z;
  return std::fabs(x * x + y * y + z * z - rhs) / std::max(1.0, std::fabs(rhs));
}

bool TraceTriple::integral() const {
  return std::all_of(coord.begin(), coord.end(), [](double v) { return v == std::floor(v); });
}

namespace {

Slope flipped_slope(const Slope& keep1, const Slope& keep2, const Slope& old) {
  const Slope sum = Slope::make(keep1.p + keep2.p, keep1.q + keep2.q);
  if (sum != old) return sum;
  return Slope::make(keep1.p - keep2.p, keep1.q - keep2.q);
}

template <class Scalar>
struct Node {
  std::array<Scalar, 3> c;
  std::array<Slope, 3> s;
  int created;  // coordinate produced by the last flip, -1 at the sink
};

template <class Scalar>
Node<Scalar> flip(const Node<Scalar>& n, int i) {
  const int j = (i + 1) % 3, k = (i + 2) % 3;
  Node<Scalar> out = n;
  out.c[i] = n.c[j] * n.c[k] - n.c[i];
  out.s[i] = flipped_slope(n.s[j], n.s[k], n.s[i]);
  out.created = i;
  return out;
}

template <class Scalar>
GeodesicRecord make_simple(Scalar trace, const Slope& slope) {
  GeodesicRecord r;
  r.trace = static_cast<double>(trace);
  r.length = 2.0 * std::acosh(r.trace / 2.0);
  r.family = Family::simple;
  r.slope = slope;
  if constexpr (std::is_same_v<Scalar, std::int64_t>) r.exact_trace = trace;
  return r;
}

void sort_unique(std::vector<GeodesicRecord>& out) {
  std::sort(out.begin(), out.end(), record_less);
  // Duplicate slopes carry equal traces and end up adjacent.
  out.erase(std::unique(out.begin(), out.end(),
                        [](const GeodesicRecord& a, const GeodesicRecord& b) {
                          return a.slope == b.slope;
                        }),
            out.end());
}

template <class Scalar>
void expand_subtree(const Node<Scalar>& start, Scalar cutoff, std::vector<GeodesicRecord>& out) {
  std::vector<Node<Scalar>> stack{start};
  while (!stack.empty()) {
    Node<Scalar> n = stack.back();
    stack.pop_back();
    out.push_back(make_simple(n.c[n.created], n.s[n.created]));
    for (int i = 0; i < 3; ++i) {
      if (i == n.created) continue;
      Node<Scalar> child = flip(n, i);
      if (child.c[i] <= cutoff) stack.push_back(child);
    }
  }
}

// Serial reference: breadth-first traversal with slope deduplication.
template <class Scalar>
std::vector<GeodesicRecord> traverse_serial(const Node<Scalar>& sink, Scalar cutoff) {
  std::vector<GeodesicRecord> out;
  std::set<Slope> seen;
  auto emit = [&](Scalar trace, const Slope& s) {
    if (seen.insert(s).second) out.push_back(make_simple(trace, s));
  };
  std::deque<Node<Scalar>> queue;
  for (int i = 0; i < 3; ++i) {
    if (sink.c[i] <= cutoff) emit(sink.c[i], sink.s[i]);
    Node<Scalar> child = flip(sink, i);
    if (child.c[i] <= cutoff) queue.push_back(child);
  }
  while (!queue.empty()) {
    Node<Scalar> n = queue.front();
    queue.pop_front();
    emit(n.c[n.created], n.s[n.created]);
    for (int i = 0; i < 3; ++i) {
      if (i == n.created) continue;
      Node<Scalar> child = flip(n, i);
      if (child.c[i] <= cutoff) queue.push_back(child);
    }
  }
  std::sort(out.begin(), out.end(), record_less);
  return out;
}

// Parallel variant: peel a frontier of subtrees off the sink, then expand
// each subtree independently.
template <class Scalar>
std::vector<GeodesicRecord> traverse_parallel(const Node<Scalar>& sink, Scalar cutoff) {
  std::vector<GeodesicRecord> out;
  std::vector<Node<Scalar>> frontier;
  for (int i = 0; i < 3; ++i) {
    if (sink.c[i] <= cutoff) out.push_back(make_simple(sink.c[i], sink.s[i]));
    Node<Scalar> child = flip(sink, i);
    if (child.c[i] <= cutoff) frontier.push_back(child);
  }
  const std::size_t target = static_cast<std::size_t>(8 * thread_count());
  while (!frontier.empty() && frontier.size() < target) {
    std::vector<Node<Scalar>> next;
    for (const auto& n : frontier) {
      out.push_back(make_simple(n.c[n.created], n.s[n.created]));
      for (int i = 0; i < 3; ++i) {
        if (i == n.created) continue;
        Node<Scalar> child = flip(n, i);
        if (child.c[i] <= cutoff) next.push_back(child);
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<GeodesicRecord>> parts(frontier.size());
  const long count = static_cast<long>(frontier.size());
#pragma omp parallel for schedule(dynamic)
  for (long t = 0; t < count; ++t) {
    expand_subtree(frontier[static_cast<std::size_t>(t)], cutoff, parts[static_cast<std::size_t>(t)]);
  }
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  sort_unique(out);
  return out;
}

template <class Scalar>
std::vector<GeodesicRecord> traverse(const TraceTriple& sink, double cutoff, Exec exec) {
  Node<Scalar> n;
  for (int i = 0; i < 3; ++i) n.c[i] = static_cast<Scalar>(sink.coord[i]);
  n.s = sink.slope;
  n.created = -1;
  Scalar cut;
  if constexpr (std::is_same_v<Scalar, double>) {
    cut = cutoff;
  } else {
    cut = static_cast<Scalar>(std::floor(cutoff));
  }
  return exec == Exec::parallel ? traverse_parallel(n, cut) : traverse_serial(n, cut);
}

// Integer traversal is exact while every product x*y stays below 2^62.
constexpr double kExactCutoffLimit = 1.0e9;

}  // namespace

TraceTriple vieta_flip(const TraceTriple& t, int coordinate) {
  if (coordinate < 0 || coordinate > 2) throw InputError("coordinate index must be 0, 1 or 2");
  Node<double> n{t.coord, t.slope, -1};
  Node<double> f = flip(n, coordinate);
  TraceTriple out;
  out.coord = f.c;
  out.slope = f.s;
  return out;
}

TraceTriple reduce_to_sink(const TraceTriple& t) {
  TraceTriple cur = t;
  for (int guard = 0; guard < 10000; ++guard) {
    int best = -1;
    double best_value = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double v = cur.coord[(i + 1) % 3] * cur.coord[(i + 2) % 3] - cur.coord[i];
      if (v < cur.coord[i] && (best < 0 || cur.coord[i] - v > best_value)) {
        best = i;
        best_value = cur.coord[i] - v;
      }
    }
    if (best < 0) return cur;
    cur = vieta_flip(cur, best);
  }
  throw DomainError("Vieta descent did not terminate; root is not a cusped torus triple");
}

std::string to_string(Family f) {
  switch (f) {
    case Family::simple: return "simple";
    case Family::paired_fig8: return "paired-fig8";
    case Family::companion_fig8: return "companion-fig8";
  }
  return "?";
}

bool record_less(const GeodesicRecord& a, const GeodesicRecord& b) {
  if (a.trace != b.trace) return a.trace < b.trace;
  if (a.slope != b.slope) return a.slope < b.slope;
  if (a.family != b.family) return a.family < b.family;
  return a.branch < b.branch;
}

std::vector<GeodesicRecord> enumerate_simple(const TraceTriple& root, double trace_cutoff, Exec exec) {
  if (!(trace_cutoff >= 3.0)) throw InputError("trace cutoff below the minimal simple trace 3");
  if (!(std::min({root.coord[0], root.coord[1], root.coord[2]}) >= 3.0)) {
    throw InputError("trace coordinates must be >= 3");
  }
  const TraceTriple sink = reduce_to_sink(root);
  if (sink.integral() && trace_cutoff < kExactCutoffLimit) {
    return traverse<std::int64_t>(sink, trace_cutoff, exec);
  }
  return traverse<double>(sink, trace_cutoff, exec);
}

std::vector<GeodesicRecord> one_intersection_census(const TraceTriple& root, double length_cutoff,
                                                    CensusMode mode, Exec exec) {
  if (!(length_cutoff >= 0.0)) throw InputError("length cutoff must be nonnegative");
  const double trace_cutoff = 2.0 * std::cosh(length_cutoff / 2.0);
  double parent_cutoff = trace_cutoff / 3.0;
  if (mode == CensusMode::full) parent_cutoff = std::max(parent_cutoff, std::sqrt(trace_cutoff - 2.0));
  std::vector<GeodesicRecord> out;
  if (parent_cutoff < 3.0) return out;
  for (const auto& parent : enumerate_simple(root, parent_cutoff, exec)) {
    GeodesicRecord r = parent;
    r.family = Family::paired_fig8;
    r.trace = 3.0 * parent.trace;
    r.length = 2.0 * std::acosh(r.trace / 2.0);
    if (parent.exact_trace) r.exact_trace = 3 * *parent.exact_trace;
    if (r.length <= length_cutoff) {
      r.branch = 0;
      out.push_back(r);
      r.branch = 1;
      out.push_back(r);
    }
    if (mode == CensusMode::full) {
      GeodesicRecord c = parent;
      c.family = Family::companion_fig8;
      c.trace = parent.trace * parent.trace + 2.0;
      c.length = 2.0 * std::acosh(c.trace / 2.0);
      if (parent.exact_trace) c.exact_trace = *parent.exact_trace * *parent.exact_trace + 2;
      if (c.length <= length_cutoff) out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end(), record_less);
  return out;
}

double mcshane_trace_term(double c_over_t) {
  const double r2 = c_over_t * c_over_t;
  return r2 / (1.0 + std::sqrt(1.0 - r2));
}

SeriesSum mcshane_sum(const TraceTriple& root, double trace_cutoff, McShaneForm form, Exec exec) {
  SeriesSum s;
  for (const auto& r : enumerate_simple(root, trace_cutoff, exec)) {
    s.sum += form == McShaneForm::trace ? mcshane_trace_term(2.0 / r.trace)
                                        : 1.0 / (std::exp(r.length) + 1.0);
    ++s.terms;
  }
  return s;
}

SeriesSum mc2_sum(const TraceTriple& root, double trace_cutoff, Exec exec) {
  if (!(trace_cutoff >= 9.0)) throw InputError("mc2 cutoff below the minimal paired trace 9");
  SeriesSum s;
  for (const auto& parent : enumerate_simple(root, trace_cutoff / 3.0, exec)) {
    // Both paired figure-eights of this parent have trace 3t; adding the pair
    // as 2 * term keeps the running sum an exact doubling of the simple sum.
    s.sum += 2.0 * mcshane_trace_term(6.0 / (3.0 * parent.trace));
    s.terms += 2;
  }
  return s;
}

CensusCounts count_census(const TraceTriple& root, double length_cutoff, Exec exec) {
  if (!(length_cutoff > 0.0)) throw InputError("length cutoff must be positive");
  CensusCounts c;
  const double trace_cutoff = 2.0 * std::cosh(length_cutoff / 2.0);
  if (trace_cutoff >= 3.0) {
    for (const auto& r : enumerate_simple(root, trace_cutoff, exec)) {
      if (r.length <= length_cutoff) ++c.simple;
    }
  }
  for (const auto& r : one_intersection_census(root, length_cutoff, CensusMode::full, exec)) {
    if (r.family == Family::paired_fig8) ++c.paired;
    ++c.full;
  }
  return c;
}

double growth_exponent(std::span<const std::pair<double, double>> samples) {
  if (samples.size() < 4) throw InputError("growth fit needs at least 4 samples");
  double mx = 0.0, my = 0.0;
  for (const auto& [l, n] : samples) {
    if (!(l > 0.0) || !(n >= 10.0)) throw InputError("growth fit needs L > 0 and N >= 10");
    mx += std::log(l);
    my += std::log(n);
  }
  mx /= static_cast<double>(samples.size());
  my /= static_cast<double>(samples.size());
  double sxy = 0.0, sxx = 0.0;
  for (const auto& [l, n] : samples) {
    const double dx = std::log(l) - mx;
    sxy += dx * (std::log(n) - my);
    sxx += dx * dx;
  }
  if (sxx == 0.0) throw InputError("growth fit needs distinct L values");
  return sxy / sxx;
}

void write_records_csv(std::ostream& out, std::span<const GeodesicRecord> records) {
  out << "trace,length,family,slope\n";
  char buf[64];
  for (const auto& r : records) {
    std::snprintf(buf, sizeof buf, "%.9g", r.trace);
    out << buf << ',';
    std::snprintf(buf, sizeof buf, "%.9g", r.length);
    out << buf << ',' << to_string(r.family) << ',' << r.slope.str() << '\n';
  }
}

}  // namespace fig8
