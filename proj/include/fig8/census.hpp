#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fig8/exec.hpp"

namespace fig8 {

// Slope p/q of a simple closed curve on the punctured torus, in lowest
// terms with q > 0, or 1/0.
struct Slope {
  std::int64_t p = 0;
  std::int64_t q = 1;

  static Slope make(std::int64_t p, std::int64_t q);
  std::string str() const;
  auto operator<=>(const Slope&) const = default;
};

// |p1 q2 - p2 q1| == 1.
bool farey_neighbors(const Slope& s, const Slope& t);

// Fricke trace coordinates (x, y, z) = (tr a, tr b, tr ab) of a cusped
// punctured torus, labelled by the slopes of the three curves.
struct TraceTriple {
  std::array<double, 3> coord{3.0, 3.0, 3.0};
  std::array<Slope, 3> slope{Slope{0, 1}, Slope{1, 0}, Slope{1, 1}};

  // The modular torus (3, 3, 3) with slopes 0/1, 1/0, 1/1.
  static TraceTriple modular();
  // Validates min coordinate >= 3 and x^2 + y^2 + z^2 = xyz (relative 1e-9).
  static TraceTriple make(double x, double y, double z);

  double cusp_defect() const;
  bool integral() const;
};

// z -> xy - z on the chosen coordinate; the slope label becomes the other
// Farey combination of the two fixed slopes.
TraceTriple vieta_flip(const TraceTriple& t, int coordinate);

// Descends the Vieta tree to a triple that no flip makes smaller.
TraceTriple reduce_to_sink(const TraceTriple& t);

enum class Family { simple, paired_fig8, companion_fig8 };
std::string to_string(Family f);

struct GeodesicRecord {
  double trace = 0.0;
  double length = 0.0;
  Family family = Family::simple;
  // Slope of the simple geodesic (for figure-eights: of the parent).
  Slope slope;
  // 0 or 1 for the two paired figure-eights of one parent, 0 otherwise.
  int branch = 0;
  // Exact integer trace when the root is integral (modular torus).
  std::optional<std::int64_t> exact_trace;
};

// Order: trace, slope, family, branch.
bool record_less(const GeodesicRecord& a, const GeodesicRecord& b);

// Every simple closed geodesic with trace <= cutoff, once per slope, sorted by
// (trace, slope). Throws InputError when cutoff < 3.
std::vector<GeodesicRecord> enumerate_simple(const TraceTriple& root, double trace_cutoff,
                                             Exec exec = Exec::serial);

enum class CensusMode { paired, full };

// Geodesics with one double point and length <= cutoff: two records of trace
// 3t per simple geodesic of trace t, plus (full mode) one of trace t^2 + 2.
std::vector<GeodesicRecord> one_intersection_census(const TraceTriple& root, double length_cutoff,
                                                    CensusMode mode, Exec exec = Exec::serial);

enum class McShaneForm { length, trace };

struct SeriesSum {
  double sum = 0.0;
  std::size_t terms = 0;
};

// 1 - sqrt(1 - (c/t)^2), evaluated without cancellation.
double mcshane_trace_term(double c_over_t);

// Partial McShane sum over simple geodesics with trace <= cutoff.
// Trace form targets 1, length form 1/2.
SeriesSum mcshane_sum(const TraceTriple& root, double trace_cutoff, McShaneForm form,
                      Exec exec = Exec::serial);

// Sum of 1 - sqrt(1 - (6/T)^2) over paired figure-eights with trace T <= cutoff.
// Equals 2 * mcshane_sum(cutoff / 3, trace) bit for bit.
SeriesSum mc2_sum(const TraceTriple& root, double trace_cutoff, Exec exec = Exec::serial);

struct CensusCounts {
  std::size_t simple = 0;
  std::size_t paired = 0;
  std::size_t full = 0;
};

// Counts of simple / paired / full-census geodesics with length <= L.
CensusCounts count_census(const TraceTriple& root, double length_cutoff, Exec exec = Exec::serial);

// Least-squares slope of log N against log L. Needs >= 4 points, each N >= 10.
double growth_exponent(std::span<const std::pair<double, double>> samples);

// trace,length,family,slope rows; 9 significant digits.
void write_records_csv(std::ostream& out, std::span<const GeodesicRecord> records);

}  // namespace fig8
