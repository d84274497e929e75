#include "fig8/covers.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "fig8/characters.hpp"
#include "fig8/error.hpp"

namespace fig8 {

CoverSpec CoverSpec::make(int genus, std::vector<Partition> classes) {
  if (genus < 0) throw InputError("genus must be nonnegative");
  if (classes.empty()) throw InputError("at least one boundary class is required");
  for (const auto& c : classes) {
    if (c.size() != classes.front().size()) throw InputError("boundary classes of different degree");
  }
  return CoverSpec{genus, std::move(classes)};
}

std::string to_string(Decision d) {
  switch (d) {
    case Decision::extends:
      return "extends";
    case Decision::does_not_extend:
      return "does-not-extend";
    case Decision::unknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

Permutation product(const std::vector<Permutation>& ps, int n) {
  Permutation acc = Permutation::identity(n);
  for (const auto& p : ps) acc = acc * p;
  return acc;
}

std::size_t group_order(const std::vector<Permutation>& gens, int n, std::size_t limit) {
  return generated_group(gens, n, limit).size();
}

}  // namespace

bool CoverWitness::relation_holds() const {
  if (boundary.empty()) return false;
  const int n = boundary.front().degree();
  if (handles.size() % 2 != 0) return false;
  Permutation acc = Permutation::identity(n);
  for (std::size_t j = 0; j < handles.size(); j += 2) acc = acc * commutator(handles[j], handles[j + 1]);
  return (acc * product(boundary, n)).is_identity();
}

std::vector<Permutation> CoverWitness::generators() const {
  std::vector<Permutation> g = handles;
  g.insert(g.end(), boundary.begin(), boundary.end());
  return g;
}

std::pair<Permutation, Permutation> two_n_cycles(const Permutation& sigma) {
  if (sigma.parity() == Parity::odd) throw DomainError("two_n_cycles needs an even permutation");
  const int n = sigma.degree();
  if (n <= 1) return {Permutation::identity(n), Permutation::identity(n)};

  // Build c1 as the path 0 -> path[1] -> ... ; each edge c1(a) = b fixes
  // c2(b) = sigma(a), since c2 = c1^-1 * sigma.
  std::vector<int> c1(static_cast<std::size_t>(n), -1), c2(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::vector<char> c2_hit(static_cast<std::size_t>(n), 0);

  std::function<bool(int, int)> dfs = [&](int a, int depth) -> bool {
    if (depth == n) {
      // Close c1 back to 0.
      const int v = sigma(a);
      if (c2_hit[static_cast<std::size_t>(v)]) return false;
      c1[static_cast<std::size_t>(a)] = 0;
      c2[0] = v;
      if (Permutation(c2).is_full_cycle()) return true;
      c1[static_cast<std::size_t>(a)] = -1;
      c2[0] = -1;
      return false;
    }
    for (int b = 1; b < n; ++b) {
      if (used[static_cast<std::size_t>(b)]) continue;
      const int v = sigma(a);
      if (c2_hit[static_cast<std::size_t>(v)]) continue;
      // Reject c2(b) = v if it closes a c2-cycle shorter than n.
      int x = v, steps = 1;
      while (x != b && c2[static_cast<std::size_t>(x)] >= 0) {
        x = c2[static_cast<std::size_t>(x)];
        ++steps;
      }
      if (x == b && steps < n) continue;
      used[static_cast<std::size_t>(b)] = 1;
      c1[static_cast<std::size_t>(a)] = b;
      c2[static_cast<std::size_t>(b)] = v;
      c2_hit[static_cast<std::size_t>(v)] = 1;
      if (dfs(b, depth + 1)) return true;
      used[static_cast<std::size_t>(b)] = 0;
      c1[static_cast<std::size_t>(a)] = -1;
      c2[static_cast<std::size_t>(b)] = -1;
      c2_hit[static_cast<std::size_t>(v)] = 0;
    }
    return false;
  };
  used[0] = 1;
  if (!dfs(0, 1)) throw std::logic_error("no factorization into two n-cycles found");
  Permutation p1(c1), p2(c2);
  if (!(p1 * p2 == sigma) || !p1.is_full_cycle() || !p2.is_full_cycle()) {
    throw std::logic_error("two_n_cycles verification failed");
  }
  return {p1, p2};
}

std::pair<Permutation, Permutation> commutator_witness(const Permutation& sigma) {
  if (sigma.parity() == Parity::odd) throw DomainError("commutator_witness needs an even permutation");
  const int n = sigma.degree();
  if (sigma.is_identity()) return {Permutation::identity(n), Permutation::identity(n)};
  auto [c1, c2] = two_n_cycles(sigma);
  // beta maps the cycle of c2 onto the cycle of c1^-1, so that
  // beta c1^-1 beta^-1 = c2 and sigma = c1 c2 = [c1, beta].
  const Permutation c1i = c1.inverse();
  std::vector<int> beta(static_cast<std::size_t>(n));
  int y = 0, x = 0;
  for (int j = 0; j < n; ++j) {
    beta[static_cast<std::size_t>(y)] = x;
    y = c2(y);
    x = c1i(x);
  }
  Permutation b(beta);
  if (!(commutator(c1, b) == sigma)) throw std::logic_error("commutator_witness verification failed");
  return {c1, b};
}

namespace {

// Backtracking over boundary tuples with s1 fixed to its class representative
// (simultaneous conjugation preserves everything we test).
class TupleSearch {
 public:
  TupleSearch(const std::vector<Partition>& classes, bool close_product, std::size_t budget)
      : classes_(classes), close_(close_product), budget_(budget), n_(classes.front().size()) {
    for (std::size_t i = 1; i < classes.size(); ++i) elements_.push_back(class_elements(classes[i]));
  }

  // Calls `accept` on each tuple until it returns true. Returns false if the
  // node budget ran out.
  bool run(const std::function<bool(const std::vector<Permutation>&)>& accept, bool& found) {
    found = false;
    const Permutation first = class_representative(classes_.front());
    std::vector<Permutation> tuple{first};
    tuple.reserve(classes_.size());
    return rec(tuple, first, accept, found);
  }

  std::size_t nodes() const { return nodes_; }

 private:
  bool rec(std::vector<Permutation>& tuple, const Permutation& prefix,
           const std::function<bool(const std::vector<Permutation>&)>& accept, bool& found) {
    if (++nodes_ > budget_) return false;
    const std::size_t k = classes_.size();
    if (close_ && tuple.size() + 1 == k) {
      Permutation last = prefix.inverse();
      if (last.cycle_type() != classes_.back()) return true;
      tuple.push_back(last);
      found = accept(tuple);
      tuple.pop_back();
      return true;
    }
    if (tuple.size() == k) {
      if (close_ && !prefix.is_identity()) return true;
      found = accept(tuple);
      return true;
    }
    for (const auto& p : elements_[tuple.size() - 1]) {
      tuple.push_back(p);
      const bool ok = rec(tuple, prefix * p, accept, found);
      tuple.pop_back();
      if (!ok) return false;
      if (found) return true;
    }
    return true;
  }

  std::vector<Partition> classes_;
  bool close_;
  std::size_t budget_;
  int n_;
  std::vector<std::vector<Permutation>> elements_;
  std::size_t nodes_ = 0;
};

constexpr int kMaxEnumerationDegree = 10;

}  // namespace

CoverDecision extends_cover(const CoverSpec& spec, const ExtendOptions& opts) {
  const int n = spec.degree();
  CoverDecision out;
  if (spec.genus == 0) {
    const bool any = frobenius_count(spec.boundary_classes) > 0;
    if (!any) {
      out.decision = Decision::does_not_extend;
      return out;
    }
    out.decision = opts.transitive_only ? Decision::unknown : Decision::extends;
    if (n > kMaxEnumerationDegree) return out;
    TupleSearch search(spec.boundary_classes, true, opts.node_budget);
    bool found = false;
    const bool finished = search.run(
        [&](const std::vector<Permutation>& t) {
          if (opts.transitive_only && !is_transitive(t, n)) return false;
          out.witness = CoverWitness{{}, t};
          return true;
        },
        found);
    if (found) {
      out.decision = Decision::extends;
    } else if (finished && opts.transitive_only) {
      out.decision = Decision::does_not_extend;
    }
    return out;
  }

  int parity = 0;
  for (const auto& c : spec.boundary_classes) parity += class_parity(c) == Parity::odd ? 1 : 0;
  if (parity % 2 != 0) {
    out.decision = Decision::does_not_extend;
    return out;
  }
  CoverWitness w;
  for (const auto& c : spec.boundary_classes) w.boundary.push_back(class_representative(c));
  const Permutation target = product(w.boundary, n).inverse();
  if (target.is_identity()) {
    // [c, e] = e with c an n-cycle keeps the image transitive.
    w.handles = {class_representative(Partition::single(n)), Permutation::identity(n)};
  } else {
    auto [alpha, beta] = commutator_witness(target);
    w.handles = {alpha, beta};
  }
  for (int j = 1; j < spec.genus; ++j) {
    w.handles.push_back(Permutation::identity(n));
    w.handles.push_back(Permutation::identity(n));
  }
  if (!w.relation_holds()) throw std::logic_error("extends_cover witness fails the relation");
  out.decision = Decision::extends;
  out.witness = std::move(w);
  return out;
}

StripCover strip_cover(const Permutation& sigma, const Permutation& tau) {
  if (sigma.degree() != tau.degree()) throw InputError("strip_cover: degree mismatch");
  if (!sigma.is_full_cycle()) throw InputError("strip_cover: sigma must be an n-cycle");
  StripCover s;
  s.degree = sigma.degree();
  s.sigma = sigma;
  s.tau = tau;
  s.boundary_monodromy = commutator(sigma, tau);
  s.boundary_components = s.boundary_monodromy.num_cycles();
  s.euler_characteristic = -s.degree;
  // chi = 2 - 2g - b for the connected cover.
  const int twice_genus = 2 - s.euler_characteristic - static_cast<int>(s.boundary_components);
  if (twice_genus < 0 || twice_genus % 2 != 0) throw std::logic_error("strip_cover: Euler characteristic mismatch");
  s.genus = twice_genus / 2;
  return s;
}

Permutation monodromy_of(const GroupWord& w, const Monodromy& images) {
  if (images.empty()) throw InputError("empty monodromy");
  const int n = images.begin()->second.degree();
  Permutation acc = Permutation::identity(n);
  for (char c : w.str()) {
    auto it = images.find(generator_of(c));
    if (it == images.end()) throw InputError(std::string("unassigned generator '") + generator_of(c) + "'");
    if (it->second.degree() != n) throw InputError("monodromy degree mismatch");
    acc = acc * (is_inverse_letter(c) ? it->second.inverse() : it->second);
  }
  return acc;
}

std::vector<std::size_t> boundary_lift_components(const Monodromy& images,
                                                  const std::vector<GroupWord>& boundary_words) {
  std::vector<std::size_t> out;
  for (const auto& w : boundary_words) out.push_back(monodromy_of(w, images).num_cycles());
  return out;
}

namespace {

using Group = std::vector<Permutation>;  // sorted element list

Group sorted_group(const std::vector<Permutation>& gens, int n, std::size_t limit) {
  Group g = generated_group(gens, n, limit);
  std::sort(g.begin(), g.end());
  return g;
}

// All subgroups of S_n of order `order` containing the group generated by
// `base`.
std::vector<Group> overgroups(const std::vector<Permutation>& base, int n, std::size_t order,
                              std::size_t& nodes, std::size_t budget, bool& exhausted) {
  std::vector<Permutation> all;
  {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
    do all.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
  }
  std::set<Group> seen;
  std::vector<std::pair<Group, std::vector<Permutation>>> frontier;
  Group start = sorted_group(base, n, order);
  if (start.size() > order || order % start.size() != 0) return {};
  seen.insert(start);
  frontier.emplace_back(start, base);
  std::vector<Group> out;
  while (!frontier.empty()) {
    auto [h, gens] = frontier.back();
    frontier.pop_back();
    if (h.size() == order) {
      out.push_back(h);
      continue;
    }
    for (const auto& x : all) {
      if (++nodes > budget) {
        exhausted = true;
        return out;
      }
      if (std::binary_search(h.begin(), h.end(), x)) continue;
      std::vector<Permutation> g2 = gens;
      g2.push_back(x);
      Group k = sorted_group(g2, n, order);
      if (k.size() > order || order % k.size() != 0) continue;
      if (seen.insert(k).second) frontier.emplace_back(std::move(k), std::move(g2));
    }
  }
  return out;
}

}  // namespace

RegularDecision regular_extends(const CoverSpec& spec, const RegularOptions& opts) {
  RegularDecision out;
  const int n = spec.degree();
  if (n > opts.max_degree || n > kMaxEnumerationDegree) return out;
  const std::size_t order = static_cast<std::size_t>(n);
  std::size_t nodes = 0;
  bool exhausted = false;

  auto finish = [&](CoverWitness w) {
    out.decision = Decision::extends;
    out.group_order = group_order(w.generators(), n, order + 1);
    out.acts_regularly = is_transitive(w.generators(), n);
    out.witness = std::move(w);
    return true;
  };

  TupleSearch search(spec.boundary_classes, spec.genus == 0, opts.node_budget);
  bool found = false;
  const bool finished = search.run(
      [&](const std::vector<Permutation>& boundary) {
        if (exhausted) return false;
        const Group h0 = sorted_group(boundary, n, order);
        if (h0.size() > order || order % h0.size() != 0) return false;
        if (spec.genus == 0) {
          if (h0.size() != order) return false;
          return finish(CoverWitness{{}, boundary});
        }
        const Permutation target = product(boundary, n).inverse();
        for (const Group& g : overgroups(boundary, n, order, nodes, opts.node_budget, exhausted)) {
          // Handles (a_1, b_1, ..., a_g, b_g) in g with product of
          // commutators equal to target, generating g together with the
          // boundary images.
          const std::size_t slots = 2 * static_cast<std::size_t>(spec.genus);
          std::vector<std::size_t> idx(slots, 0);
          for (;;) {
            if (++nodes > opts.node_budget) {
              exhausted = true;
              return false;
            }
            std::vector<Permutation> handles;
            Permutation acc = Permutation::identity(n);
            for (std::size_t j = 0; j < slots; ++j) handles.push_back(g[idx[j]]);
            for (std::size_t j = 0; j < slots; j += 2) acc = acc * commutator(handles[j], handles[j + 1]);
            if (acc == target) {
              CoverWitness w{handles, boundary};
              if (group_order(w.generators(), n, order + 1) == order) return finish(std::move(w));
            }
            std::size_t j = 0;
            while (j < slots && ++idx[j] == g.size()) idx[j++] = 0;
            if (j == slots) break;
          }
          if (exhausted) return false;
        }
        return false;
      },
      found);
  if (found) return out;
  out.decision = (finished && !exhausted) ? Decision::does_not_extend : Decision::unknown;
  return out;
}

PermRepresentation stallings_excluding_subgroup(const GroupWord& w, int rank) {
  if (w.empty()) throw DomainError("stallings_excluding_subgroup: trivial word");
  if (rank < 1 || rank > 26) throw InputError("rank must be in 1..26");
  const int d = static_cast<int>(w.length()) + 1;
  std::vector<std::vector<int>> out(static_cast<std::size_t>(rank), std::vector<int>(static_cast<std::size_t>(d), -1));
  std::vector<std::vector<int>> in(static_cast<std::size_t>(rank), std::vector<int>(static_cast<std::size_t>(d), -1));
  for (int i = 0; i < d - 1; ++i) {
    const char c = w[static_cast<std::size_t>(i)];
    const int g = generator_of(c) - 'a';
    if (g >= rank) throw InputError(std::string("letter '") + c + "' beyond the rank");
    const int from = is_inverse_letter(c) ? i + 1 : i;
    const int to = is_inverse_letter(c) ? i : i + 1;
    auto& o = out[static_cast<std::size_t>(g)];
    auto& n = in[static_cast<std::size_t>(g)];
    if (o[static_cast<std::size_t>(from)] >= 0 || n[static_cast<std::size_t>(to)] >= 0) {
      throw InputError("word is not freely reduced");
    }
    o[static_cast<std::size_t>(from)] = to;
    n[static_cast<std::size_t>(to)] = from;
  }
  PermRepresentation rep;
  rep.degree = d;
  for (int g = 0; g < rank; ++g) {
    auto& o = out[static_cast<std::size_t>(g)];
    const auto& n = in[static_cast<std::size_t>(g)];
    std::vector<int> free_dom, free_rng;
    for (int p = 0; p < d; ++p) {
      if (o[static_cast<std::size_t>(p)] < 0) free_dom.push_back(p);
      if (n[static_cast<std::size_t>(p)] < 0) free_rng.push_back(p);
    }
    for (std::size_t k = 0; k < free_dom.size(); ++k) o[static_cast<std::size_t>(free_dom[k])] = free_rng[k];
    rep.images.emplace(static_cast<char>('a' + g), Permutation(o));
  }
  rep.endpoint = monodromy_of(w, rep.images)(0);
  if (rep.endpoint == 0) throw std::logic_error("stallings completion fixes the basepoint");
  return rep;
}

}  // namespace fig8
