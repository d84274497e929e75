#include "fig8/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "fig8/census.hpp"
#include "fig8/characters.hpp"
#include "fig8/covers.hpp"
#include "fig8/error.hpp"
#include "fig8/exec.hpp"
#include "fig8/genus2.hpp"
#include "fig8/hyperbolic.hpp"
#include "fig8/lps.hpp"
#include "fig8/magnus.hpp"
#include "fig8/random_words.hpp"
#include "fig8/resfin.hpp"
#include "fig8/selfint.hpp"

namespace fig8::cli {

namespace {

using nlohmann::json;

struct Common {
  std::optional<std::uint64_t> seed;
  int threads = 0;
  std::string format;
  std::string output;
};

struct Result {
  int code = kPositive;
  std::string artifact;
};

std::string fmt9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

json base_json(const Common& c) { return json{{"schema", 1}, {"seed", c.seed.value_or(0)}}; }

Result json_result(const json& j, int code = kPositive) { return {code, j.dump(2) + "\n"}; }

std::string csv_preamble(const Common& c) { return "# seed=" + std::to_string(c.seed.value_or(0)) + "\n"; }

std::uint64_t require_seed(const Common& c) {
  if (!c.seed) throw InputError("this subcommand is randomized: --seed is required");
  return *c.seed;
}

Exec exec_of() { return thread_count() > 1 ? Exec::parallel : Exec::serial; }

std::string want_format(const Common& c, const std::string& fallback, std::initializer_list<const char*> allowed) {
  const std::string f = c.format.empty() ? fallback : c.format;
  for (const char* a : allowed) {
    if (f == a) return f;
  }
  throw InputError("unsupported --format '" + f + "' for this subcommand");
}

std::vector<Partition> parse_classes(const std::vector<std::string>& items) {
  std::vector<Partition> out;
  for (const auto& item : items) {
    std::size_t pos = 0;
    for (;;) {
      const std::size_t end = item.find(';', pos);
      out.push_back(Partition::parse(item.substr(pos, end == std::string::npos ? std::string::npos : end - pos)));
      if (end == std::string::npos) break;
      pos = end + 1;
    }
  }
  if (out.empty()) throw InputError("--classes is required");
  return out;
}

TraceTriple parse_root(const std::string& text) {
  if (text.empty()) return TraceTriple::modular();
  std::vector<double> v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw InputError("bad --root '" + text + "'");
    }
  }
  if (v.size() != 3) throw InputError("--root needs three traces x,y,z");
  return TraceTriple::make(v[0], v[1], v[2]);
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw InputError("bad number list '" + text + "'");
    }
  }
  return v;
}

json perms_json(const std::vector<Permutation>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.str());
  return a;
}

json matrix_json(const IntMatrix& m) {
  json a = json::array();
  for (const auto& row : m) a.push_back(row);
  return a;
}

int decision_code(Decision d) {
  switch (d) {
    case Decision::extends:
      return kPositive;
    case Decision::does_not_extend:
      return kNegative;
    case Decision::unknown:
      return kUnknown;
  }
  return kUnknown;
}

json decision_json(Decision d) {
  if (d == Decision::unknown) return nullptr;
  return d == Decision::extends;
}

// Options are bound to locals that the handler captures.
struct Command {
  CLI::App* app;
  std::function<Result()> handler;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed geodesics, surface covers and residual finiteness toolkit", "fig8"};
  app.require_subcommand(1);
  Common common;
  std::vector<Command> commands;

  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--seed", common.seed, "Random seed (required by randomized subcommands)");
    sub->add_option("--threads", common.threads, "Worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);
    sub->add_option("--format", common.format, "Output format: json or csv");
    sub->add_option("--output", common.output, "Write the artifact to this file");
    return sub;
  };

  // census
  double census_cutoff = 0;
  std::string census_mode = "paired", census_root;
  {
    auto* s = add("census", "Geodesics with at most one double point, by length");
    s->add_option("--cutoff", census_cutoff, "Length cutoff")->required();
    s->add_option("--mode", census_mode, "simple, paired or full");
    s->add_option("--root", census_root, "Fricke triple x,y,z (default 3,3,3)");
    commands.push_back({s, [&]() -> Result {
      const TraceTriple root = parse_root(census_root);
      std::vector<GeodesicRecord> records;
      if (census_mode == "simple") {
        records = enumerate_simple(root, length_trace_convert(census_cutoff, Convert::length_to_trace), exec_of());
      } else if (census_mode == "paired" || census_mode == "full") {
        records = one_intersection_census(root, census_cutoff,
                                          census_mode == "paired" ? CensusMode::paired : CensusMode::full, exec_of());
      } else {
        throw InputError("--mode must be simple, paired or full");
      }
      const std::string f = want_format(common, "csv", {"csv", "json"});
      if (f == "csv") {
        std::ostringstream os;
        os << csv_preamble(common);
        write_records_csv(os, records);
        return {kPositive, os.str()};
      }
      json j = base_json(common);
      j["cutoff"] = census_cutoff;
      j["mode"] = census_mode;
      json rows = json::array();
      for (const auto& r : records) {
        rows.push_back({{"trace", r.trace}, {"length", r.length}, {"family", to_string(r.family)},
                        {"slope", r.slope.str()}});
      }
      j["records"] = rows;
      return json_result(j);
    }});
  }

  // counts
  std::string counts_lengths;
  {
    auto* s = add("counts", "N0, N1 paired and N1 full against length, with the growth slope");
    s->add_option("--lengths", counts_lengths, "Comma-separated length cutoffs")->required();
    s->add_option("--root", census_root, "Fricke triple x,y,z (default 3,3,3)");
    commands.push_back({s, [&]() -> Result {
      const TraceTriple root = parse_root(census_root);
      const auto lengths = parse_doubles(counts_lengths);
      if (lengths.empty()) throw InputError("empty series");
      std::vector<std::pair<double, double>> series;
      std::vector<CensusCounts> counts;
      for (double L : lengths) {
        counts.push_back(count_census(root, L, exec_of()));
        series.emplace_back(L, static_cast<double>(counts.back().simple));
      }
      const std::string f = want_format(common, "csv", {"csv", "json"});
      if (f == "csv") {
        std::string s = csv_preamble(common) + "L,N0,N1_paired,N1_full\n";
        for (std::size_t i = 0; i < lengths.size(); ++i) {
          s += fmt9(lengths[i]) + "," + std::to_string(counts[i].simple) + "," + std::to_string(counts[i].paired) +
               "," + std::to_string(counts[i].full) + "\n";
        }
        return {kPositive, s};
      }
      json j = base_json(common);
      json rows = json::array();
      for (std::size_t i = 0; i < lengths.size(); ++i) {
        rows.push_back({{"L", lengths[i]}, {"N0", counts[i].simple}, {"N1_paired", counts[i].paired},
                        {"N1_full", counts[i].full}});
      }
      j["counts"] = rows;
      try {
        j["growth_exponent"] = growth_exponent(series);
      } catch (const InputError&) {
        j["growth_exponent"] = nullptr;
      }
      return json_result(j);
    }});
  }

  // mcshane
  double mc_cutoff = 0;
  std::string mc_form = "trace";
  {
    auto* s = add("mcshane", "Partial McShane sum over simple geodesics");
    s->add_option("--cutoff", mc_cutoff, "Trace cutoff")->required();
    s->add_option("--form", mc_form, "trace or length");
    s->add_option("--root", census_root, "Fricke triple x,y,z (default 3,3,3)");
    commands.push_back({s, [&]() -> Result {
      want_format(common, "json", {"json"});
      McShaneForm form;
      if (mc_form == "trace") {
        form = McShaneForm::trace;
      } else if (mc_form == "length") {
        form = McShaneForm::length;
      } else {
        throw InputError("--form must be trace or length");
      }
      const SeriesSum r = mcshane_sum(parse_root(census_root), mc_cutoff, form, exec_of());
      json j = base_json(common);
      j["cutoff"] = mc_cutoff;
      j["form"] = mc_form;
      j["partial_sum"] = r.sum;
      j["terms"] = r.terms;
      return json_result(j);
    }});
  }

  // mc2
  {
    auto* s = add("mc2", "Partial sum over paired figure-eights (target 2)");
    s->add_option("--cutoff", mc_cutoff, "Trace cutoff")->required();
    s->add_option("--root", census_root, "Fricke triple x,y,z (default 3,3,3)");
    commands.push_back({s, [&]() -> Result {
      want_format(common, "json", {"json"});
      const SeriesSum r = mc2_sum(parse_root(census_root), mc_cutoff, exec_of());
      json j = base_json(common);
      j["cutoff"] = mc_cutoff;
      j["partial_sum"] = r.sum;
      j["terms"] = r.terms;
      return json_result(j);
    }});
  }

  // selfint
  std::string word;
  std::size_t selfint_extra = 4;
  {
    auto* s = add("selfint", "Self-intersection number of a closed geodesic on the modular torus");
    s->add_option("--word", word, "Cyclically reduced word over a, b")->required();
    s->add_option("--extra-radius", selfint_extra, "Search radius is 2|w| + this");
    commands.push_back({s, [&]() -> Result {
      want_format(common, "json", {"json"});
      const auto r = self_intersection(GroupWord::parse(word), FuchsianGroup::modular_torus, selfint_extra, exec_of());
      json j = base_json(common);
      j["word"] = word;
      j["self_intersection"] = r.count;
      j["radius"] = r.radius;
      j["crossing_classes"] = r.crossing_classes;
      return json_result(j);
    }});
  }

  // extend / regular-extend
  int genus = 0;
  std::vector<std::string> classes;
  bool transitive = false;
  std::size_t budget = 0;
  int max_degree = 8;
  {
    auto* s = add("extend", "Does a boundary covering extend over the surface?");
    s->add_option("--genus", genus, "Genus of the surface")->required();
    s->add_option("--classes", classes, "Boundary cycle types, e.g. \"2,1;3\" or repeated")->required();
    s->add_flag("--transitive", transitive, "Only connected covers");
    s->add_option("--budget", budget, "Backtracking node budget");
    commands.push_back({s, [&]() -> Result {
      want_format(common, "json", {"json"});
      const CoverSpec spec = CoverSpec::make(genus, parse_classes(classes));
      ExtendOptions opts;
      opts.transitive_only = transitive;
      if (budget) opts.node_budget = budget;
      const CoverDecision d = extends_cover(spec, opts);
      json j = base_json(common);
      j["genus"] = genus;
      j["degree"] = spec.degree();
      j["extends"] = decision_json(d.decision);
      j["decision"] = to_string(d.decision);
      j["reason"] = genus == 0 ? "product" : "parity";
      if (d.witness) {
        j["witness"] = {{"handles", perms_json(d.witness->handles)}, {"boundary", perms_json(d.witness->boundary)}};
      } else {
        j["witness"] = nullptr;
      }
      return json_result(j, decision_code(d.decision));
    }});
  }
  {
    auto* s = add("regular-extend", "Does the boundary covering extend to a cover with image of order n?");
    s->add_option("--genus", genus, "Genus of the surface")->required();
    s->add_option("--classes", classes, "Boundary cycle types")->required();
    s->add_option("--max-degree", max_degree, "Degrees above this report unknown");
    s->add_option("--budget", budget, "Search node budget");
    commands.push_back({s, [&]() -> Result {
      want_format(common, "json", {"json"});
      const CoverSpec spec = CoverSpec::make(genus, parse_classes(classes));
      RegularOptions opts;
      opts.max_degree = max_degree;
      if (budget) opts.node_budget = budget;
      const RegularDecision d = regular_extends(spec, opts);
      json j = base_json(common);
      j["genus"] = genus;
      j["degree"] = spec.degree();
      j["extends"] = decision_json(d.decision);
      j["decision"] = to_string(d.decision);
      if (d.witness) {
        j["witness"] = {{"handles", perms_json(d.witness->handles)}, {"boundary", perms_json(d.witness->boundary)}};
        j["group_order"] = d.group_order;
        j["acts_regularly"] = d.acts_regularly;
      } else {
        j["witness"] = nullptr;
      }
      return json_result(j, decision_code(d.decision));
    }});
  }

  // frobenius
  {
    auto* s = add("frobenius", "Number of tuples from the given classes with product e");
    s->add_option("--classes", classes, "Cycle types")->required();
    commands.push_back({s, [&]() -> Result {
      want_format(common, "json", {"json"});
      const auto cl = parse_classes(classes);
      json j = base_json(common);
      json names = json::array();
      for (const auto& c : cl) names.push_back(c.str());
      j["classes"] = names;
      j["count"] = frobenius_count(cl).get_str();
      return json_result(j);
    }});
  }

  // twocycles
  std::string perm_text, tau_text;
  int degree = 0;
  {
    auto* s = add("twocycles", "Even permutation as a product of two n-cycles and as a commutator");
    s->add_option("--perm", perm_text, "Cycle notation, e.g. \"(1 2)(3 4)\"")->required();
    s->add_option("--degree", degree, "Degree n (default: largest point)");
    commands.push_back({s, [&]() -> Result {
      want_format(common, "json", {"json"});
      const Permutation sigma = Permutation::parse(perm_text, degree);
      const auto [c1, c2] = two_n_cycles(sigma);
      const auto [alpha, beta] = commutator_witness(sigma);
      json j = base_json(common);
      j["sigma"] = sigma.str();
      j["degree"] = sigma.degree();
      j["c1"] = c1.str();
      j["c2"] = c2.str();
      j["alpha"] = alpha.str();
      j["beta"] = beta.str();
      return json_result(j);
    }});
  }

  // stripcover
  {
    auto* s = add("stripcover", "Punctured-torus cover from n squares glued in a row");
    s->add_option("--sigma", perm_text, "Horizontal gluing (an n-cycle)")->required();
    s->add_option("--tau", tau_text, "Vertical gluing")->required();
    s->add_option("--degree", degree, "Degree n (default: largest point)");
    commands.push_back({s, [&]() -> Result {
      want_format(common, "json", {"json"});
      const int n = std::max({degree, Permutation::parse(perm_text).degree(), Permutation::parse(tau_text).degree()});
      const StripCover c = strip_cover(Permutation::parse(perm_text, n), Permutation::parse(tau_text, n));
      json j = base_json(common);
      j["degree"] = c.degree;
      j["sigma"] = c.sigma.str();
      j["tau"] = c.tau.str();
      j["boundary_monodromy"] = c.boundary_monodromy.str();
      j["boundary_components"] = c.boundary_components;
      j["euler_characteristic"] = c.euler_characteristic;
      j["genus"] = c.genus;
      return json_result(j);
    }});
  }

  // stallings
  int rank = 2;
  {
    auto* s = add("stallings", "Finite permutation representation in which the word acts nontrivially");
    s->add_option("--word", word, "Freely reduced word")->required();
    s->add_option("--rank", rank, "Rank of the free group");
    commands.push_back({s, [&]() -> Result {
      want_format(common, "json", {"json"});
      std::string gens;
      for (int i = 0; i < rank && i < 26; ++i) gens += static_cast<char>('a' + i);
      const PermRepresentation r = stallings_excluding_subgroup(GroupWord::parse(word, Alphabet(gens)), rank);
      json j = base_json(common);
      j["word"] = word;
      j["degree"] = r.degree;
      json imgs = json::object();
      for (const auto& [g, p] : r.images) imgs[std::string(1, g)] = p.str();
      j["images"] = imgs;
      j["endpoint"] = r.endpoint + 1;
      return json_result(j);
    }});
  }

  // prime
  {
    auto* s = add("prime", "Least prime at which the Sanov image of a word is not the identity");
    s->add_option("--word", word, "Word over a, b")->required();
    commands.push_back({s, [&]() -> Result {
      want_format(common, "json", {"json"});
      const PrimeWitness p = smallest_excluding_prime(GroupWord::parse(word));
      json j = base_json(common);
      j["word"] = word;
      j["length"] = p.length;
      j["prime"] = p.prime;
      j["matrix_mod_p"] = p.image_mod_p.to_json();
      return json_result(j);
    }});
  }

  // prime-scatter
  std::size_t scatter_samples = 1000, max_length = 300;
  {
    auto* s = add("prime-scatter", "(length, prime) pairs for random words");
    s->add_option("--samples", scatter_samples, "Number of words");
    s->add_option("--max-length", max_length, "Words are uniform in the ball of this radius");
    commands.push_back({s, [&]() -> Result {
      const std::uint64_t seed = require_seed(common);
      want_format(common, "csv", {"csv"});
      if (scatter_samples == 0) throw InputError("empty series");
      std::vector<GroupWord> words;
      for (std::size_t i = 0; i < scatter_samples; ++i) {
        auto rng = sample_rng(seed, i);
        GroupWord w = random_word_in_ball(rng, Alphabet::free2(), max_length);
        while (w.empty()) w = random_word_in_ball(rng, Alphabet::free2(), max_length);
        words.push_back(std::move(w));
      }
      const auto primes = smallest_excluding_primes(words, exec_of());
      std::string csv = csv_preamble(common) + "length,prime\n";
      for (const auto& p : primes) csv += std::to_string(p.length) + "," + std::to_string(p.prime) + "\n";
      return {kPositive, csv};
    }});
  }

  // depth
  int max_k = 8;
  {
    auto* s = add("depth", "Lower central series depth by Magnus expansion");
    s->add_option("--word", word, "Word over a, b")->required();
    s->add_option("--max-k", max_k, "Largest degree examined");
    commands.push_back({s, [&]() -> Result {
      want_format(common, "json", {"json"});
      const auto d = lcs_depth(GroupWord::parse(word), max_k);
      json j = base_json(common);
      j["word"] = word;
      j["max_k"] = max_k;
      if (d) {
        j["depth"] = *d;
      } else {
        j["depth"] = "deeper";
      }
      return json_result(j);
    }});
  }

  // depth-table
  int max_j = 4;
  {
    auto* s = add("depth-table", "(k, index) table for the iterated brackets [..[a,b],..,b]");
    s->add_option("--max-j", max_j, "Largest number of brackets");
    commands.push_back({s, [&]() -> Result {
      want_format(common, "csv", {"csv"});
      if (max_j < 0) throw InputError("empty series");
      std::string csv = csv_preamble(common) + "k,word_length,modulus,ambient_index,image_order\n";
      for (int j = 0; j <= max_j; ++j) {
        const GroupWord w = iterated_bracket(j);
        const UnipotentWitness u = unipotent_witness(w, j + 1);
        csv += std::to_string(j + 1) + "," + std::to_string(w.length()) + "," + std::to_string(u.modulus) + "," +
               u.ambient_order.get_str() + "," + (u.image_order ? std::to_string(*u.image_order) : std::string()) + "\n";
      }
      return {kPositive, csv};
    }});
  }

  // witness
  int k = 0;
  {
    auto* s = add("witness", "Unipotent finite quotient detecting a word of depth k");
    s->add_option("--word", word, "Word over a, b")->required();
    s->add_option("--k", k, "Lower central depth of the word")->required();
    commands.push_back({s, [&]() -> Result {
      want_format(common, "json", {"json"});
      const UnipotentWitness u = unipotent_witness(GroupWord::parse(word), k);
      json j = base_json(common);
      j["word"] = word;
      j["k"] = k;
      j["monomial"] = u.monomial;
      j["coefficient"] = u.coefficient.get_str();
      j["modulus"] = u.modulus;
      j["image_a"] = matrix_json(u.image_a);
      j["image_b"] = matrix_json(u.image_b);
      j["image_word"] = matrix_json(u.image_w);
      j["ambient_index"] = u.ambient_order.get_str();
      if (u.image_order) {
        j["image_order"] = *u.image_order;
      } else {
        j["image_order"] = nullptr;
      }
      return json_result(j);
    }});
  }

  // expectedprime
  std::size_t terms = 9;
  {
    auto* s = add("expectedprime", "Expected least prime not dividing a random integer");
    s->add_option("--terms", terms, "Number of primes summed");
    commands.push_back({s, [&]() -> Result {
      want_format(common, "json", {"json"});
      const BigRational exact = expected_min_prime_exact(terms);
      json j = base_json(common);
      j["terms"] = terms;
      j["value"] = exact.get_d();
      j["exact"] = exact.get_str();
      return json_result(j);
    }});
  }

  // avgindex
  std::size_t radius = 20, samples = 10000;
  {
    auto* s = add("avgindex", "Average least excluding prime of abelianized random words");
    s->add_option("--rank", rank, "Rank of the free group");
    s->add_option("--radius", radius, "Words are uniform in the ball of this radius");
    s->add_option("--samples", samples, "Number of words");
    commands.push_back({s, [&]() -> Result {
      const std::uint64_t seed = require_seed(common);
      want_format(common, "json", {"json"});
      const AverageIndex a = average_index_simulation(rank, radius, samples, seed, exec_of());
      json j = base_json(common);
      j["rank"] = rank;
      j["radius"] = radius;
      j["mean"] = a.mean;
      j["samples"] = a.samples;
      j["excluded_zero_abelianization"] = a.excluded;
      return json_result(j);
    }});
  }

  // lpsgirth
  int p = 5, q = 13;
  {
    auto* s = add("lpsgirth", "Girth of the LPS Cayley graph against 4 log_p q - log_p 4");
    s->add_option("--p", p, "Prime p >= 5")->required();
    s->add_option("--q", q, "Prime q > 2p, p a non-residue mod q")->required();
    commands.push_back({s, [&]() -> Result {
      want_format(common, "json", {"json"});
      const LpsReport r = lps_girth_check(p, q);
      json j = base_json(common);
      j["p"] = r.p;
      j["q"] = r.q;
      j["generator_count"] = r.generator_count;
      j["group_order"] = r.group_order;
      j["even_half_order"] = r.even_half_order;
      j["girth"] = r.girth;
      j["bound"] = r.bound;
      j["bound_ceil"] = r.bound_ceil;
      j["pass"] = r.pass;
      return json_result(j, r.pass ? kPositive : kNegative);
    }});
  }

  // surface-certify
  {
    auto* s = add("surface-certify", "Nontriviality certificate for a genus-2 surface group word");
    s->add_option("--word", word, "Word over a, b, c, d")->required();
    commands.push_back({s, [&]() -> Result {
      want_format(common, "json", {"json"});
      const GroupWord w = GroupWord::parse(word, Alphabet::genus2());
      const Certificate c = certify_nontrivial(w);
      json j = base_json(common);
      j["word"] = word;
      j["verdict"] = to_string(c.verdict);
      j["rewritten"] = c.rewritten.str();
      j["twist"] = c.twist;
      j["witness_free_word"] = c.witness.str();
      if (c.prime) {
        j["witness_prime"] = c.prime->prime;
        j["witness_matrix_mod_p"] = c.prime->image_mod_p.to_json();
      } else {
        j["witness_prime"] = nullptr;
        j["witness_matrix_mod_p"] = nullptr;
      }
      j["oracle"] = dehn_oracle(w) == WordProblem::trivial ? "trivial" : "nontrivial";
      return json_result(j, c.verdict == Verdict::nontrivial ? kPositive : kNegative);
    }});
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (common.threads > 0) set_thread_count(common.threads);
    for (const auto& c : commands) {
      if (!c.app->parsed()) continue;
      const Result r = c.handler();
      if (common.output.empty()) {
        out << r.artifact;
      } else {
        std::ofstream f(common.output, std::ios::binary);
        if (!f) throw InputError("cannot open --output file '" + common.output + "'");
        f << r.artifact;
      }
      return r.code;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInputError;
}

}  // namespace fig8::cli
