#include "fig8/genus2.hpp"

#include <array>

#include "fig8/error.hpp"

namespace fig8 {

const GroupWord& z1() {
  static const GroupWord w = GroupWord::parse("abAB", Alphabet::genus2());
  return w;
}

const GroupWord& z2() {
  static const GroupWord w = GroupWord::parse("cdCD", Alphabet::genus2());
  return w;
}

const GroupWord& genus2_relator() {
  static const GroupWord w = GroupWord::parse("abABdcDC", Alphabet::genus2());
  return w;
}

namespace {

void require_genus2(const GroupWord& w) {
  if (!(w.alphabet() == Alphabet::genus2())) throw InputError("expected a word over a, b, c, d");
}

bool is_left_letter(char c) {
  const char g = generator_of(c);
  return g == 'a' || g == 'b';
}

// k with w == z^k, if any (z cyclically reduced, not a proper power).
std::optional<long> power_of(const std::string& w, const std::string& z) {
  if (w.empty() || w.size() % z.size() != 0) return std::nullopt;
  const long k = static_cast<long>(w.size() / z.size());
  std::string zi(z.rbegin(), z.rend());
  for (char& c : zi) c = inverse_letter(c);
  for (const std::string* base : {&z, static_cast<const std::string*>(&zi)}) {
    bool ok = true;
    for (std::size_t i = 0; i < w.size() && ok; ++i) ok = w[i] == (*base)[i % base->size()];
    if (ok) return base == &z ? k : -k;
  }
  return std::nullopt;
}

}  // namespace

GroupWord retract(const GroupWord& w) {
  require_genus2(w);
  std::string out;
  out.reserve(w.length());
  for (char c : w.str()) {
    const char g = generator_of(c);
    const char img = (g == 'a' || g == 'c') ? 'x' : 'y';
    out += is_inverse_letter(c) ? inverse_letter(img) : img;
  }
  return GroupWord::parse(out, Alphabet::free_xy());
}

GroupWord dehn_twist(const GroupWord& w, long m) {
  require_genus2(w);
  if (m < 0) throw InputError("dehn_twist: power must be nonnegative");
  const GroupWord zm = z1().power(m);
  const GroupWord zmi = zm.inverse();
  std::string out;
  for (char c : w.str()) {
    if (is_left_letter(c)) {
      out += c;
    } else {
      out += zmi.str();
      out += c;
      out += zm.str();
    }
  }
  return GroupWord::parse(out, Alphabet::genus2());
}

GroupWord rewrite_blocks(const GroupWord& w) {
  require_genus2(w);
  std::string cur = w.str();
  for (;;) {
    if (cur.empty() || power_of(cur, z1().str())) break;
    // Scan the maximal blocks for the first commutator power.
    bool replaced = false;
    std::size_t i = 0;
    while (i < cur.size() && !replaced) {
      const bool left = is_left_letter(cur[i]);
      std::size_t j = i;
      while (j < cur.size() && is_left_letter(cur[j]) == left) ++j;
      const std::string block = cur.substr(i, j - i);
      const auto k = power_of(block, left ? z1().str() : z2().str());
      if (k) {
        const GroupWord repl = (left ? z2() : z1()).power(*k);
        cur = free_reduce(cur.substr(0, i) + repl.str() + cur.substr(j));
        replaced = true;
      }
      i = j;
    }
    if (!replaced) break;
  }
  return GroupWord::parse(cur, Alphabet::genus2());
}

std::string to_string(Verdict v) {
  return v == Verdict::nontrivial ? "NONTRIVIAL" : "TRIVIAL-CONSISTENT";
}

Certificate certify_nontrivial(const GroupWord& w) {
  require_genus2(w);
  Certificate c;
  c.rewritten = rewrite_blocks(w);
  c.twist = static_cast<long>((c.rewritten.length() + 3) / 4) + 1;
  c.witness = retract(dehn_twist(c.rewritten, c.twist));
  if (c.witness.empty()) return c;
  c.verdict = Verdict::nontrivial;
  std::string ab = c.witness.str();
  for (char& ch : ab) {
    const char g = generator_of(ch) == 'x' ? 'a' : 'b';
    ch = is_inverse_letter(ch) ? inverse_letter(g) : g;
  }
  c.prime = smallest_excluding_prime(GroupWord::from_letters(ab, Alphabet::free2()));
  return c;
}

std::vector<Certificate> certify_all(const std::vector<GroupWord>& words, Exec exec) {
  std::vector<Certificate> out(words.size());
  const long n = static_cast<long>(words.size());
  if (exec == Exec::serial) {
    for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = certify_nontrivial(words[static_cast<std::size_t>(i)]);
    return out;
  }
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = certify_nontrivial(words[static_cast<std::size_t>(i)]);
  return out;
}

namespace {

std::string invert(const std::string& s) {
  std::string r(s.rbegin(), s.rend());
  for (char& c : r) c = inverse_letter(c);
  return r;
}

const std::vector<std::string>& symmetrized_relators() {
  static const std::vector<std::string> rels = [] {
    std::vector<std::string> out;
    for (const std::string& r : {genus2_relator().str(), invert(genus2_relator().str())}) {
      for (std::size_t k = 0; k < r.size(); ++k) out.push_back(r.substr(k) + r.substr(0, k));
    }
    return out;
  }();
  return rels;
}

std::string cyclic_reduce(std::string s) {
  s = free_reduce(s);
  std::size_t i = 0, j = s.size();
  while (j - i >= 2 && s[i] == inverse_letter(s[j - 1])) {
    ++i;
    --j;
  }
  return s.substr(i, j - i);
}

}  // namespace

WordProblem dehn_oracle(const GroupWord& w) {
  require_genus2(w);
  std::string cur = cyclic_reduce(w.str());
  const auto& rels = symmetrized_relators();
  const std::size_t rlen = rels.front().size();
  for (;;) {
    bool changed = false;
    const std::size_t n = cur.size();
    for (std::size_t len = std::min(rlen, n); len > rlen / 2 && !changed; --len) {
      for (std::size_t i = 0; i < n && !changed; ++i) {
        const std::string rotated = cur.substr(i) + cur.substr(0, i);
        const std::string_view piece(rotated.data(), len);
        for (const auto& r : rels) {
          if (std::string_view(r).substr(0, len) == piece) {
            cur = cyclic_reduce(invert(r.substr(len)) + rotated.substr(len));
            changed = true;
            break;
          }
        }
      }
    }
    if (!changed) break;
  }
  return cur.empty() ? WordProblem::trivial : WordProblem::nontrivial;
}

LengthBound length_bound_check(const GroupWord& w) {
  const Certificate c = certify_nontrivial(w);
  if (c.verdict != Verdict::nontrivial) throw DomainError("length_bound_check: word is not certified nontrivial");
  LengthBound b;
  b.witness_length = c.witness.length();
  b.bound = w.length() * w.length() + w.length();
  b.pass = b.witness_length <= b.bound;
  return b;
}

}  // namespace fig8
