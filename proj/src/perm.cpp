#include "fig8/perm.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "fig8/error.hpp"

namespace fig8 {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InputError("empty partition");
  for (int p : parts_) {
    if (p <= 0) throw InputError("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw InputError("bad partition '" + std::string(text) + "'");
    }
    parts.push_back(v);
    pos = end + 1;
  }
  return Partition(std::move(parts));
}

std::string Partition::str() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 1) throw InputError("partitions_of needs n >= 1");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::string to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || static_cast<std::size_t>(v) >= img_.size() || seen[static_cast<std::size_t>(v)]) {
      throw InputError("not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  Permutation p;
  p.img_ = std::move(v);
  return p;
}

Permutation Permutation::parse(std::string_view text, int n) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
  };
  skip();
  if (text.substr(i) == "e") return identity(std::max(n, 1));
  int top = n;
  while (i < text.size()) {
    if (text[i] != '(') throw InputError("bad permutation '" + std::string(text) + "'");
    ++i;
    std::vector<int> cyc;
    for (;;) {
      skip();
      if (i >= text.size()) throw InputError("unclosed cycle in '" + std::string(text) + "'");
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t j = i;
      while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
      int v = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, v);
      if (j == i || ec != std::errc() || v < 1) {
        throw InputError("bad point in permutation '" + std::string(text) + "'");
      }
      (void)ptr;
      cyc.push_back(v - 1);
      top = std::max(top, v);
      i = j;
    }
    cycles.push_back(std::move(cyc));
    skip();
  }
  Permutation result = identity(std::max(top, 1));
  // Cycles compose left to right.
  for (const auto& c : cycles) {
    std::set<int> distinct(c.begin(), c.end());
    if (distinct.size() != c.size()) throw InputError("repeated point in a cycle");
    result = result * cycle(c, result.degree());
  }
  return result;
}

Permutation Permutation::cycle(const std::vector<int>& points, int n) {
  Permutation p = identity(n);
  for (std::size_t k = 0; k < points.size(); ++k) {
    const int a = points[k];
    const int b = points[(k + 1) % points.size()];
    if (a < 0 || a >= n || b < 0 || b >= n) throw InputError("cycle point out of range");
    p.img_[static_cast<std::size_t>(a)] = b;
  }
  return Permutation(p.img_);
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw InputError("permutation degree mismatch");
  Permutation out;
  out.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) out.img_[i] = rhs.img_[static_cast<std::size_t>(img_[i])];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) out.img_[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
  return out;
}

Permutation Permutation::conjugate_by(const Permutation& g) const { return g.inverse() * *this * g; }

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (img_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(img_.size(), 0);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    int j = static_cast<int>(i);
    while (!seen[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = 1;
      c.push_back(j);
      j = img_[static_cast<std::size_t>(j)];
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::size_t Permutation::num_cycles() const { return cycles().size(); }

Partition Permutation::cycle_type() const {
  std::vector<int> parts;
  for (const auto& c : cycles()) parts.push_back(static_cast<int>(c.size()));
  return Partition(std::move(parts));
}

Parity Permutation::parity() const {
  return (img_.size() - num_cycles()) % 2 == 0 ? Parity::even : Parity::odd;
}

std::string Permutation::str() const {
  std::string s;
  for (const auto& c : cycles()) {
    if (c.size() < 2) continue;
    s += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) s += ' ';
      s += std::to_string(c[k] + 1);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

Permutation commutator(const Permutation& s, const Permutation& t) {
  return s * t * s.inverse() * t.inverse();
}

Permutation class_representative(const Partition& p) {
  const int n = p.size();
  std::vector<int> img(static_cast<std::size_t>(n));
  int start = 0;
  for (int len : p.parts()) {
    for (int k = 0; k < len; ++k) img[static_cast<std::size_t>(start + k)] = start + (k + 1) % len;
    start += len;
  }
  return Permutation(std::move(img));
}

std::vector<Permutation> class_elements(const Partition& p) {
  const int n = p.size();
  if (n > 10) throw InputError("class_elements limited to degree <= 10");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  do {
    Permutation q(v);
    if (q.cycle_type() == p) out.push_back(std::move(q));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<Permutation> generated_group(const std::vector<Permutation>& gens, int degree,
                                         std::size_t limit) {
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::vector<Permutation> order{Permutation::identity(degree)};
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& g : gens) {
      Permutation next = order[i] * g;
      if (seen.insert(next).second) {
        order.push_back(std::move(next));
        if (order.size() > limit) return order;
      }
    }
  }
  return order;
}

bool is_transitive(const std::vector<Permutation>& gens, int degree) {
  std::vector<char> seen(static_cast<std::size_t>(degree), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto& g : gens) {
      int y = g(x);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == degree;
}

}  // namespace fig8
