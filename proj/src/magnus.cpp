#include "fig8/magnus.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "fig8/error.hpp"
#include "fig8/primes.hpp"

namespace fig8 {

namespace {

std::size_t offset(int d) { return (std::size_t{1} << d) - 1; }

std::string monomial_name(int d, std::size_t value) {
  std::string s(static_cast<std::size_t>(d), 'x');
  for (int i = 0; i < d; ++i) {
    if ((value >> (d - 1 - i)) & 1) s[static_cast<std::size_t>(i)] = 'y';
  }
  return s;
}

int var_of(char g) {
  if (g == 'a') return 0;
  if (g == 'b') return 1;
  throw InputError("Magnus expansion is defined for words over {a, b}");
}

}  // namespace

MagnusSeries::MagnusSeries(int degree) : degree_(degree) {
  if (degree < 1 || degree > 24) throw InputError("Magnus truncation degree must be in 1..24");
  coef_.assign(offset(degree + 1), BigInt(0));
  coef_[0] = 1;
}

MagnusSeries MagnusSeries::generator(char letter, int degree) {
  MagnusSeries s(degree);
  if (is_inverse_letter(letter)) {
    s.mul_generator_inverse(var_of(generator_of(letter)));
  } else {
    s.mul_generator(var_of(letter));
  }
  return s;
}

std::size_t MagnusSeries::index_of(std::string_view monomial) {
  std::size_t v = 0;
  for (char c : monomial) {
    if (c != 'x' && c != 'y') throw InputError("monomials are words in x and y");
    v = 2 * v + (c == 'y' ? 1 : 0);
  }
  return offset(static_cast<int>(monomial.size())) + v;
}

const BigInt& MagnusSeries::coefficient(std::string_view monomial) const {
  if (static_cast<int>(monomial.size()) > degree_) throw InputError("monomial above truncation degree");
  return coef_[index_of(monomial)];
}

std::vector<std::pair<std::string, BigInt>> MagnusSeries::terms_of_degree(int d) const {
  std::vector<std::pair<std::string, BigInt>> out;
  if (d < 0 || d > degree_) return out;
  for (std::size_t v = 0; v < (std::size_t{1} << d); ++v) {
    const BigInt& c = coef_[offset(d) + v];
    if (c != 0) out.emplace_back(monomial_name(d, v), c);
  }
  return out;
}

MagnusSeries MagnusSeries::operator*(const MagnusSeries& rhs) const {
  if (degree_ != rhs.degree_) throw InputError("Magnus series of different truncation degree");
  MagnusSeries out(degree_);
  out.coef_[0] = 0;
  for (int du = 0; du <= degree_; ++du) {
    for (std::size_t u = 0; u < (std::size_t{1} << du); ++u) {
      const BigInt& cu = coef_[offset(du) + u];
      if (cu == 0) continue;
      for (int dv = 0; du + dv <= degree_; ++dv) {
        for (std::size_t v = 0; v < (std::size_t{1} << dv); ++v) {
          const BigInt& cv = rhs.coef_[offset(dv) + v];
          if (cv == 0) continue;
          out.coef_[offset(du + dv) + ((u << dv) | v)] += cu * cv;
        }
      }
    }
  }
  return out;
}

void MagnusSeries::mul_generator(int var) {
  // (f (1 + v))[m] = f[m] + f[m'] when m = m' v. Top degree first so that
  // f[m'] is still the old value.
  for (int d = degree_; d >= 1; --d) {
    for (std::size_t p = 0; p < (std::size_t{1} << (d - 1)); ++p) {
      const BigInt& src = coef_[offset(d - 1) + p];
      if (src != 0) coef_[offset(d) + (2 * p + static_cast<std::size_t>(var))] += src;
    }
  }
}

void MagnusSeries::mul_generator_inverse(int var) {
  // g = f (1 + v)^-1 solves g (1 + v) = f: g[m] = f[m] - g[m'] for m = m' v,
  // filled from low degree up.
  for (int d = 1; d <= degree_; ++d) {
    for (std::size_t p = 0; p < (std::size_t{1} << (d - 1)); ++p) {
      const BigInt& src = coef_[offset(d - 1) + p];
      if (src != 0) coef_[offset(d) + (2 * p + static_cast<std::size_t>(var))] -= src;
    }
  }
}

std::string MagnusSeries::str() const {
  std::string s;
  for (int d = 0; d <= degree_; ++d) {
    for (const auto& [mono, c] : terms_of_degree(d)) {
      const bool neg = c < 0;
      const BigInt mag = neg ? BigInt(-c) : c;
      if (s.empty()) {
        s += neg ? "-" : "";
      } else {
        s += neg ? " - " : " + ";
      }
      if (mag != 1 || mono.empty()) s += mag.get_str();
      s += mono;
    }
  }
  return s.empty() ? "0" : s;
}

MagnusSeries magnus_expand(const GroupWord& w, int degree) {
  MagnusSeries s(degree);
  for (char c : w.str()) {
    const int var = var_of(generator_of(c));
    if (is_inverse_letter(c)) {
      s.mul_generator_inverse(var);
    } else {
      s.mul_generator(var);
    }
  }
  return s;
}

std::optional<int> lcs_depth(const GroupWord& w, int max_k) {
  if (w.empty()) throw DomainError("lcs_depth: trivial word");
  const MagnusSeries s = magnus_expand(w, max_k);
  for (int d = 1; d <= max_k; ++d) {
    if (!s.terms_of_degree(d).empty()) return d;
  }
  return std::nullopt;
}

namespace {

IntMatrix identity_matrix(int n) {
  IntMatrix m(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return m;
}

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y, std::int64_t m) {
  const std::size_t n = x.size();
  IntMatrix r(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i; k < n; ++k) {
      if (x[i][k] == 0) continue;
      for (std::size_t j = k; j < n; ++j) r[i][j] = (r[i][j] + x[i][k] * y[k][j]) % m;
    }
  }
  return r;
}

// (I + N)^-1 = sum_i (-N)^i for nilpotent N.
IntMatrix unipotent_inverse(const IntMatrix& u, std::int64_t m) {
  const std::size_t n = u.size();
  IntMatrix neg_n = u;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) neg_n[i][j] = ((i == j ? 0 : -u[i][j]) % m + m) % m;
  }
  IntMatrix sum = identity_matrix(static_cast<int>(n));
  IntMatrix pw = identity_matrix(static_cast<int>(n));
  for (std::size_t k = 1; k < n; ++k) {
    pw = mat_mul(pw, neg_n, m);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) sum[i][j] = (sum[i][j] + pw[i][j]) % m;
    }
  }
  return sum;
}

constexpr std::uint64_t kImageOrderLimit = 2'000'000;

std::uint64_t generated_order(const std::vector<IntMatrix>& gens, std::int64_t m) {
  std::set<IntMatrix> seen{identity_matrix(static_cast<int>(gens.front().size()))};
  std::vector<IntMatrix> queue(seen.begin(), seen.end());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : gens) {
      IntMatrix next = mat_mul(queue[i], g, m);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return queue.size();
}

}  // namespace

UnipotentWitness unipotent_witness(const GroupWord& w, int k) {
  const auto depth = lcs_depth(w, k);
  if (!depth || *depth != k) throw InputError("unipotent_witness: word does not have depth k");
  const MagnusSeries s = magnus_expand(w, k);

  UnipotentWitness out;
  out.k = k;
  for (const auto& [mono, c] : s.terms_of_degree(k)) {
    const std::uint64_t m = least_prime_not_dividing(c);
    if (out.modulus == 0 || m < out.modulus) {
      out.modulus = m;
      out.monomial = mono;
      out.coefficient = c;
    }
  }
  const auto m = static_cast<std::int64_t>(out.modulus);
  const int dim = k + 1;
  out.image_a = identity_matrix(dim);
  out.image_b = identity_matrix(dim);
  for (int j = 0; j < k; ++j) {
    auto& target = out.monomial[static_cast<std::size_t>(j)] == 'x' ? out.image_a : out.image_b;
    target[static_cast<std::size_t>(j)][static_cast<std::size_t>(j + 1)] = 1 % m;
  }
  const IntMatrix inv_a = unipotent_inverse(out.image_a, m);
  const IntMatrix inv_b = unipotent_inverse(out.image_b, m);
  IntMatrix img = identity_matrix(dim);
  for (char c : w.str()) {
    const IntMatrix* f = nullptr;
    switch (c) {
      case 'a': f = &out.image_a; break;
      case 'A': f = &inv_a; break;
      case 'b': f = &out.image_b; break;
      default: f = &inv_b; break;
    }
    img = mat_mul(img, *f, m);
  }
  out.image_w = img;
  BigInt corner = out.coefficient % BigInt(m);
  if (corner < 0) corner += m;
  if (BigInt(img[0][static_cast<std::size_t>(k)]) != corner || corner == 0) {
    throw std::logic_error("unipotent_witness: corner entry does not match the Magnus coefficient");
  }
  mpz_ui_pow_ui(out.ambient_order.get_mpz_t(), static_cast<unsigned long>(m),
                static_cast<unsigned long>(k * (k + 1) / 2));
  if (out.ambient_order <= kImageOrderLimit) out.image_order = generated_order({out.image_a, out.image_b}, m);
  return out;
}

GroupWord iterated_bracket(int j) {
  if (j < 0) throw InputError("iterated_bracket: j must be nonnegative");
  GroupWord u = GroupWord::parse("a");
  const GroupWord b = GroupWord::parse("b");
  for (int i = 0; i < j; ++i) u = commutator(u, b);
  return u;
}

}  // namespace fig8
