#include "fig8/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

#include "fig8/error.hpp"

namespace fig8 {

Parity class_parity(const Partition& p) {
  return (p.size() - static_cast<int>(p.length())) % 2 == 0 ? Parity::even : Parity::odd;
}

BigInt class_size(const Partition& p) {
  BigInt num;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(p.size()));
  std::map<int, unsigned long> mult;
  for (int part : p.parts()) ++mult[part];
  BigInt den = 1;
  for (const auto& [j, m] : mult) {
    BigInt pw, fac;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(j), m);
    mpz_fac_ui(fac.get_mpz_t(), m);
    den *= pw * fac;
  }
  return num / den;
}

namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;

class CharacterCache {
 public:
  bool find(const Key& k, BigInt& out) const {
    std::shared_lock lock(mu_);
    auto it = table_.find(k);
    if (it == table_.end()) return false;
    out = it->second;
    return true;
  }
  void insert(const Key& k, const BigInt& v) {
    std::unique_lock lock(mu_);
    table_.emplace(k, v);
  }

 private:
  mutable std::shared_mutex mu_;
  std::map<Key, BigInt> table_;
};

CharacterCache& cache() {
  static CharacterCache c;
  return c;
}

// lambda and mu are weakly decreasing with equal sums; mu is consumed from
// the front.
BigInt mn_rule(const std::vector<int>& lambda, const std::vector<int>& mu) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  Key key{lambda, mu};
  BigInt cached;
  if (cache().find(key, cached)) return cached;

  const int r = mu.front();
  const std::vector<int> rest(mu.begin() + 1, mu.end());
  const int len = static_cast<int>(lambda.size());
  std::vector<int> beta(lambda.size());
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);

  BigInt total = 0;
  for (int i = 0; i < len; ++i) {
    const int b = beta[static_cast<std::size_t>(i)];
    const int target = b - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int c : beta) between += (c > target && c < b) ? 1 : 0;
    std::vector<int> nb = beta;
    nb[static_cast<std::size_t>(i)] = target;
    std::sort(nb.begin(), nb.end(), std::greater<>());
    std::vector<int> nl;
    for (int j = 0; j < len; ++j) {
      const int part = nb[static_cast<std::size_t>(j)] - (len - 1 - j);
      if (part > 0) nl.push_back(part);
    }
    BigInt sub = mn_rule(nl, rest);
    if (between % 2) {
      total -= sub;
    } else {
      total += sub;
    }
  }
  cache().insert(key, total);
  return total;
}

}  // namespace

BigInt character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw InputError("character: partitions of different n");
  return mn_rule(lambda.parts(), mu.parts());
}

BigInt frobenius_count(const std::vector<Partition>& classes) {
  if (classes.empty()) throw InputError("frobenius_count needs at least one class");
  const int n = classes.front().size();
  for (const auto& c : classes) {
    if (c.size() != n) throw InputError("frobenius_count: classes of different degree");
  }
  const long k = static_cast<long>(classes.size());
  BigRational sum = 0;
  const Partition id = Partition::ones(n);
  for (const Partition& lambda : partitions_of(n)) {
    const BigInt dim = character(lambda, id);
    BigRational term = 1;
    for (const auto& c : classes) term *= BigRational(character(lambda, c));
    // divide by dim^(k-2)
    BigInt pw;
    mpz_pow_ui(pw.get_mpz_t(), dim.get_mpz_t(), static_cast<unsigned long>(k >= 2 ? k - 2 : 2 - k));
    if (k >= 2) {
      term /= BigRational(pw);
    } else {
      term *= BigRational(pw);
    }
    sum += term;
  }
  BigInt order;
  mpz_fac_ui(order.get_mpz_t(), static_cast<unsigned long>(n));
  BigRational result = sum / BigRational(order);
  for (const auto& c : classes) result *= BigRational(class_size(c));
  result.canonicalize();
  if (result.get_den() != 1) throw std::logic_error("Frobenius sum is not integral");
  return result.get_num();
}

}  // namespace fig8
