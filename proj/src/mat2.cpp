#include "fig8/mat2.hpp"

#include "fig8/error.hpp"

namespace fig8 {

ExactMat2::ExactMat2(BigInt a11, BigInt a12, BigInt a21, BigInt a22)
    : e_{std::move(a11), std::move(a12), std::move(a21), std::move(a22)} {
  if (det() != 1) throw DomainError("matrix determinant is not 1");
}

ExactMat2::ExactMat2(Unchecked, BigInt a11, BigInt a12, BigInt a21, BigInt a22,
                     std::optional<BigInt> m)
    : e_{std::move(a11), std::move(a12), std::move(a21), std::move(a22)}, mod_(std::move(m)) {
  normalize();
}

ExactMat2 ExactMat2::modular(BigInt a11, BigInt a12, BigInt a21, BigInt a22, BigInt modulus) {
  if (modulus <= 0) throw InputError("modulus must be positive");
  ExactMat2 m(Unchecked{}, std::move(a11), std::move(a12), std::move(a21), std::move(a22),
              std::move(modulus));
  BigInt d = m.det();
  if (d != 1 % *m.mod_) throw DomainError("matrix determinant is not 1 modulo m");
  return m;
}

ExactMat2 ExactMat2::identity(std::optional<BigInt> modulus) {
  if (modulus && *modulus <= 0) throw InputError("modulus must be positive");
  return ExactMat2(Unchecked{}, 1, 0, 0, 1, std::move(modulus));
}

void ExactMat2::normalize() {
  if (!mod_) return;
  for (auto& x : e_) {
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), mod_->get_mpz_t());
  }
}

BigInt ExactMat2::trace() const {
  BigInt t = e_[0] + e_[3];
  if (mod_) mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), mod_->get_mpz_t());
  return t;
}

BigInt ExactMat2::det() const {
  BigInt d = e_[0] * e_[3] - e_[1] * e_[2];
  if (mod_) mpz_fdiv_r(d.get_mpz_t(), d.get_mpz_t(), mod_->get_mpz_t());
  return d;
}

bool ExactMat2::is_identity() const {
  const BigInt one = mod_ ? BigInt(1 % *mod_) : BigInt(1);
  return e_[0] == one && e_[1] == 0 && e_[2] == 0 && e_[3] == one;
}

BigInt ExactMat2::max_abs_entry() const {
  BigInt best = 0;
  for (const auto& x : e_) {
    BigInt a = abs(x);
    if (a > best) best = a;
  }
  return best;
}

ExactMat2 ExactMat2::operator*(const ExactMat2& rhs) const {
  if (mod_ != rhs.mod_) throw InputError("modulus mismatch in matrix product");
  return ExactMat2(Unchecked{}, e_[0] * rhs.e_[0] + e_[1] * rhs.e_[2],
                   e_[0] * rhs.e_[1] + e_[1] * rhs.e_[3], e_[2] * rhs.e_[0] + e_[3] * rhs.e_[2],
                   e_[2] * rhs.e_[1] + e_[3] * rhs.e_[3], mod_);
}

ExactMat2 ExactMat2::inverse() const {
  return ExactMat2(Unchecked{}, e_[3], -e_[1], -e_[2], e_[0], mod_);
}

ExactMat2 ExactMat2::reduced_mod(const BigInt& m) const {
  if (m <= 0) throw InputError("modulus must be positive");
  return ExactMat2(Unchecked{}, e_[0], e_[1], e_[2], e_[3], m);
}

bool ExactMat2::operator==(const ExactMat2& other) const {
  return mod_ == other.mod_ && e_[0] == other.e_[0] && e_[1] == other.e_[1] &&
         e_[2] == other.e_[2] && e_[3] == other.e_[3];
}

nlohmann::json ExactMat2::to_json() const {
  return nlohmann::json::array({nlohmann::json::array({e_[0].get_str(), e_[1].get_str()}),
                                nlohmann::json::array({e_[2].get_str(), e_[3].get_str()})});
}

ExactMat2 eval_word(const GroupWord& w, const Assignment& assignment) {
  std::optional<std::optional<BigInt>> modulus;
  for (char c : w.str()) {
    auto it = assignment.find(generator_of(c));
    if (it == assignment.end()) {
      throw InputError(std::string("no matrix assigned to generator '") + generator_of(c) + "'");
    }
    if (!modulus) {
      modulus = it->second.modulus();
    } else if (*modulus != it->second.modulus()) {
      throw InputError("modulus mismatch among assigned matrices");
    }
  }
  ExactMat2 acc = ExactMat2::identity(modulus ? *modulus : std::nullopt);
  // Inverses are looked up once per generator.
  std::map<char, ExactMat2> inverses;
  for (char c : w.str()) {
    const ExactMat2& g = assignment.at(generator_of(c));
    if (is_inverse_letter(c)) {
      auto it = inverses.find(c);
      if (it == inverses.end()) it = inverses.emplace(c, g.inverse()).first;
      acc = acc * it->second;
    } else {
      acc = acc * g;
    }
  }
  return acc;
}

}  // namespace fig8
