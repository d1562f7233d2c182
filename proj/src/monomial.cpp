#include "fsig/monomial.hpp"

#include <algorithm>
#include <string>

#include "fsig/errors.hpp"

namespace fsig {

namespace {

void check_exponent(Exponent e) {
  if (e > kMaxExponent) {
    throw ResourceLimitError("exponent " + std::to_string(e) +
                             " exceeds the cap 2^20");
  }
}

void check_same_size(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) {
    throw DomainError("monomial variable counts differ (" +
                      std::to_string(a.size()) + " vs " +
                      std::to_string(b.size()) + ")");
  }
}

}  // namespace

Monomial::Monomial(std::size_t nvars) : exps_(nvars, 0) {
  if (nvars > kMaxVariables) throw DomainError("too many variables");
}

Monomial::Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {
  if (exps_.size() > kMaxVariables) throw DomainError("too many variables");
  for (Exponent e : exps_) {
    check_exponent(e);
    degree_ += e;
  }
}

Monomial::Monomial(std::initializer_list<Exponent> exponents)
    : Monomial(std::vector<Exponent>(exponents)) {}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

std::uint64_t Monomial::support_mask() const {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

Exponent Monomial::weighted_degree(std::span<const Exponent> weights) const {
  Exponent d = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) d += weights[i] * exps_[i];
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  check_same_size(*this, other);
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] += other.exps_[i];
    check_exponent(r.exps_[i]);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  check_same_size(*this, other);
  if (!other.divides(*this)) throw DomainError("monomial quotient is not exact");
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
  r.degree_ = degree_ - other.degree_;
  return r;
}

Monomial Monomial::pow(Exponent n) const {
  Monomial r = *this;
  r.degree_ = 0;
  for (Exponent& e : r.exps_) {
    if (e != 0 && n > kMaxExponent / e) {
      throw ResourceLimitError("monomial power exceeds the exponent cap 2^20");
    }
    e *= n;
    check_exponent(e);
    r.degree_ += e;
  }
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  check_same_size(*this, other);
  Monomial r = *this;
  r.degree_ = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  check_same_size(*this, other);
  Monomial r = *this;
  r.degree_ = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::min(exps_[i], other.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

void Monomial::set(std::size_t i, Exponent e) {
  check_exponent(e);
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = e;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (Exponent e : m.exponents()) {
    h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace fsig
