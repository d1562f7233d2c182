#include "fsig/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "fsig/errors.hpp"

namespace fsig {

namespace {

const TermOrder kCanonical = TermOrder::grevlex();

bool term_greater(const Term& a, const Term& b) {
  return kCanonical.greater(a.monomial, b.monomial);
}

}  // namespace

bool is_power_of(std::uint64_t q, std::uint64_t p) {
  if (q == 0 || p < 2) return false;
  while (q % p == 0) q /= p;
  return q == 1;
}

std::vector<std::string> default_variable_names(std::size_t nvars) {
  std::vector<std::string> names;
  names.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

Polynomial Polynomial::from_terms(PrimeField field, std::size_t nvars,
                                  std::vector<Term> terms) {
  Polynomial f(field, nvars);
  for (const Term& t : terms) {
    if (t.monomial.size() != nvars) throw DomainError("term has wrong variable count");
  }
  std::sort(terms.begin(), terms.end(), term_greater);
  for (Term& t : terms) {
    Coeff c = t.coeff % field.characteristic();
    if (!f.terms_.empty() && f.terms_.back().monomial == t.monomial) {
      f.terms_.back().coeff = field.add(f.terms_.back().coeff, c);
      if (f.terms_.back().coeff == 0) f.terms_.pop_back();
    } else if (c != 0) {
      f.terms_.push_back({std::move(t.monomial), c});
    }
  }
  return f;
}

Polynomial Polynomial::constant(PrimeField field, std::size_t nvars, Coeff c) {
  Polynomial f(field, nvars);
  c %= field.characteristic();
  if (c != 0) f.terms_.push_back({Monomial(nvars), c});
  return f;
}

Polynomial Polynomial::monomial(PrimeField field, const Monomial& m, Coeff c) {
  Polynomial f(field, m.size());
  c %= field.characteristic();
  if (c != 0) f.terms_.push_back({m, c});
  return f;
}

Polynomial Polynomial::variable(PrimeField field, std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw DomainError("variable index out of range");
  return monomial(field, Monomial::variable(nvars, index), 1);
}

const Term& Polynomial::leading_term(const TermOrder& order) const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  if (order == kCanonical) return terms_.front();
  const Term* best = &terms_.front();
  for (const Term& t : terms_) {
    if (order.greater(t.monomial, best->monomial)) best = &t;
  }
  return *best;
}

Exponent Polynomial::degree() const {
  return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

bool Polynomial::is_homogeneous(std::span<const Exponent> weights) const {
  if (terms_.empty()) return true;
  const Exponent d = terms_.front().monomial.weighted_degree(weights);
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
    return t.monomial.weighted_degree(weights) == d;
  });
}

Exponent Polynomial::weighted_degree(std::span<const Exponent> weights) const {
  Exponent d = 0;
  for (const Term& t : terms_) d = std::max(d, t.monomial.weighted_degree(weights));
  return d;
}

void Polynomial::check_compatible(const Polynomial& g) const {
  if (!(field_ == g.field_) || nvars_ != g.nvars_) {
    throw DomainError("polynomials belong to different rings");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (Term& t : r.terms_) t.coeff = field_.neg(t.coeff);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  check_compatible(g);
  Polynomial r(field_, nvars_);
  r.terms_.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = g.terms_.begin(), be = g.terms_.end();
  while (a != ae && b != be) {
    auto c = kCanonical.compare(a->monomial, b->monomial);
    if (c == std::strong_ordering::greater) {
      r.terms_.push_back(*a++);
    } else if (c == std::strong_ordering::less) {
      r.terms_.push_back(*b++);
    } else {
      Coeff s = field_.add(a->coeff, b->coeff);
      if (s != 0) r.terms_.push_back({a->monomial, s});
      ++a;
      ++b;
    }
  }
  r.terms_.insert(r.terms_.end(), a, ae);
  r.terms_.insert(r.terms_.end(), b, be);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const { return *this + (-g); }

Polynomial Polynomial::operator*(const Polynomial& g) const {
  check_compatible(g);
  if (terms_.empty() || g.terms_.empty()) return Polynomial(field_, nvars_);
  if (terms_.size() == 1) return g.mul_term(terms_[0].monomial, terms_[0].coeff);
  if (g.terms_.size() == 1) return mul_term(g.terms_[0].monomial, g.terms_[0].coeff);
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  acc.reserve(terms_.size() * g.terms_.size());
  for (const Term& s : terms_) {
    for (const Term& t : g.terms_) {
      Coeff& slot = acc[s.monomial * t.monomial];
      slot = field_.add(slot, field_.mul(s.coeff, t.coeff));
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.push_back({m, c});
  }
  std::sort(out.begin(), out.end(), term_greater);
  Polynomial r(field_, nvars_);
  r.terms_ = std::move(out);
  return r;
}

Polynomial Polynomial::scale(Coeff c) const {
  c %= field_.characteristic();
  Polynomial r(field_, nvars_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (Term& t : r.terms_) t.coeff = field_.mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, Coeff c) const {
  if (m.size() != nvars_) throw DomainError("monomial has wrong variable count");
  c %= field_.characteristic();
  Polynomial r(field_, nvars_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back({t.monomial * m, field_.mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scale(field_.inv(terms_.front().coeff));
}

Polynomial Polynomial::frobenius(std::uint64_t q) const {
  if (!is_power_of(q, field_.characteristic())) {
    throw DomainError(std::to_string(q) + " is not a power of the characteristic " +
                      std::to_string(field_.characteristic()));
  }
  // Coefficients are fixed by Frobenius on F_p; scaling exponents keeps the
  // order, so no re-sort is needed.
  Polynomial r(field_, nvars_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back({t.monomial.pow(q), t.coeff});
  return r;
}

Polynomial Polynomial::pow(std::uint64_t n) const {
  const std::uint64_t p = field_.characteristic();
  Polynomial result = constant(field_, nvars_, 1);
  Polynomial base = *this;
  while (n > 0) {
    std::uint64_t digit = n % p;
    if (digit != 0) {
      Polynomial acc = constant(field_, nvars_, 1);
      Polynomial sq = base;
      while (digit > 0) {
        if (digit & 1) acc *= sq;
        digit >>= 1;
        if (digit > 0) sq *= sq;
      }
      result *= acc;
    }
    n /= p;
    if (n > 0) base = base.frobenius(p);
  }
  return result;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& g) const {
  check_compatible(g);
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  const Term& lead = g.terms_.front();
  const Coeff lead_inv = field_.inv(lead.coeff);
  Polynomial quotient(field_, nvars_);
  Polynomial rest = *this;
  std::vector<Term> qterms;
  while (!rest.is_zero()) {
    const Term& r = rest.terms_.front();
    if (!lead.monomial.divides(r.monomial)) return std::nullopt;
    Monomial m = r.monomial / lead.monomial;
    Coeff c = field_.mul(r.coeff, lead_inv);
    rest = rest - g.mul_term(m, c);
    qterms.push_back({std::move(m), c});
  }
  // Quotient terms are produced in strictly decreasing order.
  quotient.terms_ = std::move(qterms);
  return quotient;
}

Polynomial Polynomial::prepend_variables(std::size_t extra) const {
  Polynomial r(field_, nvars_ + extra);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    std::vector<Exponent> e(extra, 0);
    e.insert(e.end(), t.monomial.exponents().begin(), t.monomial.exponents().end());
    r.terms_.push_back({Monomial(std::move(e)), t.coeff});
  }
  std::sort(r.terms_.begin(), r.terms_.end(), term_greater);
  return r;
}

Polynomial Polynomial::drop_leading_variables(std::size_t count) const {
  if (count > nvars_) throw DomainError("cannot drop more variables than present");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    auto e = t.monomial.exponents();
    for (std::size_t i = 0; i < count; ++i) {
      if (e[i] != 0) throw DomainError("dropped variable occurs in polynomial");
    }
    out.push_back({Monomial(std::vector<Exponent>(e.begin() + count, e.end())), t.coeff});
  }
  return from_terms(field_, nvars_ - count, std::move(out));
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (names.size() != nvars_) throw DomainError("wrong number of variable names");
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : terms_) {
    std::int64_t c = field_.to_signed(t.coeff);
    const bool negative = c < 0;
    const std::uint64_t mag = negative ? static_cast<std::uint64_t>(-c)
                                       : static_cast<std::uint64_t>(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      Exponent e = t.monomial[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += std::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += std::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

}  // namespace fsig
