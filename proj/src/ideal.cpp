#include "fsig/ideal.hpp"

#include <algorithm>
#include <cstdio>

#include "fsig/errors.hpp"
#include "fsig/quotient.hpp"

namespace fsig {

namespace {

void dedupe(std::vector<Polynomial>& v) {
  std::vector<Polynomial> out;
  for (auto& f : v) {
    if (f.is_zero()) continue;
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(std::move(f));
  }
  v = std::move(out);
}

/// Generators of A ∩ B for ideals of S given by generator lists.
std::vector<Polynomial> intersect_in_ambient(const Ring& ring, std::span<const Polynomial> a,
                                             std::span<const Polynomial> b) {
  const PrimeField& field = ring.field();
  const std::size_t n = ring.nvars();
  if (a.empty() || b.empty()) return {};
  const Polynomial w = Polynomial::variable(field, n + 1, 0);
  const Polynomial one_minus_w = Polynomial::constant(field, n + 1, 1) - w;
  std::vector<Polynomial> gens;
  for (const auto& g : a) gens.push_back(w * g.prepend_variables(1));
  for (const auto& h : b) gens.push_back(one_minus_w * h.prepend_variables(1));
  const GroebnerBasis basis =
      buchberger(gens, field, n + 1, TermOrder::elimination(1), ring.limits());
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis.leading_monomials()[i][0] == 0) {
      out.push_back(basis.elements()[i].drop_leading_variables(1));
    }
  }
  return out;
}

void require_same_ring(const Ideal& a, const Ideal& b) {
  if (!a.ring().same_ring(b.ring())) throw DomainError("ideals belong to different rings");
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), gens_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  if (!ring_) throw DomainError("ideal without a ring");
  for (const auto& g : gens_) check_polynomial(g);
  dedupe(gens_);
}

Ideal Ideal::unit(RingPtr ring) {
  Polynomial one = ring->one();
  return Ideal(std::move(ring), {std::move(one)});
}

Ideal Ideal::maximal(RingPtr ring) {
  auto vars = ring->variables();
  return Ideal(std::move(ring), std::move(vars));
}

Ideal Ideal::parse(RingPtr ring, std::string_view text) {
  auto gens = ring->parse_list(text);
  return Ideal(std::move(ring), std::move(gens));
}

void Ideal::check_polynomial(const Polynomial& f) const {
  if (!(f.field() == ring_->field()) || f.nvars() != ring_->nvars()) {
    throw DomainError("polynomial does not belong to the ring of the ideal");
  }
}

std::vector<Polynomial> Ideal::generators_with_relations() const {
  std::vector<Polynomial> all = gens_;
  all.insert(all.end(), ring_->relations().begin(), ring_->relations().end());
  return all;
}

const GroebnerBasis& Ideal::groebner(const TermOrder& order) const {
  {
    std::lock_guard lock(cache_->mutex);
    for (const auto& b : cache_->bases) {
      if (b->order() == order) return *b;
    }
  }
  auto computed = std::make_shared<const GroebnerBasis>(
      buchberger(generators_with_relations(), ring_->field(), ring_->nvars(), order,
                 ring_->limits()));
  std::lock_guard lock(cache_->mutex);
  for (const auto& b : cache_->bases) {
    if (b->order() == order) return *b;
  }
  cache_->bases.push_back(std::move(computed));
  return *cache_->bases.back();
}

bool Ideal::contains(const Polynomial& f) const {
  check_polynomial(f);
  return groebner().normal_form(f).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  require_same_ring(*this, other);
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Polynomial& g) { return contains(g); });
}

bool Ideal::is_zero() const {
  const Ideal z = zero(ring_);
  return std::all_of(gens_.begin(), gens_.end(),
                     [&](const Polynomial& g) { return z.contains(g); });
}

std::string Ideal::canonical_string() const { return groebner().to_string(ring_->names()); }

std::string Ideal::fingerprint() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(canonical_string())));
  return buf;
}

std::string Ideal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += ring_->format(gens_[i]);
  }
  return out + ")";
}

Ideal ideal_from_basis(RingPtr ring, GroebnerBasis basis) {
  std::vector<Polynomial> gens(basis.elements().begin(), basis.elements().end());
  Ideal out(std::move(ring), std::move(gens));
  out.cache_->bases.push_back(std::make_shared<const GroebnerBasis>(std::move(basis)));
  return out;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  return a.groebner() == b.groebner();
}

bool ideal_member(const Polynomial& f, const Ideal& i) { return i.contains(f); }

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  std::vector<Polynomial> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring_ptr(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f * g);
  }
  return Ideal(a.ring_ptr(), std::move(gens));
}

Ideal ideal_power(const Ideal& a, unsigned n) {
  Ideal acc = Ideal::unit(a.ring_ptr());
  for (unsigned k = 0; k < n; ++k) acc = ideal_product(acc, a);
  return acc;
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  const auto ga = a.generators_with_relations();
  const auto gb = b.generators_with_relations();
  return Ideal(a.ring_ptr(), intersect_in_ambient(a.ring(), ga, gb));
}

Ideal colon_by_elimination(const Ideal& i, const Polynomial& f) {
  const Ring& ring = i.ring();
  if (Ideal::zero(i.ring_ptr()).contains(f)) throw DomainError("colon by an element that is zero in R");
  // The preimage of (I :_R f) in S is (I + P) :_S f.
  const auto gi = i.generators_with_relations();
  const std::vector<Polynomial> gf{f};
  std::vector<Polynomial> quotients;
  for (const auto& h : intersect_in_ambient(ring, gi, gf)) {
    auto q = h.divide_exact(f);
    if (!q) throw InternalError("colon: intersection generator not divisible by f");
    quotients.push_back(std::move(*q));
  }
  if (quotients.empty()) return Ideal::zero(i.ring_ptr());
  return Ideal(i.ring_ptr(), std::move(quotients));
}

Ideal colon(const Ideal& i, const Polynomial& f) {
  const Ring& ring = i.ring();
  if (Ideal::zero(i.ring_ptr()).contains(f)) throw DomainError("colon by an element that is zero in R");
  const GroebnerBasis& g = i.groebner();
  Ideal result = pure_power_bounds(g)
                     ? ideal_from_basis(i.ring_ptr(),
                                        colon_zero_dimensional(g, f, ring.weights(),
                                                               ring.limits().max_staircase))
                     : colon_by_elimination(i, f);
  for (const auto& q : result.generators()) {
    if (!g.normal_form(q * f).is_zero()) {
      throw InternalError("colon: generator " + ring.format(q) + " times f is not in I");
    }
  }
  return result;
}

Ideal colon_ideal(const Ideal& i, const Ideal& j) {
  require_same_ring(i, j);
  const Ideal z = Ideal::zero(i.ring_ptr());
  std::optional<Ideal> acc;
  for (const auto& g : j.generators()) {
    if (z.contains(g)) continue;
    Ideal c = colon(i, g);
    acc = acc ? ideal_intersection(*acc, c) : c;
  }
  if (!acc) throw DomainError("colon by the zero ideal");
  return *acc;
}

Saturation saturation(const Ideal& i, const Polynomial& f, unsigned max_steps) {
  Ideal current = i;
  for (unsigned n = 0; n <= max_steps; ++n) {
    Ideal next = colon(current, f);
    if (ideal_equal(next, current)) return {current, n};
    current = std::move(next);
  }
  throw ResourceLimitError("saturation did not stabilize within " +
                           std::to_string(max_steps) + " steps");
}

}  // namespace fsig
