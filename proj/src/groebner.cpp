#include "fsig/groebner.hpp"

#include <algorithm>
#include <string>

#include "fsig/errors.hpp"

namespace fsig {

namespace {

using Terms = std::vector<Term>;

Terms to_ordered(const Polynomial& f, const TermOrder& order) {
  Terms t(f.terms().begin(), f.terms().end());
  if (!(order == TermOrder::grevlex())) {
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) {
      return order.greater(a.monomial, b.monomial);
    });
  }
  return t;
}

std::uint64_t mask_of(const Monomial& m) { return m.support_mask(); }

/// out = a - c * m * b, all inputs sorted descending under `order`.
void sub_scaled(std::span<const Term> a, Coeff c, const Monomial& m, std::span<const Term> b,
                const TermOrder& order, const PrimeField& field, Terms& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  const Coeff nc = field.neg(c);
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    Monomial mb = b[j].monomial * m;
    auto cmp = order.compare(a[i].monomial, mb);
    if (cmp == std::strong_ordering::greater) {
      out.push_back(a[i++]);
    } else if (cmp == std::strong_ordering::less) {
      out.push_back({std::move(mb), field.mul(nc, b[j].coeff)});
      ++j;
    } else {
      Coeff s = field.add(a[i].coeff, field.mul(nc, b[j].coeff));
      if (s != 0) out.push_back({a[i].monomial, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].monomial * m, field.mul(nc, b[j].coeff)});
}

/// Reducer set shared by the engine and by finished bases.
struct Reducers {
  const std::vector<Monomial>& leads;
  const std::vector<std::uint64_t>& masks;
  const std::vector<Terms>& polys;
  const std::vector<char>* active = nullptr;

  std::size_t find(const Monomial& m) const {
    const std::uint64_t mm = mask_of(m);
    for (std::size_t i = 0; i < leads.size(); ++i) {
      if (active != nullptr && !(*active)[i]) continue;
      if ((masks[i] & ~mm) != 0) continue;
      if (leads[i].divides(m)) return i;
    }
    return leads.size();
  }
};

/// Full reduction of h (descending under order) by monic reducers.
Terms reduce_full(Terms h, const Reducers& red, const TermOrder& order, const PrimeField& field) {
  Terms r;
  Terms scratch;
  std::size_t start = 0;
  while (start < h.size()) {
    const Term& lt = h[start];
    const std::size_t idx = red.find(lt.monomial);
    if (idx == red.leads.size()) {
      r.push_back(lt);
      ++start;
      continue;
    }
    const Terms& g = red.polys[idx];
    const Monomial m = lt.monomial / red.leads[idx];
    sub_scaled(std::span<const Term>(h).subspan(start + 1), lt.coeff, m,
               std::span<const Term>(g).subspan(1), order, field, scratch);
    std::swap(h, scratch);
    start = 0;
  }
  return r;
}

Terms make_monic(Terms t, const PrimeField& field) {
  const Coeff inv = field.inv(t.front().coeff);
  for (Term& x : t) x.coeff = field.mul(x.coeff, inv);
  return t;
}

Polynomial from_ordered(const Terms& t, const PrimeField& field, std::size_t nvars) {
  return Polynomial::from_terms(field, nvars, t);
}

}  // namespace

GroebnerBasis::GroebnerBasis(PrimeField field, std::size_t nvars, TermOrder order)
    : field_(field), nvars_(nvars), order_(order) {}

GroebnerBasis GroebnerBasis::from_reduced(PrimeField field, std::size_t nvars, TermOrder order,
                                          std::vector<Polynomial> elements) {
  GroebnerBasis g(field, nvars, order);
  std::vector<Terms> ordered;
  for (const auto& e : elements) {
    if (e.is_zero()) continue;
    ordered.push_back(make_monic(to_ordered(e, order), field));
  }
  std::sort(ordered.begin(), ordered.end(), [&](const Terms& a, const Terms& b) {
    return order.compare(a.front().monomial, b.front().monomial) == std::strong_ordering::less;
  });
  for (auto& t : ordered) {
    g.leads_.push_back(t.front().monomial);
    g.masks_.push_back(mask_of(t.front().monomial));
    g.elements_.push_back(from_ordered(t, field, nvars));
    g.ordered_.push_back(std::move(t));
  }
  return g;
}

std::size_t GroebnerBasis::find_divisor(const Monomial& m) const {
  return Reducers{leads_, masks_, ordered_}.find(m);
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (!(f.field() == field_) || f.nvars() != nvars_) {
    throw DomainError("normal_form: polynomial and basis belong to different rings");
  }
  if (elements_.empty() || f.is_zero()) return f;
  Terms r = reduce_full(to_ordered(f, order_), Reducers{leads_, masks_, ordered_}, order_, field_);
  return from_ordered(r, field_, nvars_);
}

bool GroebnerBasis::verify() const {
  Reducers red{leads_, masks_, ordered_};
  for (std::size_t i = 0; i < ordered_.size(); ++i) {
    if (ordered_[i].front().coeff != 1) return false;
    for (std::size_t k = 0; k < ordered_[i].size(); ++k) {
      const std::size_t d = red.find(ordered_[i][k].monomial);
      if (k == 0 ? d != i : d != leads_.size()) return false;
    }
  }
  Terms s;
  for (std::size_t i = 0; i < ordered_.size(); ++i) {
    for (std::size_t j = i + 1; j < ordered_.size(); ++j) {
      if (leads_[i].coprime(leads_[j])) continue;
      const Monomial l = leads_[i].lcm(leads_[j]);
      Terms a;
      for (auto it = ordered_[i].begin() + 1; it != ordered_[i].end(); ++it) {
        a.push_back({it->monomial * (l / leads_[i]), it->coeff});
      }
      sub_scaled(a, 1, l / leads_[j], std::span<const Term>(ordered_[j]).subspan(1), order_,
                 field_, s);
      if (!reduce_full(s, red, order_, field_).empty()) return false;
    }
  }
  return true;
}

std::string GroebnerBasis::to_string(std::span<const std::string> names) const {
  std::string out;
  for (const auto& e : elements_) {
    out += e.to_string(names);
    out += '\n';
  }
  return out;
}

class BuchbergerEngine {
public:
  BuchbergerEngine(PrimeField field, std::size_t nvars, TermOrder order,
                   const ResourceLimits& limits)
      : field_(field), nvars_(nvars), order_(order), limits_(limits) {}

  GroebnerBasis run(std::span<const Polynomial> generators) {
    for (const auto& g : generators) {
      if (!(g.field() == field_) || g.nvars() != nvars_) {
        throw DomainError("buchberger: generator belongs to a different ring");
      }
      if (g.is_zero()) continue;
      Terms h = reduce_full(to_ordered(g, order_), reducers(), order_, field_);
      if (h.empty()) continue;
      if (h.front().monomial.is_one()) return unit();
      add(make_monic(std::move(h), field_));
    }
    while (!pairs_.empty()) {
      Pair pr = std::move(pairs_.back());
      pairs_.pop_back();
      Terms h = reduce_full(s_polynomial(pr), reducers(), order_, field_);
      if (h.empty()) continue;
      if (h.front().monomial.is_one()) return unit();
      add(make_monic(std::move(h), field_));
    }
    return finish();
  }

private:
  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
  };

  Reducers reducers() const { return Reducers{leads_, masks_, polys_, &active_}; }

  GroebnerBasis unit() const {
    return GroebnerBasis::from_reduced(field_, nvars_, order_,
                                       {Polynomial::constant(field_, nvars_, 1)});
  }

  Terms s_polynomial(const Pair& pr) const {
    const Terms& f = polys_[pr.i];
    const Terms& g = polys_[pr.j];
    const Monomial mf = pr.lcm / leads_[pr.i];
    const Monomial mg = pr.lcm / leads_[pr.j];
    Terms a;
    a.reserve(f.size());
    for (auto it = f.begin() + 1; it != f.end(); ++it) a.push_back({it->monomial * mf, it->coeff});
    Terms out;
    sub_scaled(a, 1, mg, std::span<const Term>(g).subspan(1), order_, field_, out);
    return out;
  }

  // Selection order: smallest lcm first, ties broken by indices.
  bool selected_before(const Pair& a, const Pair& b) const {
    auto c = order_.compare(a.lcm, b.lcm);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  void add(Terms h) {
    const Monomial& lead = h.front().monomial;
    if (lead.degree() > limits_.max_degree) {
      throw ResourceLimitError("Gröbner basis element degree " + std::to_string(lead.degree()) +
                               " exceeds the cap " + std::to_string(limits_.max_degree));
    }
    if (polys_.size() + 1 > limits_.max_basis) {
      throw ResourceLimitError("Gröbner basis size exceeds the cap " +
                               std::to_string(limits_.max_basis));
    }
    const std::size_t k = polys_.size();
    leads_.push_back(lead);
    masks_.push_back(mask_of(lead));
    polys_.push_back(std::move(h));
    active_.push_back(0);
    const Monomial& lk = leads_[k];

    // Gebauer–Möller update.
    std::vector<std::size_t> candidates;
    std::vector<Monomial> cand_lcm;
    for (std::size_t i = 0; i < k; ++i) {
      if (!active_[i]) continue;
      candidates.push_back(i);
      cand_lcm.push_back(leads_[i].lcm(lk));
    }
    std::vector<std::size_t> kept;  // indices into candidates
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      bool keep = leads_[candidates[a]].coprime(lk);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < candidates.size() && keep; ++b) {
          if (cand_lcm[b].divides(cand_lcm[a])) keep = false;
        }
        for (std::size_t b : kept) {
          if (!keep) break;
          if (cand_lcm[b].divides(cand_lcm[a])) keep = false;
        }
      }
      if (keep) kept.push_back(a);
    }
    std::vector<Pair> next;
    next.reserve(pairs_.size() + kept.size());
    for (auto& pr : pairs_) {
      if (!lk.divides(pr.lcm) || leads_[pr.i].lcm(lk) == pr.lcm ||
          leads_[pr.j].lcm(lk) == pr.lcm) {
        next.push_back(std::move(pr));
      }
    }
    for (std::size_t a : kept) {
      const std::size_t i = candidates[a];
      if (!leads_[i].coprime(lk)) next.push_back(Pair{i, k, cand_lcm[a]});
    }
    std::sort(next.begin(), next.end(),
              [&](const Pair& a, const Pair& b) { return selected_before(b, a); });
    pairs_ = std::move(next);

    for (std::size_t i = 0; i < k; ++i) {
      if (active_[i] && lk.divides(leads_[i])) active_[i] = 0;
    }
    active_[k] = 1;
  }

  GroebnerBasis finish() const {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (active_[i]) idx.push_back(i);
    }
    std::vector<Monomial> leads;
    std::vector<std::uint64_t> masks;
    std::vector<Terms> polys;
    for (std::size_t i : idx) {
      leads.push_back(leads_[i]);
      masks.push_back(masks_[i]);
      polys.push_back(polys_[i]);
    }
    Reducers red{leads, masks, polys};
    std::vector<Polynomial> out;
    for (const Terms& t : polys) {
      Terms tail(t.begin() + 1, t.end());
      Terms reduced = reduce_full(std::move(tail), red, order_, field_);
      Terms full;
      full.reserve(reduced.size() + 1);
      full.push_back(t.front());
      full.insert(full.end(), reduced.begin(), reduced.end());
      out.push_back(from_ordered(full, field_, nvars_));
    }
    return GroebnerBasis::from_reduced(field_, nvars_, order_, std::move(out));
  }

  PrimeField field_;
  std::size_t nvars_;
  TermOrder order_;
  ResourceLimits limits_;
  std::vector<Monomial> leads_;
  std::vector<std::uint64_t> masks_;
  std::vector<Terms> polys_;
  std::vector<char> active_;
  std::vector<Pair> pairs_;  // sorted so that back() is selected next
};

GroebnerBasis buchberger(std::span<const Polynomial> generators, PrimeField field,
                         std::size_t nvars, const TermOrder& order,
                         const ResourceLimits& limits) {
  return BuchbergerEngine(field, nvars, order, limits).run(generators);
}

}  // namespace fsig
