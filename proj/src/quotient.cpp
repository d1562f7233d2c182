#include "fsig/quotient.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "fsig/errors.hpp"
#include "fsig/linalg.hpp"

namespace fsig {

namespace {

bool is_standard(const GroebnerBasis& g, const Monomial& m) {
  return g.find_divisor(m) == g.size();
}

/// Visits each standard monomial once; stops with ResourceLimitError when
/// more than max_count are found.
template <class Visit>
void enumerate_staircase(const GroebnerBasis& g, const std::vector<Exponent>& bounds,
                         std::size_t max_count, Visit&& visit) {
  const std::size_t n = g.nvars();
  Monomial one(n);
  if (!is_standard(g, one)) return;
  std::size_t seen = 0;
  // (monomial, smallest variable index allowed to grow)
  std::vector<std::pair<Monomial, std::size_t>> stack;
  stack.emplace_back(std::move(one), 0);
  while (!stack.empty()) {
    auto [m, from] = std::move(stack.back());
    stack.pop_back();
    if (++seen > max_count) {
      throw ResourceLimitError("staircase exceeds the cap of " + std::to_string(max_count) +
                               " standard monomials");
    }
    for (std::size_t i = n; i-- > from;) {
      if (m[i] + 1 >= bounds[i]) continue;
      Monomial next = m;
      next.set(i, m[i] + 1);
      if (is_standard(g, next)) stack.emplace_back(std::move(next), i);
    }
    visit(m);
  }
}

}  // namespace

std::optional<std::vector<Exponent>> pure_power_bounds(const GroebnerBasis& g) {
  const std::size_t n = g.nvars();
  std::vector<Exponent> bounds(n, 0);
  for (const Monomial& lm : g.leading_monomials()) {
    if (lm.is_one()) return std::vector<Exponent>(n, 0);
    std::size_t var = n;
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (lm[i] != 0) {
        var = i;
        ++nonzero;
      }
    }
    if (nonzero == 1 && (bounds[var] == 0 || lm[var] < bounds[var])) bounds[var] = lm[var];
  }
  for (Exponent b : bounds) {
    if (b == 0) return std::nullopt;
  }
  return bounds;
}

std::optional<std::uint64_t> count_standard_monomials(const GroebnerBasis& g,
                                                      std::size_t max_count) {
  if (g.is_unit()) return 0;
  auto bounds = pure_power_bounds(g);
  if (!bounds) return std::nullopt;
  std::uint64_t count = 0;
  enumerate_staircase(g, *bounds, max_count, [&](const Monomial&) { ++count; });
  return count;
}

std::optional<Staircase> Staircase::build(const GroebnerBasis& g, std::size_t max_size) {
  Staircase s;
  if (g.is_unit()) return s;
  auto bounds = pure_power_bounds(g);
  if (!bounds) return std::nullopt;
  enumerate_staircase(g, *bounds, max_size, [&](const Monomial& m) { s.monos_.push_back(m); });
  const TermOrder& order = g.order();
  std::sort(s.monos_.begin(), s.monos_.end(), [&](const Monomial& a, const Monomial& b) {
    return order.compare(a, b) == std::strong_ordering::less;
  });
  s.index_.reserve(s.monos_.size());
  for (std::size_t i = 0; i < s.monos_.size(); ++i) s.index_.emplace(s.monos_[i], i);
  return s;
}

std::optional<std::size_t> Staircase::index(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Coeff> Staircase::coordinates(const Polynomial& normal_form) const {
  std::vector<Coeff> v(monos_.size(), 0);
  for (const Term& t : normal_form.terms()) {
    auto i = index(t.monomial);
    if (!i) throw InternalError("coordinates: polynomial is not in normal form");
    v[*i] = t.coeff;
  }
  return v;
}

GroebnerBasis colon_zero_dimensional(const GroebnerBasis& g, const Polynomial& f,
                                     std::span<const Exponent> weights,
                                     std::size_t max_staircase) {
  const PrimeField& field = g.field();
  const std::size_t n = g.nvars();
  const TermOrder& order = g.order();
  auto unit = [&] {
    return GroebnerBasis::from_reduced(field, n, order, {Polynomial::constant(field, n, 1)});
  };
  if (g.is_unit()) return g;
  auto stair = Staircase::build(g, max_staircase);
  if (!stair) throw DomainError("colon_zero_dimensional: ideal is not zero-dimensional");
  const Polynomial fn = g.normal_form(f);
  if (fn.is_zero()) return unit();

  bool graded = fn.is_homogeneous(weights);
  for (const auto& e : g.elements()) graded = graded && e.is_homogeneous(weights);

  const auto monos = stair->monomials();
  // Degree blocks (a single block when not graded), each sorted descending
  // under the term order so echelon pivots are leading monomials.
  std::map<Exponent, std::vector<std::size_t>> blocks;
  for (std::size_t i = monos.size(); i-- > 0;) {
    blocks[graded ? monos[i].weighted_degree(weights) : 0].push_back(i);
  }
  const Exponent shift = graded ? fn.weighted_degree(weights) : 0;

  std::vector<char> is_pivot(monos.size(), 0);
  // pivot index -> reducer row as (staircase index, coeff) over non-pivots
  std::unordered_map<std::size_t, std::vector<std::pair<std::size_t, Coeff>>> pivot_rows;

  for (const auto& [deg, cols] : blocks) {
    static const std::vector<std::size_t> kEmpty;
    auto tgt_it = blocks.find(deg + shift);
    const std::vector<std::size_t>& rows = tgt_it == blocks.end() ? kEmpty : tgt_it->second;
    std::unordered_map<std::size_t, std::size_t> row_of;
    for (std::size_t r = 0; r < rows.size(); ++r) row_of.emplace(rows[r], r);

    linalg::Matrix mult(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const Polynomial img = g.normal_form(fn.mul_term(monos[cols[c]], 1));
      for (const Term& t : img.terms()) {
        auto idx = stair->index(t.monomial);
        if (!idx) throw InternalError("colon: normal form left the staircase");
        auto r = row_of.find(*idx);
        if (r == row_of.end()) throw InternalError("colon: image left its degree block");
        mult.at(r->second, c) = t.coeff;
      }
    }
    auto kernel = linalg::kernel(std::move(mult), field);
    if (kernel.empty()) continue;

    // `cols` is already descending under the order.
    linalg::Matrix k(kernel.size(), cols.size());
    for (std::size_t r = 0; r < kernel.size(); ++r) {
      for (std::size_t c = 0; c < cols.size(); ++c) k.at(r, c) = kernel[r][c];
    }
    const auto pivots = linalg::row_reduce(k, field);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      const std::size_t pivot = cols[pivots[r]];
      is_pivot[pivot] = 1;
      std::vector<std::pair<std::size_t, Coeff>> row;
      for (std::size_t c = pivots[r] + 1; c < cols.size(); ++c) {
        if (k.at(r, c) != 0) row.emplace_back(cols[c], k.at(r, c));
      }
      pivot_rows.emplace(pivot, std::move(row));
    }
  }

  std::unordered_set<Monomial, MonomialHash> remaining;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    if (!is_pivot[i]) remaining.insert(monos[i]);
  }
  if (remaining.empty()) return unit();

  // Minimal generators of the new leading-term ideal are x_i * b with b
  // standard and every divisor m / x_j standard.
  std::vector<Monomial> corners;
  std::unordered_set<Monomial, MonomialHash> seen;
  for (const Monomial& b : remaining) {
    for (std::size_t i = 0; i < n; ++i) {
      Monomial m = b;
      m.set(i, b[i] + 1);
      if (remaining.count(m) || seen.count(m)) continue;
      bool minimal = true;
      for (std::size_t j = 0; j < n && minimal; ++j) {
        if (j == i || m[j] == 0) continue;
        Monomial d = m;
        d.set(j, m[j] - 1);
        minimal = remaining.count(d) > 0;
      }
      seen.insert(m);
      if (minimal) corners.push_back(std::move(m));
    }
  }

  std::vector<Polynomial> elements;
  elements.reserve(corners.size());
  for (const Monomial& m : corners) {
    const Polynomial r = g.normal_form(Polynomial::monomial(field, m, 1));
    std::unordered_map<std::size_t, Coeff> acc;
    for (const Term& t : r.terms()) {
      const std::size_t i = *stair->index(t.monomial);
      if (is_pivot[i]) {
        for (const auto& [j, a] : pivot_rows.at(i)) {
          Coeff& slot = acc[j];
          slot = field.sub(slot, field.mul(t.coeff, a));
        }
      } else {
        Coeff& slot = acc[i];
        slot = field.add(slot, t.coeff);
      }
    }
    std::vector<Term> terms;
    terms.push_back({m, 1});
    for (const auto& [i, c] : acc) {
      if (c != 0) terms.push_back({monos[i], field.neg(c)});
    }
    elements.push_back(Polynomial::from_terms(field, n, std::move(terms)));
  }
  return GroebnerBasis::from_reduced(field, n, order, std::move(elements));
}

}  // namespace fsig
