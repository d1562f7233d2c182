#include "fsig/artinian.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "fsig/errors.hpp"
#include "fsig/linalg.hpp"
#include "fsig/quotient.hpp"

namespace fsig {

namespace {

bool all_homogeneous(std::span<const Polynomial> polys, std::span<const Exponent> w) {
  return std::all_of(polys.begin(), polys.end(),
                     [&](const Polynomial& f) { return f.is_homogeneous(w); });
}

void best_independent(std::size_t var, std::size_t n, std::uint64_t chosen, int size,
                      const std::vector<std::uint64_t>& supports, int& best) {
  if (size + static_cast<int>(n - var) <= best) return;
  if (var == n) {
    best = std::max(best, size);
    return;
  }
  const std::uint64_t with = chosen | (std::uint64_t{1} << var);
  const bool ok = std::none_of(supports.begin(), supports.end(),
                               [&](std::uint64_t s) { return (s & ~with) == 0; });
  if (ok) best_independent(var + 1, n, with, size + 1, supports, best);
  best_independent(var + 1, n, chosen, size, supports, best);
}

/// All monomials in n variables of weighted degree < cap, keyed by degree.
std::map<Exponent, std::vector<Monomial>> monomials_below(std::size_t n,
                                                          std::span<const Exponent> w,
                                                          Exponent cap) {
  std::map<Exponent, std::vector<Monomial>> out;
  if (cap == 0) return out;
  std::vector<Exponent> e(n, 0);
  // Odometer over exponent vectors with weighted degree < cap.
  for (;;) {
    Exponent d = 0;
    for (std::size_t i = 0; i < n; ++i) d += w[i] * e[i];
    out[d].emplace_back(e);
    std::size_t i = 0;
    for (; i < n; ++i) {
      ++e[i];
      Exponent nd = 0;
      for (std::size_t k = 0; k < n; ++k) nd += w[k] * e[k];
      if (nd < cap) break;
      e[i] = 0;
    }
    if (i == n) break;
  }
  return out;
}

}  // namespace

std::uint64_t Length::value() const {
  if (!value_) throw ValidationError("length is infinite (quotient is not Artinian)");
  return *value_;
}

std::optional<StandardMonomialBasis> standard_monomials(const Ideal& i, const TermOrder& order) {
  auto stair = Staircase::build(i.groebner(order), i.ring().limits().max_staircase);
  if (!stair) return std::nullopt;
  return StandardMonomialBasis{
      order, std::vector<Monomial>(stair->monomials().begin(), stair->monomials().end())};
}

Length length(const Ideal& i, const TermOrder& order) {
  auto n = count_standard_monomials(i.groebner(order), i.ring().limits().max_staircase);
  return n ? Length::finite(*n) : Length::infinite();
}

int krull_dimension(const Ideal& i) {
  const GroebnerBasis& g = i.groebner();
  if (g.is_unit()) return -1;
  std::vector<std::uint64_t> supports;
  for (const Monomial& m : g.leading_monomials()) supports.push_back(m.support_mask());
  int best = 0;
  best_independent(0, i.ring().nvars(), 0, 0, supports, best);
  return best;
}

int ring_dimension(const RingPtr& ring) { return krull_dimension(Ideal::zero(ring)); }

bool is_m_primary(const Ideal& i) {
  const GroebnerBasis& g = i.groebner();
  if (g.is_unit() || !pure_power_bounds(g)) return false;
  const Ring& ring = i.ring();
  if (all_homogeneous(i.generators(), ring.weights()) && ring.is_graded()) return true;
  // Zero-dimensional but possibly supported away from the origin: each
  // variable must be nilpotent, and x^λ ∈ I suffices when λ = dim R/I.
  const std::uint64_t len = length(i).value();
  for (std::size_t v = 0; v < ring.nvars(); ++v) {
    Polynomial acc = ring.one();
    Polynomial base = g.normal_form(ring.variable(v));
    for (std::uint64_t e = len; e > 0; e >>= 1) {
      if (e & 1) acc = g.normal_form(acc * base);
      if (e > 1) base = g.normal_form(base * base);
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

void require_m_primary(const Ideal& i, const std::string& what) {
  if (!is_m_primary(i)) {
    throw ValidationError(what + " " + i.to_string() +
                          " is not primary to the maximal ideal of the variables");
  }
}

std::uint64_t length_dense_oracle(const Ideal& i, Exponent degree_cap) {
  const Ring& ring = i.ring();
  const auto w = ring.weights();
  const auto gens = i.generators_with_relations();
  if (!all_homogeneous(gens, w)) {
    throw ValidationError("dense length oracle requires homogeneous generators");
  }
  const Exponent max_w = *std::max_element(w.begin(), w.end());
  // Degrees [cap, cap + max_w) are built only to certify that they vanish.
  const auto blocks = monomials_below(ring.nvars(), w, degree_cap + max_w);
  const PrimeField& field = ring.field();
  std::uint64_t total = 0;
  for (const auto& [deg, cols] : blocks) {
    std::unordered_map<Monomial, std::size_t, MonomialHash> col_of;
    for (std::size_t c = 0; c < cols.size(); ++c) col_of.emplace(cols[c], c);
    std::vector<std::vector<Coeff>> rows;
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      const Exponent gd = g.weighted_degree(w);
      if (gd > deg) continue;
      auto mult = blocks.find(deg - gd);
      if (mult == blocks.end()) continue;
      for (const Monomial& m : mult->second) {
        std::vector<Coeff> row(cols.size(), 0);
        for (const Term& t : g.terms()) row[col_of.at(t.monomial * m)] = t.coeff;
        rows.push_back(std::move(row));
      }
    }
    linalg::Matrix mat(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::copy(rows[r].begin(), rows[r].end(), mat.row(r).begin());
    }
    const std::size_t rk = linalg::rank(std::move(mat), field);
    if (deg >= degree_cap) {
      if (rk != cols.size()) {
        throw ValidationError("dense length oracle: degree cap " + std::to_string(degree_cap) +
                              " too small, R/I is nonzero in degree " + std::to_string(deg));
      }
      continue;
    }
    total += cols.size() - rk;
  }
  return total;
}

std::vector<Polynomial> socle(const Ideal& i) {
  const GroebnerBasis& g = i.groebner();
  const Ring& ring = i.ring();
  auto stair = Staircase::build(g, ring.limits().max_staircase);
  if (!stair) throw ValidationError("socle: R/I is not Artinian for I = " + i.to_string());
  const auto w = ring.weights();
  const bool graded = all_homogeneous(g.elements(), w);
  const auto monos = stair->monomials();
  std::map<Exponent, std::vector<std::size_t>> blocks;
  for (std::size_t k = 0; k < monos.size(); ++k) {
    blocks[graded ? monos[k].weighted_degree(w) : 0].push_back(k);
  }
  const PrimeField& field = ring.field();
  std::vector<Polynomial> out;
  for (const auto& [deg, cols] : blocks) {
    // Stack the maps x_v : block -> R/I; rows are indexed by (v, staircase index).
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> row_of;
    std::vector<std::vector<std::pair<std::size_t, Coeff>>> col_entries(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      for (std::size_t v = 0; v < ring.nvars(); ++v) {
        const Polynomial img =
            g.normal_form(Polynomial::monomial(field, monos[cols[c]] * Monomial::variable(ring.nvars(), v), 1));
        for (const Term& t : img.terms()) {
          auto key = std::make_pair(v, *stair->index(t.monomial));
          auto [it, inserted] = row_of.emplace(key, row_of.size());
          col_entries[c].emplace_back(it->second, t.coeff);
        }
      }
    }
    linalg::Matrix mat(row_of.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      for (const auto& [r, a] : col_entries[c]) mat.at(r, c) = a;
    }
    for (const auto& v : linalg::kernel(std::move(mat), field)) {
      std::vector<Term> terms;
      for (std::size_t c = 0; c < cols.size(); ++c) {
        if (v[c] != 0) terms.push_back({monos[cols[c]], v[c]});
      }
      out.push_back(Polynomial::from_terms(field, ring.nvars(), std::move(terms)).monic());
    }
  }
  return out;
}

bool is_irreducible(const Ideal& i) { return socle(i).size() == 1; }

bool is_socle_element(const Ideal& i, const Polynomial& u) {
  if (i.contains(u)) return false;
  const Ring& ring = i.ring();
  for (std::size_t v = 0; v < ring.nvars(); ++v) {
    if (!i.contains(ring.variable(v) * u)) return false;
  }
  return true;
}

}  // namespace fsig
