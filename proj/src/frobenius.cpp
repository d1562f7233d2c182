#include "fsig/frobenius.hpp"

#include <algorithm>

#include "fsig/artinian.hpp"
#include "fsig/errors.hpp"

namespace fsig {

namespace {

Rational normalize(std::uint64_t length, std::uint64_t q, int d) {
  return Rational(BigInt(length), big_pow(q, static_cast<unsigned>(d)));
}

std::optional<Extrapolation> try_extrapolate(std::vector<std::pair<std::uint64_t, Rational>> pts) {
  if (pts.size() < 2) return std::nullopt;
  return extrapolate_limit(pts);
}

}  // namespace

std::uint64_t frobenius_power(std::uint64_t p, unsigned e) {
  std::uint64_t q = 1;
  for (unsigned k = 0; k < e; ++k) {
    if (q > kMaxExponent / p) {
      throw ResourceLimitError("p^" + std::to_string(e) + " exceeds the exponent cap 2^20");
    }
    q *= p;
  }
  return q;
}

Ideal bracket_power(const Ideal& i, std::uint64_t q) {
  const Ring& ring = i.ring();
  if (!is_power_of(q, ring.characteristic())) {
    throw ValidationError("q = " + std::to_string(q) + " is not a power of p = " +
                          std::to_string(ring.characteristic()));
  }
  std::vector<Polynomial> gens;
  gens.reserve(i.generators().size());
  for (const Polynomial& g : i.generators()) {
    Polynomial f = g.frobenius(q);
    if (!f.is_zero() && f.degree() > ring.limits().max_degree) {
      throw ResourceLimitError("bracket power degree " + std::to_string(f.degree()) +
                               " exceeds max degree " + std::to_string(ring.limits().max_degree));
    }
    gens.push_back(std::move(f));
  }
  return Ideal(i.ring_ptr(), std::move(gens));
}

void validate_socle_pair(const Ideal& i, const Polynomial& u) {
  require_m_primary(i, "I");
  std::size_t dim = socle(i).size();
  if (dim != 1) {
    throw ValidationError("I is not irreducible: socle dimension " + std::to_string(dim));
  }
  if (!is_socle_element(i, u)) {
    throw ValidationError("u = " + i.ring().format(u) + " does not represent the socle of I");
  }
}

Ideal splitting_colon(const Ideal& i, const Polynomial& u, std::uint64_t q) {
  return colon(bracket_power(i, q), u.frobenius(q));
}

std::uint64_t splitting_number(const Ideal& i, const Polynomial& u, std::uint64_t q) {
  validate_socle_pair(i, u);
  return length(splitting_colon(i, u, q)).value();
}

Extrapolation extrapolate_limit(std::span<const std::pair<std::uint64_t, Rational>> rows) {
  if (rows.size() < 2) throw ValidationError("extrapolation needs at least two rows");
  auto fit = rows.subspan(rows.size() - std::min<std::size_t>(3, rows.size()));
  Rational n(static_cast<long long>(fit.size()));
  Rational sx, sy, sxx, sxy;
  for (const auto& [q, y] : fit) {
    Rational x(BigInt(1), BigInt(q));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  Rational denom = n * sxx - sx * sx;
  if (denom == 0) throw ValidationError("extrapolation needs distinct q values");
  Extrapolation out;
  out.slope = (n * sxy - sx * sy) / denom;
  out.limit = (sy - out.slope * sx) / n;
  out.rows_used = fit.size();
  for (const auto& [q, y] : fit) {
    Rational r = y - out.limit - out.slope / Rational(BigInt(q));
    if (r < 0) r = -r;
    out.residual = std::max(out.residual, r);
  }
  return out;
}

HKEstimate hk_sequence(const Ideal& i, unsigned e_max, std::string label) {
  require_m_primary(i, "I");
  HKEstimate est;
  est.label = std::move(label);
  est.dimension = ring_dimension(i.ring_ptr());
  const std::uint64_t p = i.ring().characteristic();
  for (unsigned e = 1; e <= e_max; ++e) {
    try {
      std::uint64_t q = frobenius_power(p, e);
      std::uint64_t len = length(bracket_power(i, q)).value();
      est.rows.push_back({e, q, len, normalize(len, q, est.dimension)});
    } catch (const ResourceLimitError& err) {
      est.truncated = true;
      est.truncation_reason = "e = " + std::to_string(e) + ": " + err.what();
      break;
    }
  }
  std::vector<std::pair<std::uint64_t, Rational>> pts;
  for (const HKRow& r : est.rows) pts.emplace_back(r.q, r.normalized);
  est.extrapolation = try_extrapolate(std::move(pts));
  return est;
}

SignatureEstimate signature_sequence(const IdealTower& tower, unsigned e_max, unsigned t_max) {
  if (t_max < 2) throw ValidationError("t_max must be at least 2");
  SignatureEstimate est;
  est.label = tower.label();
  est.method = "tower-colon";
  est.dimension = ring_dimension(tower.ring());
  const std::uint64_t p = tower.ring()->characteristic();
  for (unsigned e = 1; e <= e_max; ++e) {
    const std::uint64_t q = frobenius_power(p, e);
    SignatureRow row{e, q, 0, {}, t_max, false, {}, 0, 0};
    for (unsigned t = 1; t <= t_max; ++t) {
      row.lengths_by_t.push_back(length(tower.splitting_colon(t, q)).value());
      if (t >= 2 && row.lengths_by_t[t - 1] == row.lengths_by_t[t - 2]) {
        row.t = t - 1;
        row.stable = true;
        break;
      }
    }
    row.length = row.lengths_by_t[row.t - 1];
    row.normalized = normalize(row.length, q, est.dimension);
    est.all_stable = est.all_stable && row.stable;
    est.rows.push_back(std::move(row));
  }
  std::vector<std::pair<std::uint64_t, Rational>> pts;
  for (const SignatureRow& r : est.rows) pts.emplace_back(r.q, r.normalized);
  est.extrapolation = try_extrapolate(std::move(pts));
  return est;
}

SignatureEstimate signature_via_hk_difference(const Ideal& i, const Polynomial& u,
                                              unsigned e_max) {
  validate_socle_pair(i, u);
  SignatureEstimate est;
  est.method = "hk-difference";
  est.dimension = ring_dimension(i.ring_ptr());
  const Ideal plus = ideal_sum(i, Ideal(i.ring_ptr(), {u}));
  const std::uint64_t p = i.ring().characteristic();
  for (unsigned e = 1; e <= e_max; ++e) {
    const std::uint64_t q = frobenius_power(p, e);
    SignatureRow row{e, q, 0, {}, 1, true, {}, 0, 0};
    row.hk_length = length(bracket_power(i, q)).value();
    row.hk_plus_length = length(bracket_power(plus, q)).value();
    if (row.hk_plus_length > row.hk_length) {
      throw InternalError("λ(R/(I+uR)^[q]) exceeds λ(R/I^[q])");
    }
    row.length = row.hk_length - row.hk_plus_length;
    row.normalized = normalize(row.length, q, est.dimension);
    est.rows.push_back(std::move(row));
  }
  std::vector<std::pair<std::uint64_t, Rational>> pts;
  for (const SignatureRow& r : est.rows) pts.emplace_back(r.q, r.normalized);
  est.extrapolation = try_extrapolate(std::move(pts));
  return est;
}

SplittingIdentity check_splitting_identity(const Ideal& i, const Polynomial& u, std::uint64_t q) {
  SplittingIdentity out{q, 0, 0, 0};
  out.colon_length = length(splitting_colon(i, u, q)).value();
  out.hk_length = length(bracket_power(i, q)).value();
  out.hk_plus_length = length(bracket_power(ideal_sum(i, Ideal(i.ring_ptr(), {u})), q)).value();
  return out;
}

}  // namespace fsig
