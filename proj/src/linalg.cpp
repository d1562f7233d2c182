#include "fsig/linalg.hpp"

#include <algorithm>

namespace fsig::linalg {

std::vector<std::size_t> row_reduce(Matrix& m, const PrimeField& field) {
  const std::uint64_t p = field.characteristic();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      auto a = m.row(piv);
      auto b = m.row(r);
      std::swap_ranges(a.begin() + c, a.end(), b.begin() + c);
    }
    auto prow = m.row(r);
    const Coeff inv = field.inv(prow[c]);
    for (std::size_t j = c; j < m.cols(); ++j) prow[j] = field.mul(prow[j], inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      auto row = m.row(i);
      const Coeff f = row[c];
      if (f == 0) continue;
      const std::uint64_t nf = p - f;
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (prow[j] != 0) row[j] = static_cast<Coeff>((row[j] + nf * prow[j]) % p);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix m, const PrimeField& field) { return row_reduce(m, field).size(); }

std::vector<std::vector<Coeff>> kernel(Matrix m, const PrimeField& field) {
  const auto pivots = row_reduce(m, field);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Coeff>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Coeff> v(m.cols(), 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = field.neg(m.at(i, f));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace fsig::linalg
