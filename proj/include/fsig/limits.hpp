#ifndef FSIG_LIMITS_HPP
#define FSIG_LIMITS_HPP

#include <cstddef>

#include "fsig/monomial.hpp"

namespace fsig {

/// Caps shared by every Gröbner and staircase computation in a ring.
/// Exceeding one raises ResourceLimitError; nothing is truncated silently.
struct ResourceLimits {
  std::size_t max_basis = 20000;
  Exponent max_degree = kMaxExponent;
  std::size_t max_staircase = 4000000;
};

}  // namespace fsig

#endif  // FSIG_LIMITS_HPP
