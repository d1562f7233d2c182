#ifndef FSIG_RING_FILE_HPP
#define FSIG_RING_FILE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "fsig/registry.hpp"

namespace fsig {

/// Parses a ring-definition file. One `key = value` per line, `#` starts a
/// comment. Keys:
///
///   p, vars, relation (repeatable), label, dimension, weights,
///   params, socle,
///   qgor.canonical, qgor.h, qgor.a, qgor.params, qgor.a_rest, qgor.saturator
///
/// Polynomial values use the declared variable names; lists are comma
/// separated. `p_override` replaces the file's p. Throws ParseError with a
/// 1-based line and column, ValidationError for a declared dimension that
/// does not match the ring.
RingDefinition parse_ring_definition(std::string_view text,
                                     std::optional<std::uint64_t> p_override = std::nullopt,
                                     ResourceLimits limits = {});

RingDefinition load_ring_definition(const std::string& path,
                                    std::optional<std::uint64_t> p_override = std::nullopt,
                                    ResourceLimits limits = {});

}  // namespace fsig

#endif  // FSIG_RING_FILE_HPP
