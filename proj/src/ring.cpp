#include "fsig/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "fsig/errors.hpp"
#include "fsig/parser.hpp"

namespace fsig {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

Ring::Ring(PrimeField field, std::vector<std::string> names,
           std::vector<Polynomial> relations, std::vector<Exponent> weights,
           ResourceLimits limits)
    : field_(field),
      names_(std::move(names)),
      relations_(std::move(relations)),
      weights_(std::move(weights)),
      limits_(limits) {
  if (names_.empty()) throw ValidationError("a ring needs at least one variable");
  if (names_.size() > kMaxVariables) throw ValidationError("at most 64 variables are supported");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!valid_identifier(n)) throw ValidationError("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw ValidationError("duplicate variable name '" + n + "'");
  }
  if (weights_.empty()) weights_.assign(names_.size(), 1);
  if (weights_.size() != names_.size()) {
    throw ValidationError("weights must list one entry per variable");
  }
  for (Exponent w : weights_) {
    if (w == 0) throw ValidationError("weights must be positive");
  }
  for (const auto& r : relations_) {
    if (!(r.field() == field_) || r.nvars() != names_.size()) {
      throw ValidationError("relation does not belong to the ring");
    }
  }
  relations_.erase(std::remove_if(relations_.begin(), relations_.end(),
                                  [](const Polynomial& f) { return f.is_zero(); }),
                   relations_.end());
  if (limits_.max_basis == 0 || limits_.max_degree == 0 || limits_.max_staircase == 0) {
    throw ValidationError("resource caps must be positive");
  }
}

std::shared_ptr<const Ring> Ring::create(std::uint64_t p, std::vector<std::string> names,
                                         const std::vector<std::string>& relations,
                                         std::vector<Exponent> weights,
                                         ResourceLimits limits) {
  PrimeField field(p);
  std::vector<Polynomial> rels;
  for (const auto& r : relations) rels.push_back(parse_polynomial(r, field, names));
  return std::make_shared<const Ring>(field, std::move(names), std::move(rels),
                                      std::move(weights), limits);
}

std::vector<Polynomial> Ring::variables() const {
  std::vector<Polynomial> v;
  for (std::size_t i = 0; i < nvars(); ++i) v.push_back(variable(i));
  return v;
}

Polynomial Ring::parse(std::string_view text) const {
  return parse_polynomial(text, field_, names_);
}

std::vector<Polynomial> Ring::parse_list(std::string_view text) const {
  return parse_polynomial_list(text, field_, names_);
}

bool Ring::is_graded() const {
  return std::all_of(relations_.begin(), relations_.end(),
                     [&](const Polynomial& f) { return f.is_homogeneous(weights_); });
}

bool Ring::same_ring(const Ring& other) const {
  return this == &other ||
         (field_ == other.field_ && names_ == other.names_ && relations_ == other.relations_);
}

}  // namespace fsig
