#include "fsig/term_order.hpp"

#include "fsig/errors.hpp"

namespace fsig {

namespace {

// grevlex restricted to variables [lo, hi).
std::strong_ordering grevlex_block(const Monomial& a, const Monomial& b,
                                   std::size_t lo, std::size_t hi) {
  Exponent da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) throw DomainError("compare: variable counts differ");
  const std::size_t n = a.size();
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    case Kind::GRevLex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      for (std::size_t i = n; i-- > 0;) {
        if (a[i] != b[i]) return b[i] <=> a[i];
      }
      return std::strong_ordering::equal;
    case Kind::Elimination: {
      const std::size_t k = block_ < n ? block_ : n;
      auto c = grevlex_block(a, b, 0, k);
      if (c != std::strong_ordering::equal) return c;
      return grevlex_block(a, b, k, n);
    }
  }
  return std::strong_ordering::equal;
}

std::string TermOrder::name() const {
  switch (kind_) {
    case Kind::Lex: return "lex";
    case Kind::GRevLex: return "grevlex";
    case Kind::Elimination: return "elim(" + std::to_string(block_) + ")";
  }
  return "?";
}

}  // namespace fsig
