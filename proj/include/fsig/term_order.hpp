#ifndef FSIG_TERM_ORDER_HPP
#define FSIG_TERM_ORDER_HPP

#include <compare>
#include <cstddef>
#include <string>

#include "fsig/monomial.hpp"

namespace fsig {

/// A monomial order. Variables are ranked by index: x_0 > x_1 > ... .
///
/// `Elimination(k)` is the product order grevlex(x_0..x_{k-1}) followed by
/// grevlex(x_k..x_{n-1}); any polynomial whose leading monomial avoids the
/// first k variables lies entirely in the remaining ones.
class TermOrder {
public:
  enum class Kind { Lex, GRevLex, Elimination };

  static TermOrder lex() { return TermOrder(Kind::Lex, 0); }
  static TermOrder grevlex() { return TermOrder(Kind::GRevLex, 0); }
  static TermOrder elimination(std::size_t block) {
    return TermOrder(Kind::Elimination, block);
  }

  Kind kind() const { return kind_; }
  std::size_t block() const { return block_; }

  /// Throws DomainError on mismatched variable counts.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }

  std::string name() const;

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

private:
  TermOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}

  Kind kind_;
  std::size_t block_;
};

/// Free-function form of TermOrder::compare.
inline std::strong_ordering compare(const Monomial& a, const Monomial& b,
                                    const TermOrder& order) {
  return order.compare(a, b);
}

}  // namespace fsig

#endif  // FSIG_TERM_ORDER_HPP
