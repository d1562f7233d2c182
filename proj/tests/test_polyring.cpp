#include <gtest/gtest.h>

#include <random>

#include "fsig/errors.hpp"
#include "fsig/parser.hpp"
#include "fsig/polynomial.hpp"
#include "fsig/prime_field.hpp"
#include "fsig/ring.hpp"
#include "fsig/term_order.hpp"
#include "test_support.hpp"

using namespace fsig;
using fsig::testing::random_monomial;
using fsig::testing::random_polynomial;

namespace {

// Inverse by the extended Euclidean algorithm on signed integers.
std::int64_t euclid_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  return ((s0 % p) + p) % p;
}

Polynomial repeated_product(const Polynomial& f, std::uint64_t n) {
  Polynomial r = Polynomial::constant(f.field(), f.nvars(), 1);
  for (std::uint64_t k = 0; k < n; ++k) r = r * f;
  return r;
}

const std::vector<std::string> kXYZ = {"x", "y", "z"};

}  // namespace

TEST(PrimeField, RejectsComposite) {
  EXPECT_THROW(PrimeField(6), ValidationError);
  EXPECT_THROW(PrimeField(1), ValidationError);
  EXPECT_THROW(PrimeField(PrimeField::kMaxPrime + 2), ValidationError);
  EXPECT_NO_THROW(PrimeField(PrimeField::kMaxPrime));
}

TEST(PrimeField, Inverse) {
  EXPECT_EQ(PrimeField(5).inv(2), 3u);
  EXPECT_EQ(PrimeField(2).inv(1), 1u);
  EXPECT_THROW(PrimeField(7).inv(0), DomainError);

  PrimeField f(7919);
  Coeff v = f.inv(1234);
  EXPECT_EQ(static_cast<std::int64_t>(v), euclid_inverse(1234, 7919));
  EXPECT_EQ(f.mul(1234, v), 1u);
}

TEST(PrimeField, InverseAgreesWithEuclidOnLargePrime) {
  PrimeField f(PrimeField::kMaxPrime);
  std::mt19937 rng(11);
  std::uniform_int_distribution<Coeff> d(1, f.characteristic() - 1);
  for (int k = 0; k < 200; ++k) {
    Coeff a = d(rng);
    EXPECT_EQ(static_cast<std::int64_t>(f.inv(a)), euclid_inverse(a, f.characteristic()));
  }
}

TEST(PrimeField, MillerRabinMatchesTrialDivision) {
  auto trial = [](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  };
  for (std::uint64_t n = 0; n < 5000; ++n) EXPECT_EQ(is_prime(n), trial(n)) << n;
  EXPECT_TRUE(is_prime(2147483647));
  EXPECT_FALSE(is_prime(2147483649ull));
}

TEST(Polynomial, PowExamples) {
  PrimeField f2(2), f3(3);
  std::vector<std::string> xy = {"x", "y"};
  EXPECT_EQ(parse_polynomial("(x+y)", f2, xy).pow(2), parse_polynomial("x^2+y^2", f2, xy));
  EXPECT_EQ(parse_polynomial("x+y", f3, xy).pow(3), parse_polynomial("x^3+y^3", f3, xy));
  EXPECT_EQ(parse_polynomial("x+y", f3, xy).pow(2), parse_polynomial("x^2+2*x*y+y^2", f3, xy));
  EXPECT_EQ(parse_polynomial("x+y", f3, xy).pow(0), Polynomial::constant(f3, 2, 1));
}

TEST(Polynomial, PowMatchesRepeatedProduct) {
  std::mt19937 rng(3);
  for (std::uint64_t p : {2, 3, 5}) {
    PrimeField field(p);
    for (int k = 0; k < 10; ++k) {
      Polynomial f = random_polynomial(rng, field, 3, 3, 2);
      for (std::uint64_t n : {1, 2, 3, 5, 6, 9}) {
        EXPECT_EQ(f.pow(n), repeated_product(f, n)) << "p=" << p << " n=" << n;
      }
    }
  }
}

TEST(Polynomial, PowByPIsTermwiseFrobenius) {
  std::mt19937 rng(5);
  for (std::uint64_t p : {2, 3, 5}) {
    PrimeField field(p);
    for (int k = 0; k < 100; ++k) {
      Polynomial f = random_polynomial(rng, field, 3, 4, 3);
      std::vector<Term> terms;
      for (const Term& t : f.terms()) terms.push_back({t.monomial.pow(p), t.coeff});
      EXPECT_EQ(repeated_product(f, p), Polynomial::from_terms(field, 3, terms));
      EXPECT_EQ(f.frobenius(p), repeated_product(f, p));
    }
  }
}

TEST(Polynomial, RingAxioms) {
  std::mt19937 rng(7);
  PrimeField field(7);
  Polynomial one = Polynomial::constant(field, 3, 1);
  for (int k = 0; k < 100; ++k) {
    Polynomial f = random_polynomial(rng, field, 3, 4, 3);
    Polynomial g = random_polynomial(rng, field, 3, 4, 3);
    Polynomial h = random_polynomial(rng, field, 3, 4, 3);
    EXPECT_EQ((f + g) * h, f * h + g * h);
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ(f * one, f);
    EXPECT_TRUE((f - f).is_zero());
    EXPECT_EQ(f + (g + h), (f + g) + h);
  }
}

TEST(Polynomial, NoZeroCoefficientsStored) {
  PrimeField f3(3);
  Polynomial f = parse_polynomial("x + 2*x + y", f3, kXYZ);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_NE(f.terms()[0].coeff, 0u);
}

TEST(Polynomial, FrobeniusRejectsNonPower) {
  PrimeField f3(3);
  Polynomial f = parse_polynomial("x + y", f3, kXYZ);
  EXPECT_THROW(f.frobenius(6), DomainError);
}

TEST(Parser, Examples) {
  PrimeField f3(3);
  Polynomial f = parse_polynomial("x*y - z^2", f3, kXYZ);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f.terms()[0].monomial, Monomial({1, 1, 0}));
  EXPECT_EQ(f.terms()[0].coeff, 1u);
  EXPECT_EQ(f.terms()[1].monomial, Monomial({0, 0, 2}));
  EXPECT_EQ(f.terms()[1].coeff, 2u);
  EXPECT_TRUE(parse_polynomial("0", f3, kXYZ).is_zero());
  EXPECT_EQ(parse_polynomial("(x+y)^3", f3, kXYZ), parse_polynomial("x^3 + y^3", f3, kXYZ));
}

TEST(Parser, PrecedenceAndUnaryMinus) {
  PrimeField f7(7);
  EXPECT_EQ(parse_polynomial("2*x^2", f7, kXYZ), parse_polynomial("x^2 + x^2", f7, kXYZ));
  EXPECT_EQ(parse_polynomial("-x + y", f7, kXYZ), parse_polynomial("y - x", f7, kXYZ));
  EXPECT_EQ(parse_polynomial("x - -y", f7, kXYZ), parse_polynomial("x + y", f7, kXYZ));
  EXPECT_EQ(parse_polynomial("  x *( y+ z )  ", f7, kXYZ),
            parse_polynomial("x*y + x*z", f7, kXYZ));
  EXPECT_EQ(parse_polynomial("15*x", f7, kXYZ), parse_polynomial("x", f7, kXYZ));
}

TEST(Parser, Errors) {
  PrimeField f3(3);
  try {
    parse_polynomial("x + * y", f3, kXYZ);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse_polynomial("x + w", f3, kXYZ), ParseError);
  EXPECT_THROW(parse_polynomial("x^9999999", f3, kXYZ), ParseError);
  EXPECT_THROW(parse_polynomial("(x + y", f3, kXYZ), ParseError);
  EXPECT_THROW(parse_polynomial("", f3, kXYZ), ParseError);
}

TEST(Parser, RoundTripsPrettyPrint) {
  std::mt19937 rng(13);
  for (std::uint64_t p : {2, 3, 7, 101}) {
    PrimeField field(p);
    for (int k = 0; k < 50; ++k) {
      Polynomial f = random_polynomial(rng, field, 3, 5, 4);
      std::string text = f.to_string(kXYZ);
      EXPECT_EQ(parse_polynomial(text, field, kXYZ), f) << text;
    }
  }
}

TEST(TermOrder, Examples) {
  Monomial x2y{2, 1}, xy2{1, 2}, x{1, 0}, y5{0, 5};
  EXPECT_TRUE(TermOrder::grevlex().greater(x2y, xy2));
  EXPECT_TRUE(TermOrder::lex().greater(x, y5));
  EXPECT_TRUE(TermOrder::grevlex().greater(y5, x));
  for (const TermOrder& o : {TermOrder::lex(), TermOrder::grevlex(), TermOrder::elimination(1)}) {
    EXPECT_EQ(o.compare(x2y, x2y), std::strong_ordering::equal);
  }
  // grevlex in degree 2: x^2 > xy > y^2 > xz > yz > z^2.
  EXPECT_TRUE(TermOrder::grevlex().greater(Monomial{0, 2, 0}, Monomial{1, 0, 1}));
  EXPECT_TRUE(TermOrder::lex().greater(Monomial{1, 0, 1}, Monomial{0, 2, 0}));
  EXPECT_THROW(TermOrder::lex().compare(Monomial{1, 0}, Monomial{1, 0, 0}), DomainError);
}

TEST(TermOrder, TotalMultiplicativeOrder) {
  std::mt19937 rng(17);
  for (const TermOrder& o : {TermOrder::lex(), TermOrder::grevlex(), TermOrder::elimination(1),
                             TermOrder::elimination(2)}) {
    for (int k = 0; k < 500; ++k) {
      Monomial u = random_monomial(rng, 4, 3), v = random_monomial(rng, 4, 3),
               w = random_monomial(rng, 4, 3);
      auto uv = o.compare(u, v);
      EXPECT_EQ(uv == std::strong_ordering::equal, u == v);
      EXPECT_EQ(o.compare(v, u), 0 <=> uv);
      if (uv == std::strong_ordering::less) {
        EXPECT_EQ(o.compare(u * w, v * w), std::strong_ordering::less);
        if (o.compare(v, w) == std::strong_ordering::less) {
          EXPECT_EQ(o.compare(u, w), std::strong_ordering::less);
        }
      }
      EXPECT_NE(o.compare(Monomial(4), u), std::strong_ordering::greater);
    }
  }
}

TEST(Monomial, ExponentCap) {
  Monomial m = Monomial::variable(2, 0, kMaxExponent);
  EXPECT_THROW(m * Monomial({1, 0}), ResourceLimitError);
  EXPECT_THROW(Monomial({1, 1}).pow(kMaxExponent + 1), ResourceLimitError);
  EXPECT_EQ(Monomial({1, 2}).pow(3), Monomial({3, 6}));
}

TEST(Ring, ValidatesNamesAndPrime) {
  EXPECT_THROW(Ring::create(6, {"x"}, {}), ValidationError);
  EXPECT_THROW(Ring::create(3, {"x", "x"}, {}), ValidationError);
  EXPECT_THROW(Ring::create(3, {"1x"}, {}), ValidationError);
  EXPECT_THROW(Ring::create(3, {"x", "y"}, {"x*w"}), ParseError);
  auto r = Ring::create(3, {"x", "y", "z"}, {"x*y - z^2"});
  EXPECT_EQ(r->format(r->parse("z^2 - x*y")), "-x*y + z^2");
  EXPECT_TRUE(r->is_graded());
}
