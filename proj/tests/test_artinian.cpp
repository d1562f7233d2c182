#include <gtest/gtest.h>

#include <random>

#include "fsig/artinian.hpp"
#include "fsig/errors.hpp"
#include "fsig/frobenius.hpp"
#include "fsig/registry.hpp"
#include "test_support.hpp"

using namespace fsig;
using fsig::testing::random_artinian_monomial_ideal;
using fsig::testing::random_polynomial;

namespace {

RingPtr a1_ring() { return Ring::create(3, {"x", "y", "z"}, {"x*y - z^2"}); }

Ideal I(const RingPtr& r, const char* text) { return Ideal::parse(r, text); }

// Smallest certified cap, so the oracle never sees the staircase.
std::uint64_t dense_length(const Ideal& i) {
  for (Exponent cap = 1; cap <= 96; ++cap) {
    try {
      return length_dense_oracle(i, cap);
    } catch (const ValidationError&) {
    }
  }
  throw std::runtime_error("dense oracle never certified");
}

}  // namespace

TEST(KrullDimension, Examples) {
  auto r = a1_ring();
  EXPECT_EQ(ring_dimension(r), 2);
  EXPECT_EQ(krull_dimension(I(r, "x, y, z")), 0);
  EXPECT_EQ(ring_dimension(Ring::create(2, {"x", "y"}, {})), 2);
  EXPECT_EQ(krull_dimension(I(r, "x")), 1);
  EXPECT_EQ(krull_dimension(Ideal::unit(r)), -1);
  EXPECT_EQ(ring_dimension(Ring::create(2, {"x", "y", "z"}, {"x*y", "x*z", "y*z"})), 1);
}

TEST(Length, Examples) {
  auto s = Ring::create(2, {"x", "y"}, {});
  EXPECT_EQ(length(I(s, "x^2, y^2")).value(), 4u);
  EXPECT_EQ(length(I(s, "x^3, y^2")).value(), 6u);
  EXPECT_FALSE(length(I(s, "x")).is_finite());
  EXPECT_EQ(length(I(s, "x")).to_string(), "INFINITE");
  EXPECT_THROW(length(I(s, "x")).value(), ValidationError);
  EXPECT_EQ(length(Ideal::unit(s)).value(), 0u);

  auto r = a1_ring();
  Ideal xy = I(r, "x, y");
  EXPECT_EQ(length(xy).value(), 2u);
  auto basis = standard_monomials(xy);
  ASSERT_TRUE(basis);
  EXPECT_EQ(basis->monomials, (std::vector<Monomial>{Monomial{0, 0, 0}, Monomial{0, 0, 1}}));
}

TEST(Length, DenseOracleExamples) {
  auto s = Ring::create(2, {"x", "y"}, {});
  EXPECT_EQ(length_dense_oracle(I(s, "x^2, y^2"), 3), 4u);
  EXPECT_EQ(length_dense_oracle(I(a1_ring(), "x, y"), 3), 2u);
  EXPECT_EQ(length_dense_oracle(Ideal::unit(s), 1), 0u);
  // Degree 2 still has xy outside (x^2, y^2): the cap is rejected.
  EXPECT_THROW(length_dense_oracle(I(s, "x^2, y^2"), 2), ValidationError);
}

TEST(Length, DualOracleOnRandomMonomialIdeals) {
  std::mt19937 rng(101);
  int checked = 0;
  for (std::uint64_t p : {2, 3, 5}) {
    for (std::size_t n : {2, 3}) {
      auto s = Ring::create(p, default_variable_names(n), {});
      for (int k = 0; k < 12; ++k) {
        Ideal i = random_artinian_monomial_ideal(rng, s, n == 2 ? 9 : 5, 3);
        std::uint64_t len = length(i).value();
        if (len > 200) continue;
        EXPECT_EQ(len, dense_length(i)) << i.to_string();
        ++checked;
      }
    }
  }
  EXPECT_GE(checked, 40);
}

TEST(Length, DualOracleOnHomogeneousIdealsInQuotients) {
  std::mt19937 rng(103);
  RingPtr a1 = a1_ring();
  RingPtr tc = make_example("qgor-demo").ring;
  int checked = 0;
  for (const RingPtr& r : {a1, tc}) {
    const std::size_t n = r->nvars();
    for (int k = 0; k < 10; ++k) {
      std::vector<Polynomial> gens;
      for (std::size_t v = 0; v < n; ++v) gens.push_back(r->variable(v).pow(2 + rng() % 3));
      // A random homogeneous quadric.
      Polynomial q = r->zero();
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
          q = q + (r->variable(a) * r->variable(b)).scale(rng() % r->characteristic());
        }
      }
      gens.push_back(q);
      Ideal i(r, gens);
      EXPECT_EQ(length(i).value(), dense_length(i)) << i.to_string();
      ++checked;
    }
  }
  EXPECT_EQ(checked, 20);
}

TEST(Length, MonomialBracketScaling) {
  std::mt19937 rng(107);
  for (std::uint64_t p : {2, 3}) {
    for (std::size_t n : {1, 2, 3}) {
      auto s = Ring::create(p, default_variable_names(n), {});
      for (int k = 0; k < 5; ++k) {
        Ideal i = random_artinian_monomial_ideal(rng, s, 4, 2);
        std::uint64_t base = length(i).value();
        for (std::uint64_t q : {p, p * p}) {
          std::uint64_t qn = 1;
          for (std::size_t v = 0; v < n; ++v) qn *= q;
          EXPECT_EQ(length(bracket_power(i, q)).value(), qn * base) << i.to_string();
        }
      }
    }
  }
}

TEST(Length, IndependentOfTermOrder) {
  std::mt19937 rng(109);
  std::vector<Ideal> ideals = {I(a1_ring(), "x^2, y^3, z^3"), I(a1_ring(), "x + z, y^2")};
  auto s = Ring::create(5, {"x", "y", "z"}, {});
  for (int k = 0; k < 10; ++k) {
    Ideal i = random_artinian_monomial_ideal(rng, s, 4, 1);
    ideals.push_back(ideal_sum(i, Ideal(s, {random_polynomial(rng, s->field(), 3, 3, 2)})));
  }
  for (const Ideal& i : ideals) {
    EXPECT_EQ(length(i, TermOrder::grevlex()), length(i, TermOrder::lex())) << i.to_string();
  }
}

TEST(MPrimary, DetectsComponentsAwayFromOrigin) {
  auto s = Ring::create(3, {"x", "y"}, {});
  EXPECT_TRUE(is_m_primary(I(s, "x^2, y^3")));
  EXPECT_TRUE(is_m_primary(I(s, "x^2 + y^3, y^4")));
  EXPECT_FALSE(is_m_primary(I(s, "x^2 - x, y")));
  EXPECT_FALSE(is_m_primary(I(s, "x")));
  EXPECT_FALSE(is_m_primary(Ideal::unit(s)));
  EXPECT_THROW(require_m_primary(I(s, "x"), "I"), ValidationError);
}

TEST(Socle, Examples) {
  auto s = Ring::create(5, {"x", "y"}, {});
  std::vector<Polynomial> soc = socle(I(s, "x^2, y^3"));
  ASSERT_EQ(soc.size(), 1u);
  EXPECT_EQ(s->format(soc[0]), "x*y^2");

  auto r = a1_ring();
  soc = socle(I(r, "x, y"));
  ASSERT_EQ(soc.size(), 1u);
  EXPECT_EQ(r->format(soc[0]), "z");

  auto s2 = Ring::create(2, {"x", "y"}, {});
  soc = socle(I(s2, "x, y"));
  ASSERT_EQ(soc.size(), 1u);
  EXPECT_EQ(s2->format(soc[0]), "1");

  EXPECT_THROW(socle(I(s2, "x")), ValidationError);
}

TEST(Socle, Irreducibility) {
  auto s = Ring::create(2, {"x", "y"}, {});
  EXPECT_TRUE(is_irreducible(I(s, "x^2, y^2")));
  EXPECT_FALSE(is_irreducible(I(s, "x^2, x*y, y^2")));
  EXPECT_EQ(socle(I(s, "x^2, x*y, y^2")).size(), 2u);
}

TEST(Socle, ElementsAnnihilateMaximalIdeal) {
  std::mt19937 rng(113);
  std::vector<RingPtr> rings = {a1_ring(), make_example("qgor-demo").ring,
                                Ring::create(3, {"x", "y", "z"}, {})};
  for (const RingPtr& r : rings) {
    for (int k = 0; k < 6; ++k) {
      std::vector<Polynomial> gens;
      for (std::size_t v = 0; v < r->nvars(); ++v) {
        gens.push_back(r->variable(v).pow(1 + rng() % 3));
      }
      gens.push_back(random_polynomial(rng, r->field(), r->nvars(), 2, 2));
      Ideal i(r, gens);
      if (i.is_unit()) continue;
      std::vector<Polynomial> soc = socle(i);
      EXPECT_FALSE(soc.empty());
      for (const Polynomial& u : soc) EXPECT_TRUE(is_socle_element(i, u)) << r->format(u);
    }
  }
}

TEST(Socle, NonGradedIdeal) {
  // x + y^2 is not homogeneous; R/I = k[y]/(y^3), socle y^2.
  auto s = Ring::create(3, {"x", "y"}, {});
  Ideal i = I(s, "x + y^2, y^3");
  std::vector<Polynomial> soc = socle(i);
  ASSERT_EQ(soc.size(), 1u);
  EXPECT_TRUE(is_socle_element(i, s->parse("y^2")));
  EXPECT_TRUE(is_socle_element(i, soc[0]));
}
