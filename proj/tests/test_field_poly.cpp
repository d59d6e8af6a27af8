#include <gtest/gtest.h>

#include <map>
#include <random>

#include "test_support.hpp"

using namespace injdim;
using injdim::testing::ring;

namespace {

std::shared_ptr<const PolyRing> xy(std::uint32_t p = 32003, MonomialOrder o = MonomialOrder::grevlex) {
  return std::make_shared<const PolyRing>(PrimeField(p), std::vector<std::string>{"x", "y"}, o);
}

}  // namespace

TEST(PrimeField, DefaultModulusAndValidation) {
  EXPECT_EQ(PrimeField().characteristic(), 32003u);
  EXPECT_EQ(PrimeField(2).characteristic(), 2u);
  EXPECT_THROW(PrimeField(12), std::invalid_argument);
  EXPECT_THROW(PrimeField(1), std::invalid_argument);
  EXPECT_THROW(PrimeField(0), std::invalid_argument);
}

TEST(PrimeField, CanonicalRepresentatives) {
  PrimeField K(7);
  EXPECT_EQ(K.from_int(-1), 6u);
  EXPECT_EQ(K.from_int(15), 1u);
  EXPECT_EQ(K.to_signed(6), -1);
  EXPECT_EQ(K.neg(0), 0u);
  EXPECT_THROW(K.inv(0), std::domain_error);
}

TEST(PrimeField, AxiomsOnRandomSamples) {
  for (std::uint32_t p : {2u, 3u, 101u, 32003u, 2147483647u}) {
    PrimeField K(p);
    std::mt19937_64 rng(p);
    for (int t = 0; t < 500; ++t) {
      Coeff a = K.from_int(static_cast<std::int64_t>(rng() % (1ull << 40)));
      Coeff b = K.from_int(static_cast<std::int64_t>(rng() % (1ull << 40)));
      Coeff c = K.from_int(static_cast<std::int64_t>(rng() % (1ull << 40)));
      ASSERT_LT(a, p);
      EXPECT_EQ(K.add(K.add(a, b), c), K.add(a, K.add(b, c)));
      EXPECT_EQ(K.mul(K.mul(a, b), c), K.mul(a, K.mul(b, c)));
      EXPECT_EQ(K.mul(a, K.add(b, c)), K.add(K.mul(a, b), K.mul(a, c)));
      EXPECT_EQ(K.add(a, K.neg(a)), 0u);
      EXPECT_EQ(K.sub(a, b), K.add(a, K.neg(b)));
      if (a != 0) EXPECT_EQ(K.mul(a, K.inv(a)), 1u);
    }
  }
}

TEST(PrimeField, FermatLittleTheorem) {
  PrimeField K(32003);
  for (Coeff a : {1u, 2u, 12345u, 32002u}) EXPECT_EQ(K.pow(a, 32002), 1u);
}

TEST(MonomialOrder, SpecExamples) {
  Monomial x2{2, 0}, xy1{1, 1}, y3{0, 3}, x1{1, 0};
  EXPECT_EQ(compare_monomials(MonomialOrder::grevlex, x2, xy1), std::strong_ordering::greater);
  EXPECT_EQ(compare_monomials(MonomialOrder::grevlex, xy1, xy1), std::strong_ordering::equal);
  EXPECT_EQ(compare_monomials(MonomialOrder::lex, x2, x2), std::strong_ordering::equal);
  EXPECT_EQ(compare_monomials(MonomialOrder::lex, y3, x1), std::strong_ordering::less);
  EXPECT_EQ(compare_monomials(MonomialOrder::grevlex, y3, x1), std::strong_ordering::greater);
}

TEST(MonomialOrder, GrevlexTieBreakOnLastVariable) {
  // x*z < y^2 in grevlex with x > y > z: last differing exponent is z.
  EXPECT_EQ(compare_monomials(MonomialOrder::grevlex, Monomial{1, 0, 1}, Monomial{0, 2, 0}), std::strong_ordering::less);
  EXPECT_EQ(compare_monomials(MonomialOrder::lex, Monomial{1, 0, 1}, Monomial{0, 2, 0}), std::strong_ordering::greater);
}

TEST(MonomialOrder, MismatchedVariableCountsRejected) {
  EXPECT_THROW((void)compare_monomials(MonomialOrder::grevlex, Monomial{1, 0}, Monomial{1, 0, 0}), std::invalid_argument);
}

TEST(MonomialOrder, AxiomsOnRandomSamples) {
  std::mt19937 rng(7);
  auto rand_mono = [&]() { return Monomial{static_cast<int>(rng() % 4), static_cast<int>(rng() % 4), static_cast<int>(rng() % 4)}; };
  for (auto order : {MonomialOrder::grevlex, MonomialOrder::lex}) {
    for (int t = 0; t < 2000; ++t) {
      Monomial a = rand_mono(), b = rand_mono(), c = rand_mono();
      auto ab = compare_monomials(order, a, b);
      EXPECT_EQ(ab == std::strong_ordering::equal, a == b);
      EXPECT_EQ(compare_monomials(order, b, a), 0 <=> ab);
      EXPECT_EQ(compare_monomials(order, a * c, b * c), ab);  // multiplicative
      EXPECT_NE(compare_monomials(order, a * c, a), std::strong_ordering::less);  // 1 is least
      if (order == MonomialOrder::grevlex && a.degree() != b.degree())
        EXPECT_EQ(ab, a.degree() <=> b.degree());
    }
    // Well-founded on a degree-bounded set: sorting is a strict total order.
    auto monos = monomials_of_degree(3, 3);
    std::sort(monos.begin(), monos.end(), [&](const Monomial& a, const Monomial& b) { return compare_monomials(order, a, b) < 0; });
    for (std::size_t i = 1; i < monos.size(); ++i) EXPECT_TRUE(compare_monomials(order, monos[i - 1], monos[i]) < 0);
  }
}

TEST(Monomial, DegreeAndMultiplication) {
  Monomial a{2, 1, 0}, b{0, 3, 4};
  EXPECT_EQ(a.degree(), 3);
  EXPECT_EQ((a * b).exponents(), (std::vector<int>{2, 4, 4}));
  EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
  EXPECT_TRUE(a.divides(a * b));
  EXPECT_EQ(a.quotient_of(a * b), b);  // m.quotient_of(l) = l / m
  EXPECT_EQ(a.lcm(b).exponents(), (std::vector<int>{2, 3, 4}));
  EXPECT_THROW((Monomial{-1, 0}), std::invalid_argument);
}

TEST(Polynomial, MultiplySpecExamples) {
  auto S = xy();
  EXPECT_EQ(S->multiply(S->parse("x+y"), S->parse("x-y")), S->parse("x^2 - y^2"));
  Polynomial f = S->parse("3*x^2*y - y^3");
  EXPECT_EQ(S->multiply(f, S->constant(1)), f);
  EXPECT_TRUE(S->multiply(f, S->zero()).is_zero());
  auto S2 = xy(2);
  Polynomial g = S2->parse("x+y");
  EXPECT_EQ(S2->multiply(g, g), S2->parse("x^2 + y^2"));
}

TEST(Polynomial, MultiplyAgreesWithNaiveReference) {
  auto S = std::make_shared<const PolyRing>(PrimeField(), std::vector<std::string>{"x", "y", "z"});
  const PrimeField& K = S->field();
  std::mt19937_64 rng(11);
  auto random_poly = [&]() {
    std::vector<PolyTerm> ts;
    const int n = static_cast<int>(rng() % 6);
    for (int i = 0; i < n; ++i) {
      Monomial m{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), 0};
      if (m.degree() > 4) continue;
      ts.push_back({m, K.from_int(static_cast<std::int64_t>(rng() % 100000) - 50000)});
    }
    return S->from_terms(ts);
  };
  for (int t = 0; t < 300; ++t) {
    Polynomial f = random_poly(), g = random_poly();
    std::map<std::vector<int>, Coeff> ref;
    for (const auto& a : f.terms())
      for (const auto& b : g.terms()) {
        auto& c = ref[(a.mono * b.mono).exponents()];
        c = K.add(c, K.mul(a.coeff, b.coeff));
      }
    std::map<std::vector<int>, Coeff> got;
    const Polynomial h = S->multiply(f, g);
    for (const auto& u : h.terms()) got[u.mono.exponents()] = u.coeff;
    std::erase_if(ref, [](const auto& kv) { return kv.second == 0; });
    EXPECT_EQ(got, ref);
  }
}

TEST(Polynomial, HomogeneousProductDegree) {
  auto S = xy();
  Polynomial f = S->parse("x^2 + 3*x*y"), g = S->parse("y^3 - x^3");
  Polynomial h = S->multiply(f, g);
  EXPECT_TRUE(h.is_homogeneous());
  EXPECT_EQ(h.degree(), 5);
}

TEST(Polynomial, TermsCanonical) {
  auto S = xy();
  Polynomial f = S->parse("x*y + y*x - 2*x*y + y^2 + x^2");
  EXPECT_EQ(f, S->parse("x^2 + y^2"));
  for (const auto& t : f.terms()) EXPECT_NE(t.coeff, 0u);
  for (std::size_t i = 1; i < f.terms().size(); ++i) EXPECT_TRUE(S->compare(f.terms()[i - 1].mono, f.terms()[i].mono) > 0);
  EXPECT_TRUE(S->parse("x^2 - x^2").is_zero());
}

TEST(Polynomial, SubstitutionSpecExamples) {
  auto S = xy();
  EXPECT_EQ(S->substitute(S->parse("x*y"), {S->parse("x+y"), S->parse("y")}), S->parse("x*y + y^2"));
  EXPECT_EQ(S->substitute(S->constant(5), {S->parse("y"), S->parse("x")}), S->constant(5));
  EXPECT_EQ(S->substitute(S->parse("x^2"), {S->parse("y"), S->parse("x")}), S->parse("y^2"));
  EXPECT_THROW(S->substitute(S->parse("x"), {S->parse("y")}), std::invalid_argument);
}

TEST(Polynomial, SubstitutionIsRingHomomorphism) {
  auto S = xy();
  std::vector<Polynomial> img{S->parse("2*x + 3*y"), S->parse("x - y")};
  Polynomial f = S->parse("x^2 - 5*x*y"), g = S->parse("y^2 + x*y");
  EXPECT_EQ(S->substitute(S->multiply(f, g), img), S->multiply(S->substitute(f, img), S->substitute(g, img)));
  EXPECT_EQ(S->substitute(S->add(f, g), img), S->add(S->substitute(f, img), S->substitute(g, img)));
}

TEST(Parser, Grammar) {
  auto S = xy();
  Polynomial f = S->parse("3*x^2*y - y^3");
  EXPECT_EQ(f.size(), 2u);
  EXPECT_EQ(S->parse("(x+y)^2"), S->parse("x^2 + 2*x*y + y^2"));
  EXPECT_EQ(S->parse("-(x - y)*(x + y)"), S->parse("y^2 - x^2"));
  EXPECT_EQ(S->parse("32003*x + y"), S->parse("y"));
  EXPECT_EQ(S->parse("  x  *  y "), S->parse("x*y"));
}

TEST(Parser, ErrorsCarryOffsets) {
  auto S = xy();
  try {
    (void)S->parse("x + z^2");
    FAIL() << "unknown variable accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 4u);
    EXPECT_NE(std::string(e.what()).find("unknown variable"), std::string::npos);
  }
  EXPECT_THROW((void)S->parse("3x"), ParseError);  // juxtaposition is not a product
  EXPECT_THROW((void)S->parse("x y"), ParseError);
  EXPECT_THROW((void)S->parse("(x + y"), ParseError);
  EXPECT_THROW((void)S->parse(""), ParseError);
  EXPECT_THROW((void)S->parse("x^"), ParseError);
}

TEST(Parser, PrintParseRoundTrip) {
  auto S = std::make_shared<const PolyRing>(PrimeField(), std::vector<std::string>{"a", "b1", "c_2"});
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    std::vector<PolyTerm> ts;
    for (int i = 0; i < 4; ++i)
      ts.push_back({Monomial{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)},
                    static_cast<Coeff>(rng() % 32003)});
    Polynomial f = S->from_terms(ts);
    EXPECT_EQ(S->parse(S->to_string(f)), f) << S->to_string(f);
  }
}

TEST(PolyRing, RejectsBadVariables) {
  EXPECT_THROW(PolyRing(PrimeField(), {"x", "x"}), std::invalid_argument);
  EXPECT_THROW(PolyRing(PrimeField(), {"1x"}), std::invalid_argument);
  std::vector<std::string> many(17);
  for (int i = 0; i < 17; ++i) many[static_cast<std::size_t>(i)] = "v" + std::to_string(i);
  EXPECT_THROW(PolyRing(PrimeField(), many), std::invalid_argument);
}

TEST(FreeElement, HomogeneityUsesShifts) {
  auto S = xy();
  FreeModule F(S, {0, 1});
  FreeElement good = F.from_column({S->parse("x^2"), S->parse("y")});
  FreeElement bad = F.from_column({S->parse("x"), S->parse("y")});
  EXPECT_TRUE(F.is_homogeneous(good));
  EXPECT_EQ(F.degree(good), 2);
  EXPECT_FALSE(F.is_homogeneous(bad));
  EXPECT_EQ(F.to_column(good), (std::vector<Polynomial>{S->parse("x^2"), S->parse("y")}));
  for (const auto& t : good.terms) EXPECT_LT(t.comp, F.rank());
}
