#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace injdim;
using namespace injdim::testing;

namespace {

std::shared_ptr<const PolyRing> S_of(std::vector<std::string> vars, MonomialOrder o = MonomialOrder::grevlex) {
  return std::make_shared<const PolyRing>(PrimeField(), std::move(vars), o);
}

std::vector<FreeElement> ideal_elems(const FreeModule& F, const std::vector<std::string>& gens) {
  std::vector<FreeElement> out;
  for (const auto& g : gens) out.push_back(F.from_column({F.ring().parse(g)}));
  return out;
}

int span_dim(const FreeModule& F, const std::vector<FreeElement>& gens, int d) {
  DegreeSpace V(F, d);
  dense::Echelon E(F.field(), V.size());
  for (auto& v : degree_span(F, gens, d)) E.insert(std::move(v));
  return E.dim();
}

// I * S^m as generators of a free module of rank m.
std::vector<FreeElement> ideal_times_free(const FreeModule& F, const std::vector<Polynomial>& ideal) {
  std::vector<FreeElement> out;
  for (int j = 0; j < F.rank(); ++j)
    for (const auto& f : ideal) out.push_back(F.mul_poly(F.basis(j), f));
  return out;
}

// Degree-d dimension of ker(R^m -> R^g) from dense spans over S only.
int brute_force_syzygy_dim_R(const RingPresentation& R, const FreeModule& target, const std::vector<FreeElement>& cols,
                             const std::vector<int>& degs, int d) {
  FreeModule src(R.poly_ring_ptr(), degs);
  auto IT = ideal_times_free(target, R.ideal_generators());
  auto IS = ideal_times_free(src, R.ideal_generators());
  int source_dim = DegreeSpace(src, d).size() - span_dim(src, IS, d);
  std::vector<FreeElement> both = IT;
  both.insert(both.end(), cols.begin(), cols.end());
  int image_dim = span_dim(target, both, d) - span_dim(target, IT, d);
  return source_dim - image_dim;
}

// Degree-d dimension of the submodule generated by syz in R^m.
int submodule_dim_R(const RingPresentation& R, const FreeModule& src, const std::vector<FreeElement>& syz, int d) {
  auto IS = ideal_times_free(src, R.ideal_generators());
  std::vector<FreeElement> both = IS;
  both.insert(both.end(), syz.begin(), syz.end());
  return span_dim(src, both, d) - span_dim(src, IS, d);
}

void expect_groebner_properties(const FreeModule& F, const std::vector<FreeElement>& gens, const GroebnerBasis& G) {
  EXPECT_TRUE(satisfies_buchberger_criterion(G));
  for (const auto& g : gens) EXPECT_TRUE(normal_form(g, G).is_zero()) << F.to_string(g);
  for (const auto& g : G.elements) {
    EXPECT_TRUE(span_contains(F, gens, g)) << F.to_string(g);
    EXPECT_EQ(g.lead().coeff, 1u);
  }
  // Reducedness: no term of an element divisible by another lead term.
  for (std::size_t i = 0; i < G.elements.size(); ++i)
    for (std::size_t j = 0; j < G.elements.size(); ++j) {
      if (i == j) continue;
      const auto& lj = G.elements[j].lead();
      for (const auto& t : G.elements[i].terms) EXPECT_FALSE(t.comp == lj.comp && lj.mono.divides(t.mono));
    }
}

}  // namespace

TEST(NormalForm, SpecExamples) {
  auto S = S_of({"x", "y"}, MonomialOrder::lex);
  FreeModule F(S, {0});
  // A single element is a Gröbner basis; x^2 y -> y * y.
  GroebnerBasis G{F, {F.from_column({S->parse("x^2 - y")})}, true};
  EXPECT_EQ(F.to_column(normal_form(F.from_column({S->parse("x^2*y")}), G))[0], S->parse("y^2"));
  GroebnerBasis empty{F, {}, true};
  FreeElement f = F.from_column({S->parse("x^3 + y")});
  EXPECT_EQ(normal_form(f, empty), f);
  auto T = S_of({"x", "y"});
  FreeModule FT(T, {0});
  GroebnerBasis mono = groebner_basis(FT, ideal_elems(FT, {"x^2", "x*y"}));
  EXPECT_TRUE(normal_form(FT.from_column({T->parse("x^2")}), mono).is_zero());
}

TEST(NormalForm, SubstitutionOracleForLexExample) {
  // x^2 y - y^2 vanishes under x^2 -> y, so it lies in (x^2 - y).
  auto S = S_of({"x", "y"}, MonomialOrder::lex);
  Polynomial f = S->parse("x^2*y"), r = S->parse("y^2");
  Polynomial diff = S->sub(f, r);
  Polynomial q = S->parse("y");
  EXPECT_EQ(S->multiply(q, S->parse("x^2 - y")), diff);
}

TEST(Buchberger, SpecExamples) {
  auto S = S_of({"x", "y"});
  FreeModule F(S, {0});
  auto G = groebner_basis(F, ideal_elems(F, {"x^2", "x*y"}));
  ASSERT_EQ(G.size(), 2u);
  EXPECT_TRUE(G.reduced);
  std::vector<Polynomial> got{F.to_column(G.elements[0])[0], F.to_column(G.elements[1])[0]};
  std::sort(got.begin(), got.end(), [&](const Polynomial& a, const Polynomial& b) { return S->compare(a.lead().mono, b.lead().mono) > 0; });
  EXPECT_EQ(got[0], S->parse("x^2"));
  EXPECT_EQ(got[1], S->parse("x*y"));

  auto P = groebner_basis(F, ideal_elems(F, {"5*x^2 - 3*y^2"}));
  ASSERT_EQ(P.size(), 1u);
  EXPECT_EQ(F.to_column(P.elements[0])[0], S->make_monic(S->parse("5*x^2 - 3*y^2")));
}

TEST(Buchberger, SPairExampleHomogenized) {
  // {x^2 - y, xy} under lex contains y^2; the engine is homogeneous-only, so
  // run on the homogenization {x^2 - y h, x y} (lex x > y > h) and
  // dehomogenize: y^2 h -> y^2.
  auto S = S_of({"x", "y", "h"}, MonomialOrder::lex);
  FreeModule F(S, {0});
  auto gens = ideal_elems(F, {"x^2 - y*h", "x*y"});
  auto G = groebner_basis(F, gens);
  expect_groebner_properties(F, gens, G);
  bool found = false;
  for (const auto& g : G.elements) found |= F.to_column(g)[0] == S->parse("y^2*h");
  EXPECT_TRUE(found);
  // The hand S-pair: y*(x^2 - y h) - x*(x y) = -y^2 h.
  EXPECT_EQ(S->sub(S->multiply(S->parse("y"), S->parse("x^2 - y*h")), S->multiply(S->parse("x"), S->parse("x*y"))), S->parse("-y^2*h"));
}

TEST(Buchberger, RejectsInhomogeneousInput) {
  auto S = S_of({"x", "y"});
  FreeModule F(S, {0});
  EXPECT_THROW(groebner_basis(F, ideal_elems(F, {"x^2 - y"})), std::invalid_argument);
}

TEST(Buchberger, RandomIdealsTwoWayMembership) {
  auto S = S_of({"x", "y", "z"});
  FreeModule F(S, {0});
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    std::vector<FreeElement> gens;
    const int k = 2 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) {
      const int d = 2 + static_cast<int>(rng() % 2);
      auto monos = monomials_of_degree(3, d);
      std::vector<PolyTerm> ts;
      for (int j = 0; j < 3; ++j) ts.push_back({monos[rng() % monos.size()], static_cast<Coeff>(1 + rng() % 32002)});
      Polynomial f = S->from_terms(ts);
      if (!f.is_zero()) gens.push_back(F.from_column({f}));
    }
    auto G = groebner_basis(F, gens);
    expect_groebner_properties(F, gens, G);
    // Deterministic output for the same input.
    auto G2 = groebner_basis(F, gens);
    ASSERT_EQ(G.elements.size(), G2.elements.size());
    for (std::size_t i = 0; i < G.elements.size(); ++i) EXPECT_EQ(F.to_string(G.elements[i]), F.to_string(G2.elements[i]));
    // Normal form idempotence and agreement of membership with dense spans.
    for (int s = 0; s < 10; ++s) {
      auto monos = monomials_of_degree(3, 3);
      Polynomial f = S->from_terms({{monos[rng() % monos.size()], 1}, {monos[rng() % monos.size()], 7}});
      FreeElement e = F.from_column({f});
      FreeElement nf = normal_form(e, G);
      EXPECT_EQ(normal_form(nf, G), nf);
      EXPECT_EQ(nf.is_zero(), span_contains(F, gens, e));
    }
  }
}

TEST(Buchberger, ModuleCaseProperties) {
  auto S = S_of({"x", "y"});
  FreeModule F(S, {0, 1});
  std::vector<FreeElement> gens{F.from_column({S->parse("x^2"), S->parse("y")}), F.from_column({S->parse("x*y"), S->parse("x")}),
                                F.from_column({S->parse("y^2"), S->parse("0")})};
  auto G = groebner_basis(F, gens);
  expect_groebner_properties(F, gens, G);
}

TEST(SyzygiesOverS, SpecExamples) {
  auto S = S_of({"x", "y"});
  FreeModule F(S, {0});
  // (x y): Koszul syzygy (y, -x).
  auto syz = syzygies_over_S(F, ideal_elems(F, {"x", "y"}), {1, 1});
  ASSERT_EQ(syz.size(), 1u);
  FreeModule src(S, {1, 1});
  auto col = src.to_column(syz[0]);
  EXPECT_TRUE((col == std::vector<Polynomial>{S->parse("y"), S->parse("-x")}) || (col == std::vector<Polynomial>{S->parse("-y"), S->parse("x")}));

  // Invertible scalar matrix: no syzygies.
  FreeModule F2(S, {0, 0});
  std::vector<FreeElement> inv{F2.from_column({S->parse("1"), S->parse("2")}), F2.from_column({S->parse("3"), S->parse("4")})};
  EXPECT_TRUE(syzygies_over_S(F2, inv, {0, 0}).empty());

  // (x^2, xy, y^2): two linear syzygies, dense dims agree through degree 4.
  auto cols = ideal_elems(F, {"x^2", "x*y", "y^2"});
  auto syz3 = syzygies_over_S(F, cols, {2, 2, 2});
  FreeModule src3(S, {2, 2, 2});
  auto mins = minimal_generators(src3, syz3, {});
  EXPECT_EQ(mins.size(), 2u);
  for (int d = 0; d <= 4; ++d) EXPECT_EQ(span_dim(src3, syz3, d), brute_force_syzygy_dim(F, cols, {2, 2, 2}, d)) << "degree " << d;
}

TEST(SyzygiesOverS, SoundAndCompleteOnRandomMatrices) {
  auto S = S_of({"x", "y", "z"});
  std::mt19937_64 rng(9);
  for (int t = 0; t < 15; ++t) {
    FreeModule F(S, {0, 0});
    std::vector<FreeElement> cols;
    std::vector<int> degs;
    for (int j = 0; j < 3; ++j) {
      const int d = 1 + static_cast<int>(rng() % 2);
      auto monos = monomials_of_degree(3, d);
      std::vector<Polynomial> entries;
      for (int i = 0; i < 2; ++i)
        entries.push_back(S->from_terms({{monos[rng() % monos.size()], static_cast<Coeff>(1 + rng() % 100)},
                                         {monos[rng() % monos.size()], static_cast<Coeff>(1 + rng() % 100)}}));
      FreeElement c = F.from_column(entries);
      if (c.is_zero()) continue;
      cols.push_back(c);
      degs.push_back(d);
    }
    auto syz = syzygies_over_S(F, cols, degs);
    FreeModule src(S, degs);
    for (const auto& s : syz) {
      // A * s = 0 exactly.
      auto coeffs = src.to_column(s);
      FreeElement acc;
      for (std::size_t j = 0; j < cols.size(); ++j) acc = F.add(acc, F.mul_poly(cols[j], coeffs[j]));
      EXPECT_TRUE(acc.is_zero());
    }
    for (int d = 0; d <= 6; ++d) EXPECT_EQ(span_dim(src, syz, d), brute_force_syzygy_dim(F, cols, degs, d)) << "trial " << t << " degree " << d;
  }
}

TEST(SyzygiesOverR, SpecExamples) {
  auto R = ring({"x"}, {"x^2"});
  FreeModule F(R->poly_ring_ptr(), {0});
  auto syz = syzygies_over_R(R, F, ideal_elems(F, {"x"}), {1});
  ASSERT_EQ(syz.size(), 1u);
  FreeModule src(R->poly_ring_ptr(), {1});
  EXPECT_EQ(src.to_column(syz[0])[0], R->poly_ring().parse("x"));

  FreeModule F2(R->poly_ring_ptr(), {0, 0});
  std::vector<FreeElement> id{F2.basis(0), F2.basis(1)};
  EXPECT_TRUE(syzygies_over_R(R, F2, id, {0, 0}).empty());

  auto R2 = ring({"x", "y"}, {"x^2", "x*y"});
  FreeModule G(R2->poly_ring_ptr(), {0});
  auto cols = ideal_elems(G, {"x", "y"});
  auto syz2 = syzygies_over_R(R2, G, cols, {1, 1});
  FreeModule src2(R2->poly_ring_ptr(), {1, 1});
  // Spanned by (x,0), (y,0), (0,x) up to basis: compare graded pieces to degree 3.
  std::vector<FreeElement> expected{src2.from_column({R2->poly_ring().parse("x"), {}}), src2.from_column({R2->poly_ring().parse("y"), {}}),
                                    src2.from_column({{}, R2->poly_ring().parse("x")})};
  for (int d = 0; d <= 3; ++d) {
    EXPECT_EQ(submodule_dim_R(*R2, src2, syz2, d), submodule_dim_R(*R2, src2, expected, d)) << d;
    EXPECT_EQ(submodule_dim_R(*R2, src2, syz2, d), brute_force_syzygy_dim_R(*R2, G, cols, {1, 1}, d)) << d;
  }
}

TEST(SyzygiesOverR, SoundAndCompleteAcrossCorpusRings) {
  for (const auto& c : load_corpus()) {
    const RingPtr& R = c.session.ring;
    const int n = R->nvars();
    FreeModule F(R->poly_ring_ptr(), {0});
    std::vector<FreeElement> cols;
    std::vector<int> degs;
    for (int i = 0; i < n; ++i) {
      cols.push_back(F.from_column({R->poly_ring().variable(i)}));
      degs.push_back(1);
    }
    auto syz = syzygies_over_R(R, F, cols, degs);
    FreeModule src(R->poly_ring_ptr(), degs);
    for (const auto& s : syz) {
      auto coeffs = src.to_column(s);
      Polynomial acc;
      for (int i = 0; i < n; ++i) acc = R->poly_ring().add(acc, R->poly_ring().multiply(coeffs[static_cast<std::size_t>(i)], R->poly_ring().variable(i)));
      EXPECT_TRUE(R->is_zero(acc)) << c.name;
    }
    for (int d = 0; d <= 5; ++d)
      EXPECT_EQ(submodule_dim_R(*R, src, syz, d), brute_force_syzygy_dim_R(*R, F, cols, degs, d)) << c.name << " degree " << d;
  }
}

TEST(KernelOfCokernelMap, SpecExamples) {
  auto R = ring({"x"}, {"x^2"});
  auto Rm = GradedModule::free(R, {0});
  FreeModule T = Rm.cover();
  // phi = 0: kernel is everything.
  auto K0 = kernel_of_cokernel_map({FreeElement{}}, Rm, Rm);
  EXPECT_TRUE(normal_form(T.basis(0), K0.basis).is_zero());
  // phi = identity: kernel generated by the relations (here the ideal x^2).
  auto K1 = kernel_of_cokernel_map({T.basis(0)}, Rm, Rm);
  EXPECT_FALSE(normal_form(T.basis(0), K1.basis).is_zero());
  EXPECT_TRUE(normal_form(T.from_column({R->poly_ring().parse("x^2")}), K1.basis).is_zero());
  EXPECT_FALSE(normal_form(T.from_column({R->poly_ring().parse("x")}), K1.basis).is_zero());
  // phi = x : R(-1) -> R: kernel generated by x and x^2.
  auto Rs = GradedModule::free(R, {1});
  auto Kx = kernel_of_cokernel_map({T.from_column({R->poly_ring().parse("x")})}, Rs, Rm);
  FreeModule Ts = Rs.cover();
  EXPECT_TRUE(normal_form(Ts.from_column({R->poly_ring().parse("x")}), Kx.basis).is_zero());
  EXPECT_FALSE(normal_form(Ts.basis(0), Kx.basis).is_zero());
}

TEST(KernelOfCokernelMap, IllDefinedMapReported) {
  auto R = ring({"x", "y"}, {});
  auto k = GradedModule::residue_field(R);
  auto Rm = GradedModule::free(R, {0});
  // k -> R sending 1 to 1 does not respect x*1 = 0.
  EXPECT_THROW(kernel_of_cokernel_map({Rm.cover().basis(0)}, k, Rm), IllDefinedMap);
  // Wrong degree.
  EXPECT_THROW(kernel_of_cokernel_map({Rm.cover().from_column({R->poly_ring().parse("x")})}, Rm, Rm), IllDefinedMap);
}

TEST(RingPresentation, IdealBasisIsReducedAndVerified) {
  for (const auto& c : load_corpus()) {
    const auto& G = c.session.ring->ideal_basis();
    FreeModule F = G.module;
    std::vector<FreeElement> gens;
    for (const auto& f : c.session.ring->ideal_generators()) gens.push_back(F.from_column({f}));
    expect_groebner_properties(F, gens, G);
  }
}
