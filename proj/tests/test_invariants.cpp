#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace injdim;
using namespace injdim::testing;

namespace {

LaurentPoly lp(int low, std::vector<std::int64_t> c) { return LaurentPoly{low, std::move(c)}.trimmed(); }

}  // namespace

TEST(HilbertSeries, SpecExamples) {
  auto S = ring({"x", "y"}, {});
  auto h = hilbert_series(GradedModule::free(S, {0}));
  EXPECT_EQ(h.numerator, lp(0, {1}));
  EXPECT_EQ(h.nvars, 2);
  EXPECT_EQ(h.dim, 2);

  auto node = hilbert_series(GradedModule::free(ring({"x", "y"}, {"x*y"}), {0}));
  EXPECT_EQ(node.numerator, lp(0, {1, 0, -1}));
  EXPECT_EQ(node.reduced, lp(0, {1, 1}));
  EXPECT_EQ(node.dim, 1);
  EXPECT_EQ(node.coefficients(0, 5), (std::vector<std::int64_t>{1, 2, 2, 2, 2, 2}));

  auto a = hilbert_series(GradedModule::free(ring({"x", "y"}, {"x^2", "x*y", "y^2"}), {0}));
  EXPECT_EQ(a.numerator, lp(0, {1, 0, -3, 2}));
  EXPECT_EQ(a.dim, 0);
  EXPECT_EQ(a.reduced, lp(0, {1, 2}));
}

TEST(HilbertSeries, MatchesOracleAcrossCorpus) {
  for (const auto& c : load_corpus())
    for (const auto& [name, M] : modules_of(c.session)) {
      auto cmp = compare_numerics(M, 10, c.name + "/" + name);
      EXPECT_TRUE(cmp.ok()) << cmp.mismatches.front();
      auto h = hilbert_series(M);
      for (auto v : h.coefficients(-3, 10)) EXPECT_GE(v, 0);
      if (!h.is_zero()) EXPECT_GT(h.reduced.value_at_one(), 0);
    }
}

TEST(Invariants, DimensionMultiplicityLengthSpecExamples) {
  auto R = ring({"x"}, {"x^2"});
  auto Rm = GradedModule::free(R, {0});
  EXPECT_EQ(dimension(Rm), 0);
  EXPECT_EQ(multiplicity(Rm), 2);
  EXPECT_EQ(length(Rm), 2);
  auto node = GradedModule::free(ring({"x", "y"}, {"x*y"}), {0});
  EXPECT_EQ(dimension(node), 1);
  EXPECT_EQ(multiplicity(node), 2);
  EXPECT_FALSE(length(node).has_value());
  auto k = GradedModule::residue_field(R);
  EXPECT_EQ(dimension(k), 0);
  EXPECT_EQ(length(k), 1);
}

TEST(Invariants, ZeroModuleConventions) {
  auto R = ring({"x", "y"}, {});
  auto Z = GradedModule::free(R, {});
  EXPECT_EQ(dimension(Z), -1);
  EXPECT_THROW(multiplicity(Z), ZeroModuleError);
  EXPECT_THROW(depth(Z), ZeroModuleError);
  EXPECT_THROW(type(Z), ZeroModuleError);
  EXPECT_THROW(is_cohen_macaulay(Z), ZeroModuleError);
  EXPECT_EQ(annihilator(Z), (std::vector<Polynomial>{R->poly_ring().constant(1)}));
}

TEST(Invariants, DepthSpecExamples) {
  EXPECT_EQ(depth(GradedModule::free(ring({"x", "y", "z"}, {}), {0})), 3);
  auto A = GradedModule::free(ring({"x", "y"}, {"x^2", "x*y", "y^2"}), {0});
  EXPECT_EQ(projective_dimension_S(A), 2);
  EXPECT_EQ(depth(A), 0);
  auto B = GradedModule::free(ring({"x", "y"}, {"x^2", "x*y"}), {0});
  EXPECT_EQ(depth(B), 0);
  EXPECT_EQ(dimension(B), 1);
  EXPECT_FALSE(is_cohen_macaulay(B));
  // x is a socle element of B: killed by x and y, yet nonzero (truncation oracle).
  auto T = oracle::truncate(B, 4);
  ASSERT_EQ(T.dim(1), 2);
  dense::LinMap mult = dense::LinMap::zero(2 * T.dim(2), 0);
  for (int j = 0; j < 2; ++j) {
    dense::Vec e(2, 0);
    e[static_cast<std::size_t>(j)] = 1;
    dense::Vec col = T.act(0, 1, e), yv = T.act(1, 1, e);
    col.insert(col.end(), yv.begin(), yv.end());
    mult.cols.push_back(col);
  }
  EXPECT_EQ(dense::kernel(B.ring().field(), mult).size(), 1u);
}

TEST(Invariants, TypeSpecExamples) {
  EXPECT_EQ(type(GradedModule::free(ring({"x"}, {"x^2"}), {0})), 1);
  auto A = GradedModule::free(ring({"x", "y"}, {"x^2", "x*y", "y^2"}), {0});
  EXPECT_EQ(type(A), 2);
  EXPECT_EQ(oracle::socle(A), 2);
  EXPECT_EQ(type(GradedModule::residue_field(ring({"x", "y"}, {"x*y"}))), 1);
}

TEST(Invariants, SocleSpecExamples) {
  auto R = ring({"x", "y"}, {"x^2", "x*y", "y^2"});
  EXPECT_EQ(socle_dimension(GradedModule::residue_field(R)), 1);
  EXPECT_EQ(socle_dimension(GradedModule::free(R, {0})), 2);
  auto C = GradedModule::free(ring({"x"}, {"x^3"}), {0});
  EXPECT_EQ(socle_dimension(C), 1);
  EXPECT_EQ(oracle::socle(C), 1);
  EXPECT_THROW(socle_dimension(GradedModule::free(ring({"x"}, {}), {0})), std::domain_error);
}

TEST(Invariants, CohenMacaulaySpecExamples) {
  EXPECT_TRUE(is_cohen_macaulay(GradedModule::free(ring({"x", "y"}, {"x*y"}), {0})));
  EXPECT_FALSE(is_cohen_macaulay(GradedModule::free(ring({"x", "y"}, {"x^2", "x*y"}), {0})));
  auto R = ring({"x", "y"}, {"x^2", "x*y"});
  EXPECT_TRUE(is_cohen_macaulay(GradedModule::residue_field(R)));
  EXPECT_TRUE(is_cohen_macaulay(cyclic(R, {"y^2"})));
}

TEST(Invariants, RankSpecExamples) {
  auto P = ring({"x", "y"}, {});
  EXPECT_EQ(rank(GradedModule::free(P, {0, 0}), true), 2);
  EXPECT_EQ(rank(module_rows(P, {1, 1}, {{"y"}, {"-x"}}), true), 1);
  EXPECT_FALSE(rank(GradedModule::free(P, {0}), false).has_value());  // not flagged
  auto N = ring({"x", "y"}, {"x^2 - y^2"});
  EXPECT_TRUE(find_zero_divisor_pair(*N).has_value());
  EXPECT_FALSE(rank(GradedModule::free(N, {0}), true).has_value());  // flag contradicted by (x-y)(x+y) = 0
  auto D = ring({"x", "y", "z"}, {"x^2 - y*z"});
  EXPECT_FALSE(find_zero_divisor_pair(*D).has_value());
  EXPECT_EQ(rank(GradedModule::free(D, {0}), true), 1);
  EXPECT_EQ(rank(GradedModule::residue_field(D), true), 0);
}

TEST(Invariants, RegularSopSpecExamples) {
  auto R = ring({"x", "y"}, {"x*y"});
  auto Rm = GradedModule::free(R, {0});
  auto c = find_regular_sop(Rm, 1);
  ASSERT_TRUE(c.verified());
  ASSERT_EQ(c.elements.size(), 1u);
  EXPECT_EQ(c.seed, 1u);
  EXPECT_EQ(length(quotient_by_sequence(Rm, c.elements)), 2);
  EXPECT_EQ(oracle::length(quotient_by_sequence(Rm, c.elements)), 2);
  // x+y and any a x + b y with ab != 0 work; x alone does not.
  EXPECT_TRUE(certify_sequence(Rm, {poly(R, "x+y")}).verified());
  EXPECT_TRUE(certify_sequence(Rm, {poly(R, "3*x - 5*y")}).verified());
  EXPECT_FALSE(certify_sequence(Rm, {poly(R, "x")}).verified());

  auto A = GradedModule::free(ring({"x"}, {"x^2"}), {0});
  auto e = find_regular_sop(A, 1);
  EXPECT_TRUE(e.verified());
  EXPECT_TRUE(e.elements.empty());

  auto L = ring({"x"}, {});
  EXPECT_TRUE(certify_sequence(GradedModule::free(L, {0}), {poly(L, "x")}).verified());
}

TEST(Invariants, RegularSopRetryLimit) {
  auto B = GradedModule::free(ring({"x", "y"}, {"x^2", "x*y"}), {0});  // not CM: no regular sop
  EXPECT_THROW(find_regular_sop(B, 1, 5), RetryLimitExceeded);
}

TEST(Invariants, RegularSopIsSeedDeterministic) {
  auto Rm = GradedModule::free(ring({"x", "y", "z"}, {"x*y", "x*z", "y*z"}), {0});
  auto a = find_regular_sop(Rm, 42), b = find_regular_sop(Rm, 42);
  EXPECT_EQ(a.elements, b.elements);
  EXPECT_EQ(a.attempts, b.attempts);
}

TEST(Invariants, CertificateFlagsBackedByKernels) {
  auto R = ring({"x", "y", "z"}, {});
  auto Rm = GradedModule::free(R, {0});
  auto c = certify_sequence(Rm, {poly(R, "x"), poly(R, "y"), poly(R, "z")});
  EXPECT_TRUE(c.verified());
  auto bad = certify_sequence(Rm, {poly(R, "x"), poly(R, "x"), poly(R, "z")});
  EXPECT_FALSE(bad.verified());
  ASSERT_EQ(bad.regular.size(), 3u);
  EXPECT_TRUE(bad.regular[0]);
  EXPECT_FALSE(bad.regular[1]);
  auto short_seq = certify_sequence(Rm, {poly(R, "x"), poly(R, "y")});
  EXPECT_FALSE(short_seq.reduction);
}

TEST(InvariantProperties, AcrossCorpus) {
  for (const auto& c : load_corpus()) {
    for (const auto& [name, M] : modules_of(c.session)) {
      if (M.is_zero()) continue;
      SCOPED_TRACE(c.name + "/" + name);
      const int n = M.ring().nvars();
      const int t = depth(M), s = dimension(M);
      // Auslander–Buchsbaum, and the Ext route to the depth.
      EXPECT_EQ(t + projective_dimension_S(M), n);
      EXPECT_EQ(depth_via_ext(M), t);
      EXPECT_LE(t, s);
      EXPECT_EQ(is_cohen_macaulay(M), t == s);
      if (s == 0) {
        EXPECT_EQ(multiplicity(M), *length(M));
        EXPECT_EQ(type(M), socle_dimension(M));
        EXPECT_EQ(type(M), oracle::socle(M));
      }
      if (t == s) EXPECT_EQ(type_from_betti(M), type(M));
      EXPECT_EQ(multiplicity(direct_sum({M, M})), 2 * multiplicity(M));
      if (t == s) {
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
          auto cert = find_regular_sop(M, seed);
          EXPECT_TRUE(cert.verified());
          EXPECT_EQ(length(quotient_by_sequence(M, cert.elements)), multiplicity(M));
        }
      }
    }
  }
}

TEST(InvariantProperties, MatlisDualNumerics) {
  for (const auto& c : load_corpus()) {
    if (!is_artinian(c.session.ring)) continue;
    for (const auto& [name, M] : modules_of(c.session)) {
      auto D = oracle::matlis_dual(M);
      EXPECT_EQ(length(D.presentation), length(M)) << c.name << "/" << name;
      EXPECT_EQ(socle_dimension(D.presentation), minimize_presentation(M).num_generators()) << c.name << "/" << name;
    }
  }
}
