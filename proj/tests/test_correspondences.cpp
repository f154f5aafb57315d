#include "lrbv/correspondences.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace lrbv {
namespace {

using testing::L;
using testing::MV;
using testing::P;

RightConnectionOnA right(const LieRinehartAlgebra& alg, const std::vector<std::string>& r) {
  RightConnectionOnA rc;
  for (const auto& s : r) rc.r.push_back(P(s, alg.nvars()));
  return rc;
}

TopConnection top(const LieRinehartAlgebra& alg, const std::vector<std::string>& g) {
  TopConnection t;
  for (const auto& s : g) t.gamma.push_back(P(s, alg.nvars()));
  return t;
}

RightConnectionOnA random_right(const LieRinehartAlgebra& alg, RandomSource& rng) {
  RightConnectionOnA rc;
  for (std::size_t i = 0; i < alg.rank(); ++i) rc.r.push_back(rng.poly(alg.nvars()));
  return rc;
}

TopConnection random_top(const LieRinehartAlgebra& alg, RandomSource& rng) {
  TopConnection t;
  for (std::size_t i = 0; i < alg.rank(); ++i) t.gamma.push_back(rng.poly(alg.nvars()));
  return t;
}

LeftConnectionOnL random_left(const LieRinehartAlgebra& alg, RandomSource& rng) {
  const std::size_t n = alg.rank();
  LeftConnectionOnL c(n, alg.nvars());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (rng.uniform(0, 2) == 0) c.gamma(i, j, k) = rng.poly(alg.nvars());
  return c;
}

// Structure-constant oracle for the lambda-trace: sum_k c[i][k][k].
Poly ad_trace_oracle(const LieRinehartAlgebra& alg, std::size_t i) {
  Poly t(alg.nvars());
  for (std::size_t k = 0; k < alg.rank(); ++k) t += alg.basis_bracket(i, k).coeffs[k];
  return t;
}

TEST(RightFromGenerator, Examples) {
  RandomSource rng(31);
  for (const auto& alg : testing::all_test_algebras()) {
    auto rc = random_right(alg, rng);
    EXPECT_EQ(right_from_generator(alg, GeneratorD{rc}), rc) << alg.name();
  }
  auto coord = testing::coordinate(2);
  EXPECT_EQ(right_from_generator(coord, GeneratorD{right(coord, {"0", "0"})}), right(coord, {"0", "0"}));
  auto na = testing::nonabelian2();
  EXPECT_EQ(right_from_generator(na, GeneratorD{right(na, {"0", "-1"})}), right(na, {"0", "-1"}));
}

TEST(TopFromRight, Examples) {
  auto ab = LieRinehartAlgebra::abelian("ab", 1, 2);
  EXPECT_EQ(top_from_right(ab, right(ab, {"x1", "-2"})), top(ab, {"-x1", "2"}));

  auto na = testing::nonabelian2();
  EXPECT_EQ(top_from_right(na, right(na, {"0", "-1"})), top(na, {"0", "0"}));

  RandomSource rng(32);
  for (const auto& alg : testing::all_test_algebras()) {
    auto rc = random_right(alg, rng);
    auto t = top_from_right(alg, rc);
    EXPECT_EQ(right_from_top(alg, t), rc) << alg.name();
    for (std::size_t i = 0; i < alg.rank(); ++i) EXPECT_EQ(t.gamma[i], ad_trace_oracle(alg, i) - rc.r[i]);
  }
}

TEST(RightFromTop, Examples) {
  auto ab = LieRinehartAlgebra::abelian("ab", 0, 2);
  auto d = generator_from_top(ab, TopConnection::zero(ab));
  EXPECT_EQ(d.underlying, right(ab, {"0", "0"}));
  EXPECT_TRUE(apply_generator(ab, d, MV(2, 0, {1}, "3")).is_zero());

  auto na = testing::nonabelian2();
  EXPECT_EQ(right_from_top(na, TopConnection::zero(na)), right(na, {"0", "-1"}));

  // Flat connections give square-zero generators.
  auto coord = testing::coordinate(2);
  EXPECT_TRUE(generator_square(coord, generator_from_top(coord, TopConnection::zero(coord)), 2, 1).is_exact);
  EXPECT_TRUE(generator_square(na, generator_from_top(na, top(na, {"0", "4"})), 2, 1).is_exact);
  auto s = testing::sl2();
  EXPECT_TRUE(generator_square(s, generator_from_top(s, TopConnection::zero(s)), 2, 1).is_exact);
}

TEST(TopFromGenerator, MatchesAlgebraicRoute) {
  RandomSource rng(33);
  for (const auto& alg : testing::all_test_algebras()) {
    auto rc = random_right(alg, rng);
    EXPECT_EQ(top_from_generator(alg, GeneratorD{rc}), top_from_right(alg, rc)) << alg.name();
  }
}

TEST(BijectionCoherence, AllCycles) {
  RandomSource rng(34);
  for (const auto& alg : testing::all_test_algebras()) {
    auto rc = random_right(alg, rng);
    EXPECT_EQ(right_from_top(alg, top_from_right(alg, rc)), rc) << alg.name();
    EXPECT_EQ(right_from_generator(alg, generator_from_top(alg, top_from_right(alg, rc))), rc) << alg.name();

    auto t = random_top(alg, rng);
    EXPECT_EQ(top_from_right(alg, right_from_top(alg, t)), t) << alg.name();
    EXPECT_EQ(top_from_generator(alg, generator_from_top(alg, t)), t) << alg.name();
    EXPECT_EQ(top_from_right(alg, right_from_generator(alg, generator_from_top(alg, t))), t) << alg.name();

    GeneratorD d{random_right(alg, rng)};
    EXPECT_EQ(generator_from_top(alg, top_from_generator(alg, d)).underlying, d.underlying) << alg.name();
  }
}

TEST(FlatnessTransport, BothDirections) {
  struct Case {
    LieRinehartAlgebra alg;
    TopConnection nabla;
  };
  auto na = testing::nonabelian2();
  auto coord = testing::coordinate(2);
  auto h = testing::heisenberg();
  auto aff = testing::affine1d();
  auto s = testing::sl2();
  std::vector<Case> cases{
      {coord, TopConnection::zero(coord)}, {coord, top(coord, {"x2", "0"})}, {coord, top(coord, {"x2", "x1"})},
      {na, top(na, {"0", "2"})},           {na, top(na, {"1", "0"})},        {h, TopConnection::zero(h)},
      {h, top(h, {"0", "0", "1"})},        {aff, top(aff, {"0", "x1"})},     {aff, top(aff, {"1", "0"})},
      {s, TopConnection::zero(s)},         {s, top(s, {"0", "1", "0"})},
  };
  for (const auto& c : cases) {
    bool flat = is_flat(c.alg, c.nabla);
    bool exact = generator_square(c.alg, generator_from_top(c.alg, c.nabla), 2, 7).is_exact;
    EXPECT_EQ(flat, exact) << c.alg.name() << " " << c.nabla.to_string();
  }
}

TEST(GeneratorOfForm, MatchedPairsPass) {
  RandomSource rng(35);
  for (const auto& alg : testing::all_test_algebras()) {
    auto t = random_top(alg, rng);
    auto res = check_theorem_1_8(alg, generator_from_top(alg, t), t, 2, 77);
    EXPECT_TRUE(res.ok) << alg.name() << ": " << res.witness;
  }
  auto ab = LieRinehartAlgebra::abelian("ab", 0, 2);
  EXPECT_TRUE(check_theorem_1_8(ab, GeneratorD{right(ab, {"0", "0"})}, TopConnection::zero(ab), 2, 1).ok);
}

TEST(GeneratorOfForm, MismatchedPairFailsWithWitness) {
  RandomSource rng(36);
  for (const auto& alg : testing::all_test_algebras()) {
    auto t = random_top(alg, rng);
    auto d = generator_from_top(alg, t);
    t.gamma[0] += alg.one();
    auto res = check_theorem_1_8(alg, d, t, 1, 78);
    EXPECT_FALSE(res.ok) << alg.name();
    EXPECT_NE(res.witness.find("alpha="), std::string::npos);
  }
}

TEST(GeneratorOfForm, TrueExactlyForTheCorrespondingConnection) {
  RandomSource rng(37);
  for (const auto& alg : testing::all_test_algebras()) {
    GeneratorD d{random_right(alg, rng)};
    EXPECT_TRUE(check_theorem_1_8(alg, d, top_from_right(alg, right_from_generator(alg, d)), 1, 5).ok);
    auto other = random_top(alg, rng);
    bool same = other == top_from_right(alg, d.underlying);
    EXPECT_EQ(check_theorem_1_8(alg, d, other, 1, 5).ok, same) << alg.name();
  }
}

TEST(LieDerivativeOfForm, MatchedPairsPass) {
  RandomSource rng(38);
  for (const auto& alg : testing::all_test_algebras()) {
    auto t = random_top(alg, rng);
    auto res = check_remark_1_9(alg, generator_from_top(alg, t), t, 2, 79);
    EXPECT_TRUE(res.ok) << alg.name() << ": " << res.witness;
  }
  auto ab = LieRinehartAlgebra::abelian("ab", 0, 3);
  EXPECT_TRUE(check_remark_1_9(ab, GeneratorD{right(ab, {"0", "0", "0"})}, TopConnection::zero(ab), 2, 1).ok);
}

TEST(LieDerivativeOfForm, MismatchedPairFails) {
  auto na = testing::nonabelian2();
  auto t = top(na, {"0", "0"});
  EXPECT_FALSE(check_remark_1_9(na, generator_from_top(na, top(na, {"1", "0"})), t, 1, 3).ok);
}

TEST(KoszulGenerator, Examples) {
  auto coord = testing::coordinate(2);
  auto d = koszul_generator(coord, LeftConnectionOnL(2, 2));
  EXPECT_EQ(d.underlying, right(coord, {"0", "0"}));
  EXPECT_EQ(apply_generator(coord, d, MV(2, 2, {1}, "x1")), MV(2, 2, {}, "-1"));

  auto na = testing::nonabelian2();
  EXPECT_EQ(koszul_generator(na, half_bracket_connection(na)).underlying, right(na, {"0", "-1/2"}));

  // Two connections with the same induced top connection.
  auto s = testing::sl2();
  LeftConnectionOnL a(3, 0), b(3, 0);
  a.gamma(0, 1, 1) = P("2", 0);
  a.gamma(0, 2, 2) = P("-1", 0);
  b.gamma(0, 0, 0) = P("1", 0);
  b.gamma(0, 1, 2) = P("7", 0);
  ASSERT_EQ(induced_top_connection(s, a), induced_top_connection(s, b));
  EXPECT_EQ(koszul_generator(s, a).underlying, koszul_generator(s, b).underlying);
}

TEST(KoszulGenerator, EqualsGeneratorOfInducedConnection) {
  RandomSource rng(39);
  for (const auto& alg : testing::all_test_algebras()) {
    auto c = random_left(alg, rng);
    EXPECT_EQ(koszul_generator(alg, c).underlying, right_from_top(alg, induced_top_connection(alg, c))) << alg.name();
  }
}

TEST(TorsionFreeLift, Examples) {
  auto na = testing::nonabelian2();
  auto base = half_bracket_connection(na);
  auto lift = torsionfree_lift(na, induced_top_connection(na, base));
  EXPECT_EQ(lift.connection, base);

  auto ab = LieRinehartAlgebra::abelian("ab", 1, 2);
  auto l = torsionfree_lift(ab, top(ab, {"x1", "0"}));
  const auto& p1 = l.phi[0].matrix;
  const auto& p2 = l.phi[1].matrix;
  EXPECT_EQ(p1[0][0], P("2/3*x1", 1));
  EXPECT_EQ(p1[1][1], P("1/3*x1", 1));
  EXPECT_TRUE(p1[0][1].is_zero());
  EXPECT_TRUE(p1[1][0].is_zero());
  // Phi(e2) e1 = Phi(e1) e2 = (x1/3) e2
  EXPECT_EQ(p2[1][0], P("1/3*x1", 1));
  EXPECT_TRUE(p2[0][0].is_zero());
  EXPECT_TRUE(p2[1][1].is_zero());
  EXPECT_EQ(trace_endo(l.phi[0]), P("x1", 1));
  EXPECT_TRUE(trace_endo(l.phi[1]).is_zero());
}

TEST(TorsionFreeLift, PostconditionsOnRandomTargets) {
  RandomSource rng(40);
  for (const auto& alg : testing::all_test_algebras()) {
    const std::size_t n = alg.rank();
    auto target = random_top(alg, rng);
    auto lift = torsionfree_lift(alg, target);
    EXPECT_TRUE(is_torsion_free(alg, lift.connection)) << alg.name();
    EXPECT_EQ(induced_top_connection(alg, lift.connection), target) << alg.name();
    auto induced0 = induced_top_connection(alg, lift.base);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(trace_endo(lift.phi[i]), target.gamma[i] - induced0.gamma[i]);
      for (std::size_t j = 0; j < n; ++j)
        EXPECT_EQ(lift.phi[i].apply(LElement::basis(n, alg.nvars(), j)),
                  lift.phi[j].apply(LElement::basis(n, alg.nvars(), i)));
    }
  }
}

TEST(TorsionFreeLift, AlternativeBase) {
  RandomSource rng(41);
  for (const auto& alg : testing::all_test_algebras()) {
    const std::size_t n = alg.rank();
    // c/2 plus a symmetric perturbation whose traces cancel.
    auto base = half_bracket_connection(alg);
    if (n >= 2) {
      Poly s = rng.nonzero_poly(alg.nvars());
      base.gamma(0, 0, 1) += s;
      base.gamma(1, 1, 0) -= s;
    }
    auto target = random_top(alg, rng);
    auto lift = torsionfree_lift(alg, target, base);
    EXPECT_TRUE(is_torsion_free(alg, lift.connection)) << alg.name();
    EXPECT_EQ(induced_top_connection(alg, lift.connection), target) << alg.name();
  }
  auto na = testing::nonabelian2();
  EXPECT_THROW(torsionfree_lift(na, TopConnection::zero(na), LeftConnectionOnL(2, 0)), std::invalid_argument);
}

}  // namespace
}  // namespace lrbv
