#include <gtest/gtest.h>

#include "qgraph/graphalg.hpp"

using namespace qgraph;
using El = Elem<RatFunc>;
using AM = AMat<RatFunc>;

namespace {

const UAlg<RatFunc>& A() { return generic_alg(); }
RatFunc q(int k) { return RatFunc::q(k); }
RatFunc qd() { return q(1) - q(-1); }

void expect_all_pass(const std::vector<Task>& tasks) {
  for (const Record& r : run_tasks(tasks, 4))
    EXPECT_EQ(r.result.status, CheckResult::Status::Pass) << r.id << ": " << r.result.witness;
}

}  // namespace

TEST(Phi1, GeneratorImages) {
  auto g = phi1_generators(A());
  El E = El::E(A()), F = El::F(A()), K = El::K(A()), Ki = El::K(A(), 1, 0, -1);
  EXPECT_EQ(g.a, K + F * E * (q(-1) * qd() * qd()));
  EXPECT_EQ(g.b, F * (q(-1) * qd()));
  EXPECT_EQ(g.c, Ki * E * qd());
  EXPECT_EQ(g.d, Ki);
  EXPECT_EQ(g.a * q(1) + g.d * q(-1), casimir(A()));
  EXPECT_EQ(g.a * g.d - g.b * g.c * q(2), El::one(A(), 1));
  EXPECT_EQ(g.a * g.b - g.b * g.a, -(g.b * g.d * (RatFunc(1) - q(-2))));
}

TEST(GenMatrix, LastSiteIsPhi1AndEntriesLiveOnLaterSlots) {
  const AM& M = gen_matrix(A(), 3, 3);
  auto g = phi1_generators(A());
  EXPECT_EQ(M(0, 0), embed(g.a, 3, {2}));
  EXPECT_EQ(M(1, 1), embed(g.d, 3, {2}));
  const AM& M1 = gen_matrix(A(), 3, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (const auto& [k, c] : M1(i, j).terms()) EXPECT_TRUE(k.m[0].is_one());
}

TEST(GenMatrix, ConjugationMatchesMatrixProductWithR) {
  // Represent both sides on V_0 (x) V_1 (x) V_2, where V_0 carries the matrix index,
  // V_1 the first slot and V_2 the slot being conjugated in.
  auto V = module_V(A(), 2);
  using M = Matrix<RatFunc>;
  const AM& X = gen_matrix(A(), 1, 1);
  AM Y = conjugate_R(X.map([](const El& e) { return embed(e, 2, {0}); }), 1);
  M Xs(4, 4), Ys(8, 8);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      M xr = represent(X(i, j), {&V});
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) Xs(i * 2 + a, j * 2 + b) = xr(a, b);
      M yr = represent(Y(i, j), {&V, &V});
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) Ys(i * 4 + a, j * 4 + b) = yr(a, b);
    }
  M P = kron(M::identity(2), flip_matrix<RatFunc>(2, 2));
  M R02 = P * kron(r_matrix(A(), V, V), M::identity(2)) * P;
  EXPECT_EQ(R02 * kron(Xs, M::identity(2)) * R02.inverse(), Ys);
}

TEST(Xi, ValuesAndDelta) {
  EXPECT_EQ(xi(A(), 1, 1), site_generators(A(), 1, 1).d);
  auto g = site_generators(A(), 2, 1), h = site_generators(A(), 2, 2);
  EXPECT_EQ(xi(A(), 2, 1), g.d * h.d + g.c * h.b);
  EXPECT_EQ(delta(A(), 3, 2), El::K(A(), 3, 1, -1));
  EXPECT_EQ(delta(A(), 3, 2, -1), El::K(A(), 3, 1, 1));
}

TEST(Invariant, TemperleyLiebIsAnIntertwiner) {
  auto V = module_V(A(), 2);
  auto T = tensor_module(A(), V, V);
  auto U = tl_element(A());
  EXPECT_EQ(U * T.E, T.E * U);
  EXPECT_EQ(U * T.F, T.F * U);
  EXPECT_EQ(U * T.K, T.K * U);
  EXPECT_EQ(U * U, (q(1) + q(-1)) * U);
  EXPECT_EQ(invariant_element(A(), 1, {2}), omega(A(), 1, 1));
}

TEST(Rank, MonomialImagesIndependentToDegreeTwo) {
  RankResult r = phi1_monomial_rank(2, 10);
  EXPECT_EQ(r.monomials, 4 + 10);
  EXPECT_EQ(r.rank, r.monomials);
}

TEST(Suites, PresentationOneSite) { expect_all_pass(presentation_suite(1)); }
TEST(Suites, PresentationTwoSites) { expect_all_pass(presentation_suite(2)); }
TEST(Suites, AlekseevTwoSites) { expect_all_pass(alekseev_suite(2, 2)); }
