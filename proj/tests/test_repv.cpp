#include <gtest/gtest.h>

#include "qgraph/repv.hpp"

using namespace qgraph;
using El = Elem<RatFunc>;
using M = Matrix<RatFunc>;

namespace {

const UAlg<RatFunc>& A() { return generic_alg(); }
RatFunc q(int k) { return RatFunc::q(k); }
RatFunc qd() { return q(1) - q(-1); }

M gen(const Module<RatFunc>& V, const El& u) { return represent(u, {&V}); }

M embed12(const M& r, int d) { return kron(r, M::identity(d)); }
M embed23(const M& r, int d) { return kron(M::identity(d), r); }

}  // namespace

TEST(Module, DimensionTwoImages) {
  auto V = module_V(A(), 2);
  M K(2, 2), E(2, 2), F(2, 2);
  K(0, 0) = q(1);
  K(1, 1) = q(-1);
  E(0, 1) = RatFunc(1);
  F(1, 0) = RatFunc(1);
  EXPECT_EQ(V.K, K);
  EXPECT_EQ(V.E, E);
  EXPECT_EQ(V.F, F);
}

TEST(Module, DefiningRelationsHold) {
  for (int m = 1; m <= 5; ++m) {
    auto V = module_V(A(), m);
    EXPECT_EQ(V.E * V.F - V.F * V.E, qd().inverse() * (V.K - V.Kinv)) << m;
    EXPECT_EQ(V.K * V.E, q(2) * (V.E * V.K)) << m;
    EXPECT_EQ(V.K * V.F, q(-2) * (V.F * V.K)) << m;
    EXPECT_EQ(V.K * V.Kinv, M::identity(m)) << m;
  }
}

TEST(Module, RepresentationIsMultiplicative) {
  auto V = module_V(A(), 3);
  El E = El::E(A()), F = El::F(A()), K = El::K(A());
  std::vector<El> xs{E * F * K, F * F + El::K(A(), 1, 0, -1) * q(3), E * E * F - K * E, El::one(A(), 1) + F * E};
  for (auto& x : xs)
    for (auto& y : xs) EXPECT_EQ(gen(V, x * y), gen(V, x) * gen(V, y));
}

TEST(Module, CasimirMatchesVermaQuotient) {
  // Omega on V_m equals the Verma value q x + q^{-1} x^{-1} at x = q^{m-1}.
  El Om = casimir(A());
  WeightPoly w = verma_action(Om, 0, 4)[0];
  for (int m = 1; m <= 4; ++m) {
    RatFunc expect;
    for (auto& [e, c] : w) expect += c * q(e * (m - 1));
    EXPECT_EQ(gen(module_V(A(), m), Om), expect * M::identity(m)) << m;
  }
  EXPECT_EQ(gen(module_V(A(), 3), Om), (q(3) + q(-3)) * M::identity(3));
}

TEST(RMatrix, FundamentalValue) {
  auto V = module_V(A(), 2);
  M expect(4, 4);
  expect(0, 0) = q(1);
  expect(1, 1) = RatFunc(1);
  expect(1, 2) = qd();
  expect(2, 2) = RatFunc(1);
  expect(3, 3) = q(1);
  M R = r_matrix(A(), V, V);
  EXPECT_EQ(R, RatFunc::v(-1) * expect);
  EXPECT_EQ(R * R.inverse(), M::identity(4));
  // entries lie in v^{+-1} Q[q, q^{-1}]
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const RatFunc& e = R(i, j);
      if (e.is_zero()) continue;
      ASSERT_TRUE(e.is_laurent());
      for (int k = e.num().low(); k <= e.num().high(); ++k)
        if (e.num().coeff(k) != 0) EXPECT_NE(k % 2, 0);
    }
}

TEST(RMatrix, YangBaxter) {
  for (auto [a, b, c] : std::vector<std::array<int, 3>>{{2, 2, 2}, {2, 3, 2}, {3, 2, 2}}) {
    auto Va = module_V(A(), a), Vb = module_V(A(), b), Vc = module_V(A(), c);
    M R12 = embed12(r_matrix(A(), Va, Vb), c);
    M R23 = embed23(r_matrix(A(), Vb, Vc), a);
    // R13 = P23 (R12 on Va (x) Vc (x) Vb) P23
    M P23 = embed23(flip_matrix<RatFunc>(b, c), a);
    M P32 = embed23(flip_matrix<RatFunc>(c, b), a);
    M R13 = P32 * embed12(r_matrix(A(), Va, Vc), b) * P23;
    EXPECT_EQ(R12 * R13 * R23, R23 * R13 * R12) << a << b << c;
  }
}

TEST(RMatrix, IntertwinesCoproductAndOpposite) {
  for (auto [a, b] : std::vector<std::array<int, 2>>{{2, 2}, {2, 3}, {3, 2}}) {
    auto V = module_V(A(), a), W = module_V(A(), b);
    M R = r_matrix(A(), V, W);
    M P = flip_matrix<RatFunc>(a, b), Pb = flip_matrix<RatFunc>(b, a);
    for (const El& g : {El::E(A()), El::F(A()), El::K(A())}) {
      El d = coproduct(g);
      M delta = represent(d, {&V, &W});
      M delta_op = Pb * represent(d, {&W, &V}) * P;
      EXPECT_EQ(R * delta, delta_op * R);
    }
  }
}

TEST(RMatrix, TensorModuleMatchesCoproduct) {
  auto V = module_V(A(), 2), W = module_V(A(), 3);
  auto T = tensor_module(A(), V, W);
  EXPECT_EQ(T.E, represent(coproduct(El::E(A())), {&V, &W}));
  EXPECT_EQ(T.F, represent(coproduct(El::F(A())), {&V, &W}));
  EXPECT_EQ(T.K, represent(coproduct(El::K(A())), {&V, &W}));
}

TEST(QuantumTrace, Dimensions) {
  for (int m = 1; m <= 5; ++m) {
    auto V = module_V(A(), m);
    El tr = quantum_trace(AMat<RatFunc>::identity(A(), m, 1), V);
    EXPECT_EQ(tr, El::scalar(A(), 1, A().qint(m))) << m;
  }
  auto V2 = module_V(A(), 2);
  EXPECT_EQ(quantum_trace(AMat<RatFunc>::identity(A(), 2, 1), V2), El::scalar(A(), 1, q(1) + q(-1)));
}

TEST(QuantumTrace, RRPrimeOnFundamentalGivesGenerators) {
  auto V = module_V(A(), 2);
  AMat<RatFunc> Mx = rr_prime_matrix(A(), V);
  El E = El::E(A()), F = El::F(A()), K = El::K(A()), Ki = El::K(A(), 1, 0, -1);
  EXPECT_EQ(Mx(0, 0), K + F * E * (q(-1) * qd() * qd()));
  EXPECT_EQ(Mx(0, 1), F * (q(-1) * qd()));
  EXPECT_EQ(Mx(1, 0), Ki * E * qd());
  EXPECT_EQ(Mx(1, 1), Ki);
  EXPECT_EQ(quantum_trace(Mx, V), casimir(A()));
}

TEST(QuantumTrace, RRPrimeIsCentralOnLargerModules) {
  // qTr_U of (pi_U (x) id)(RR') is central for every U.
  for (int m = 2; m <= 4; ++m) {
    auto U = module_V(A(), m);
    El c = quantum_trace(rr_prime_matrix(A(), U), U);
    for (const El& g : {El::E(A()), El::F(A()), El::K(A())}) EXPECT_TRUE(commutator(c, g).is_zero()) << m;
  }
}

TEST(RootOfUnity, MatricesSpecialize) {
  const int l = 3;
  const auto& B = root_alg(l);
  auto Vg = module_V(A(), 2);
  auto Vr = module_V(B, 2);
  M R = r_matrix(A(), Vg, Vg);
  Matrix<Cyclotomic> Rr = r_matrix(B, Vr, Vr);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_EQ(specialize_at_root(R(i, j), l), Rr(i, j));
  EXPECT_EQ(Rr * Rr.inverse(), Matrix<Cyclotomic>::identity(4));
}

TEST(Matrix, RankOverRationals) {
  Matrix<mpq_class> m(3, 3);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 2;
  m(1, 1) = 4;
  m(2, 2) = mpq_class(1, 3);
  EXPECT_EQ(m.rank(), 2);
  EXPECT_EQ(Matrix<mpq_class>::identity(4).rank(), 4);
}
