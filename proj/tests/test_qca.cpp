#include <gtest/gtest.h>

#include "qgraph/qca.hpp"

using namespace qgraph;
using RE = Elem<RatFunc>;

namespace {

const UAlg<RatFunc>& G() { return generic_alg(); }
const UAlg<Cyclotomic>& A3() { return root_alg(3); }

void expect_all_pass(const std::vector<Task>& tasks) {
  for (const Record& r : run_tasks(tasks, 4))
    EXPECT_EQ(r.result.status, CheckResult::Status::Pass) << r.id << ": " << r.result.witness;
}

RatFunc h3() { return RatFunc::q(3) - RatFunc::q(-3); }

}  // namespace

TEST(Derivation, ZOnE) {
  // D_z(E) = -(1/3) z E at l = 3.
  EpsElem got = derivation(central_lift(Central::Z, 1, 1, 3), RE::E(G()), 3);
  EpsElem want = EpsElem::K(A3(), 1, 0, 3) * EpsElem::E(A3()) * Cyclotomic(mpq_class(-1, 3));
  EXPECT_EQ(got, want);
}

TEST(Derivation, NonCentralHasPole) {
  EXPECT_THROW(derivation(RE::E(G()), RE::F(G()), 3), PoleAtSpecialization);
}

TEST(Derivation, JunkOnU) {
  // a = z, u = E, junk F; a = e, u = F, junk KE; a = y, u = K, junk 1.
  struct Case {
    Central a;
    RE u, junk;
  };
  std::vector<Case> cases = {
      {Central::Z, RE::E(G()), RE::F(G())},
      {Central::E, RE::F(G()), RE::K(G()) * RE::E(G())},
      {Central::Y, RE::K(G()), RE::one(G(), 1)},
  };
  for (const Case& c : cases) {
    RE a = central_lift(c.a, 1, 1, 3);
    EXPECT_EQ(derivation(a, c.u + c.junk * h3(), 3), derivation(a, c.u, 3)) << central_name(c.a);
  }
}

TEST(Derivation, JunkOnAIsInner) {
  RE a = central_lift(Central::Z, 1, 1, 3);
  RE J = RE::F(G());
  EpsElem d = derivation(a + J * h3(), RE::E(G()), 3) - derivation(a, RE::E(G()), 3);
  EpsElem inner = commutator(EpsElem::F(A3()), EpsElem::E(A3())) * Cyclotomic(mpq_class(-1, 3));
  EXPECT_FALSE(d.is_zero());
  EXPECT_EQ(d, inner);
}

TEST(Derivation, EOnZ) {
  // E(z) = z^2 x.
  EpsElem z = z0_z(1, 3, 1), x = z0_x(1, 3, 1);
  EXPECT_EQ(qca_e(1, 3, 1).apply(z), z * z * x);
}

TEST(Derivation, ExpOnYTerminates) {
  std::vector<EpsElem> s = exp_series(qca_e(1, 3, 1), z0_y(1, 3, 1), 4);
  EXPECT_EQ(s[2], z0_x(1, 3, 1));
  EXPECT_TRUE(s[3].is_zero());
  EXPECT_TRUE(s[4].is_zero());
}

TEST(Series, BinomialAndPsi) {
  std::vector<mpq_class> b = binomial_series(mpq_class(1, 2), 3);
  EXPECT_EQ(b[2], mpq_class(-1, 8));
  EXPECT_EQ(b[3], mpq_class(1, 16));
  // psi_{1/2}(s) = -1/2 - s/8 - ...
  std::vector<mpq_class> p = psi_series(mpq_class(1, 2), 1);
  EXPECT_EQ(p[0], mpq_class(-1, 2));
  EXPECT_EQ(p[1], mpq_class(-1, 8));
}

TEST(Suites, DerivationL3) { expect_all_pass(qca_derivation_suite(1, 3)); }
TEST(Suites, DerivationTwoSitesL3) { expect_all_pass(qca_derivation_suite(2, 3)); }
TEST(Suites, Sl2L3) { expect_all_pass(sl2_triple_suite(2, 3)); }
TEST(Suites, Sl2L5) { expect_all_pass(sl2_triple_suite(1, 5)); }
TEST(Suites, ExpL3) { expect_all_pass(exp_series_suite(3, 4)); }
TEST(Suites, ExpL5) { expect_all_pass(exp_series_suite(5, 4)); }
TEST(Suites, InvarianceTwoSitesL3) { expect_all_pass(invariance_suite(2, 3)); }

TEST(Bounds, OrderTooLargeIsSkipped) {
  auto t = exp_series_suite(3, 9);
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0].run().status, CheckResult::Status::Skipped);
  EXPECT_THROW(qca_suite(1, 4, 2), std::invalid_argument);
}
