#include <gtest/gtest.h>

#include "qgraph/rootcenter.hpp"

using namespace qgraph;
using RE = Elem<RatFunc>;

namespace {

const UAlg<Cyclotomic>& A3() { return root_alg(3); }

void expect_all_pass(const std::vector<Task>& tasks) {
  for (const Record& r : run_tasks(tasks, 4))
    EXPECT_EQ(r.result.status, CheckResult::Status::Pass) << r.id << ": " << r.result.witness;
}

}  // namespace

TEST(Specialize, CasimirAtEps) {
  const auto& A = A3();
  Cyclotomic e = A.q(1), ei = A.q(-1);
  EpsElem expect = EpsElem::K(A) * e + EpsElem::K(A, 1, 0, -1) * ei + EpsElem::F(A) * EpsElem::E(A) * ((e - ei) * (e - ei));
  EXPECT_EQ(specialize_element(casimir(generic_alg()), 3), expect);
}

TEST(Specialize, ClearedDenominator) {
  const auto& G = generic_alg();
  RE t = (RE::E(G) * RE::F(G) - RE::F(G) * RE::E(G)) * (RatFunc::q(1) - RatFunc::q(-1));
  EXPECT_EQ(specialize_element(t, 3), EpsElem::K(A3()) - EpsElem::K(A3(), 1, 0, -1));
}

TEST(Specialize, PoleIsReported) {
  RatFunc bad = RatFunc(1) / (RatFunc::q(3) - RatFunc::q(-3));
  RE t = RE::E(generic_alg()) * bad;
  EXPECT_THROW(specialize_element(t, 3), PoleAtSpecialization);
}

TEST(Frobenius, OneSiteImages) {
  FrImage f = frobenius(1, 3, 1);
  GenQuad<Cyclotomic> g = site_generators(A3(), 1, 1);
  EXPECT_EQ(f.d, g.d * g.d * g.d);
  EXPECT_EQ(f.b, g.b * g.b * g.b);
  EXPECT_EQ(f.a * f.d - f.b * f.c, EpsElem::one(A3(), 1));
  // T_l(omega) d^l = b^l c^l + 1 + d^{2l}
  EpsElem T = chebyshev_eval(3, omega(A3(), 1, 1), EpsElem::one(A3(), 1));
  EXPECT_EQ(T * f.d, f.b * f.c + EpsElem::one(A3(), 1) + f.d * f.d);
}

TEST(Frobenius, ImagesAreZ0Coordinates) {
  // b^l = y, c^l = -x, d^l = z^{-1} at one site.
  FrImage f = frobenius(1, 5, 1);
  EXPECT_EQ(f.b, z0_y(1, 5, 1));
  EXPECT_EQ(f.c, -z0_x(1, 5, 1));
  EXPECT_EQ(f.d, z0_z(1, 5, 1, -1));
}

TEST(Center, ClosedFormsTwoSites) {
  EXPECT_EQ(site_power(2, 3, 1, 'c'), closed_c_power(2, 3, 1));
  EXPECT_EQ(site_power(2, 3, 1, 'd'), closed_d_power(2, 3, 1));
  EXPECT_EQ(site_power(2, 3, 1, 'b'), closed_b_power(2, 3, 1));
  EXPECT_TRUE(commutator(site_power(2, 3, 1, 'b'), site_generators(A3(), 2, 2).a).is_zero());
}

TEST(Center, NonPowerIsNotCentral) {
  // b^(1)2 is not central at l = 3.
  EpsElem b2 = site_generators(A3(), 2, 1).b.pow(2);
  EXPECT_FALSE(commutator(b2, site_generators(A3(), 2, 1).a).is_zero());
}

TEST(Bounds, LargeLIsSkipped) {
  auto t = threading_suite(3, 7);
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0].run().status, CheckResult::Status::Skipped);
  EXPECT_THROW(center_suite(1, 4), std::invalid_argument);
}

TEST(Suites, CenterL3) {
  expect_all_pass(center_suite(1, 3));
  expect_all_pass(center_suite(2, 3));
}
TEST(Suites, FrobeniusL3) {
  expect_all_pass(frobenius_suite(1, 3));
  expect_all_pass(frobenius_suite(2, 3));
}
TEST(Suites, ThreadingTwoSitesL3) { expect_all_pass(threading_suite(2, 3)); }
