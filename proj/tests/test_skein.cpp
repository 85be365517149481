#include <gtest/gtest.h>

#include "qgraph/skein.hpp"

using namespace qgraph;

namespace {

void expect_all_pass(const std::vector<Task>& tasks) {
  for (const Record& r : run_tasks(tasks, 4))
    EXPECT_EQ(r.result.status, CheckResult::Status::Pass) << r.id << ": " << r.result.witness;
}

}  // namespace

TEST(Braiding, KauffmanL3L5) {
  expect_all_pass(kauffman_suite(3));
  expect_all_pass(kauffman_suite(5));
}

TEST(Braiding, LoopValueIsQuantumDimension) {
  const CycloField& f = CycloField::get(3);
  Cyclotomic z = f.zeta();
  EXPECT_EQ(z * z, -f.epsilon());
  Matrix<Cyclotomic> U = kauffman_u(3);
  Cyclotomic tr = U(0, 0) + U(1, 1) + U(2, 2) + U(3, 3);
  EXPECT_EQ(tr, f.epsilon() + f.epsilon().inverse());
}

TEST(CurveSpec, ParseAndPrint) {
  CurveSpec c = CurveSpec::parse("arc:1..3^l", 5);
  EXPECT_EQ(c.kind, CurveSpec::Kind::Arc);
  EXPECT_EQ(c.first, 1);
  EXPECT_EQ(c.length, 3);
  EXPECT_EQ(c.power, 5);
  EXPECT_EQ(c.str(), "arc:1..3^5");
  EXPECT_EQ(CurveSpec::parse("boundary:2", 3).str(), "boundary:2");
  EXPECT_EQ(CurveSpec::parse("outer^2@-1", 3).lk, -1);
  EXPECT_THROW(CurveSpec::parse("arc:3..1", 3), std::invalid_argument);
  EXPECT_THROW(CurveSpec::parse("loop:1", 3), std::invalid_argument);
  EXPECT_THROW(CurveSpec::parse("boundary:4", 3).validate(3), std::invalid_argument);
}

TEST(Wilson, BoundaryCurves) {
  const auto& G = generic_alg();
  EXPECT_EQ(wilson_curve(CurveSpec::parse("boundary:2", 3), 2), omega(G, 2, 2));
  EXPECT_EQ(wilson_curve(CurveSpec::parse("outer", 3), 2), eta(G, 2));
  EXPECT_EQ(wilson_curve(CurveSpec::parse("arc:1..2", 3), 2), eta(G, 2));
  EXPECT_THROW(wilson_curve(CurveSpec::parse("outer@1", 3), 2), std::invalid_argument);
}

TEST(Wilson, OddExponentAtRoot) {
  // i^1 at eps multiplies by the imaginary unit.
  EpsElem w = wilson_curve_eps(CurveSpec::parse("boundary:1", 3), 1, 3);
  EpsElem wi = wilson_curve_eps(CurveSpec::parse("boundary:1@1", 3), 1, 3);
  EXPECT_EQ(wi, w * CycloField::get(3).imag());
}

TEST(Wilson, OmegaEtaCommute) {
  const auto& G = generic_alg();
  for (int n : {2, 3}) {
    Elem<RatFunc> w = omega(G, n, 1), e = eta(G, n);
    EXPECT_EQ(w * e, e * w) << n;
  }
}

TEST(Threaded, ArcOneTwoCommutesWithC3) {
  EpsElem t = wilson_curve_eps(CurveSpec::parse("arc:1..2^l", 3), 3, 3);
  const AMat<Cyclotomic>& M3 = gen_matrix(root_alg(3), 3, 3);
  EXPECT_TRUE(commutator(t, M3(1, 0)).is_zero());
}

TEST(Threaded, EtaItselfIsNotCentral) {
  EpsElem e = wilson_curve_eps(CurveSpec::parse("outer", 3), 2, 3);
  const AMat<Cyclotomic>& M1 = gen_matrix(root_alg(3), 2, 1);
  EXPECT_FALSE(commutator(e, M1(0, 0)).is_zero());
}

TEST(Suites, WilsonN3) { expect_all_pass(wilson_suite(3)); }
TEST(Suites, ChebyshevCenterN3L3) { expect_all_pass(chebyshev_center_suite(3, 3)); }
TEST(Suites, Curves) {
  expect_all_pass(curve_suite({CurveSpec::parse("arc:1..2", 3), CurveSpec::parse("arc:2..3^3", 3), CurveSpec::parse("outer^2", 3)}, 3, 3));
}

TEST(Bounds, LargeNIsSkipped) {
  auto t = chebyshev_center_suite(4, 3);
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0].run().status, CheckResult::Status::Skipped);
  EXPECT_THROW(chebyshev_center_suite(2, 4), std::invalid_argument);
}
