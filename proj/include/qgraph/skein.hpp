#pragma once
/// @file skein.hpp
/// @brief Wilson loops of boundary and consecutive-puncture curves, the Kauffman
/// relation for the braiding on V_2 (x) V_2, and Chebyshev-threaded central elements.

#include <string>
#include <vector>

#include "qgraph/graphalg.hpp"
#include "qgraph/report.hpp"
#include "qgraph/rootcenter.hpp"

namespace qgraph {

/// i (flip o R) on V_2 (x) V_2 at v = eps^{1/2}.
Matrix<Cyclotomic> braiding_matrix(int l);
/// U = zeta (braiding - zeta id), with zeta = i eps^{1/2}.
Matrix<Cyclotomic> kauffman_u(int l);

/// A curve on the n-punctured disk: a loop around puncture i, the outer boundary, or a
/// loop around punctures first..first+length-1.
struct CurveSpec {
  enum class Kind { Boundary, Outer, Arc };
  Kind kind = Kind::Boundary;
  int first = 1;
  int length = 1;
  int power = 1;  ///< Chebyshev power c >= 1
  int lk = 0;     ///< W is multiplied by i^lk

  /// "boundary:2", "outer", "arc:1..3", each with optional "^c" (c an integer, or the
  /// letter l for the order of eps) and "@k" for the i-exponent.
  static CurveSpec parse(const std::string& s, int l);
  std::string str() const;
  /// Sites of the loop, as a consecutive tuple.
  std::vector<int> sites(int n) const;
  /// Throws std::invalid_argument if a site is outside 1..n or power < 1.
  void validate(int n) const;
};

/// T_c(W(curve)) at generic q. Requires lk even since i is not in Q(q^{1/2}).
Elem<RatFunc> wilson_curve(const CurveSpec& c, int n);
/// i^lk T_c(W(curve)) at q = eps.
EpsElem wilson_curve_eps(const CurveSpec& c, int n, int l);

/// Kauffman relation checks on the 4x4 braiding at one l.
std::vector<Task> kauffman_suite(int l);
/// Curve images, the coproduct route for the full product, commutativity of the boundary
/// algebra and independence of its monomials of degree <= 3.
std::vector<Task> wilson_suite(int n, bool override_bounds = false);
/// T_l of every consecutive arc is central at eps and equals Tr(Fr M ... Fr M).
std::vector<Task> chebyshev_center_suite(int n, int l, bool override_bounds = false);
/// User-supplied curves at eps: puncture loops and curves with l | c commute with every
/// generator; the others (eta included) commute with the diagonal action.
std::vector<Task> curve_suite(const std::vector<CurveSpec>& curves, int n, int l, bool override_bounds = false);
/// kauffman_suite(l), wilson_suite(n) and chebyshev_center_suite(n, l).
std::vector<Task> skein_suite(int n, int l, bool override_bounds = false);

}  // namespace qgraph
