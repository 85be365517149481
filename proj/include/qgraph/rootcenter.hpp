#pragma once
/// @file rootcenter.hpp
/// @brief L_{0,n} at q = eps, a primitive l-th root of unity (l odd): the l-th power
/// center, the Frobenius map and the Chebyshev threading identity.
///
/// All elements are Phi_n images in U_eps^{(x)n} with coefficients in Q(zeta_{4l}).

#include <vector>

#include "qgraph/graphalg.hpp"

namespace qgraph {

using EpsElem = Elem<Cyclotomic>;

/// Coefficientwise image at v = eps^{1/2}; throws PoleAtSpecialization.
EpsElem specialize_element(const Elem<RatFunc>& t, int l);

/// Coordinates on Z_0(U_eps)^{(x)n}, placed at a 1-based site:
/// x = -(eps - eps^{-1})^l E^l K^{-l}, y = (eps - eps^{-1})^l F^l, z^p = K^{pl}.
EpsElem z0_x(int n, int l, int site);
EpsElem z0_y(int n, int l, int site);
EpsElem z0_z(int n, int l, int site, int power = 1);

/// Image of g^{(site)l} for g in "abcd", by repeated squaring. Cached.
const EpsElem& site_power(int n, int l, int site, char g);

/// Fr of the four coordinate functions at one site.
struct FrImage {
  EpsElem a, b, c, d;
};
/// Fr(a) = T_l(omega) - d^l, Fr(b) = b^l, Fr(c) = c^l, Fr(d) = d^l.
FrImage frobenius(int n, int l, int site);
/// [[Fr(a), Fr(b)], [Fr(c), Fr(d)]].
AMat<Cyclotomic> fr_matrix(int n, int l, int site);

/// Closed forms of c^{(i)l}, d^{(i)l}, b^{(i)l} in the Z_0 coordinates.
EpsElem closed_c_power(int n, int l, int site);
EpsElem closed_d_power(int n, int l, int site);
EpsElem closed_b_power(int n, int l, int site);

/// T_l(qTr(M^{(i_1)} ... M^{(i_k)})) and Tr(Fr M^{(i_1)} ... Fr M^{(i_k)}).
EpsElem threaded_trace(int n, int l, const std::vector<int>& sites);
EpsElem frobenius_trace(int n, int l, const std::vector<int>& sites);

// ---------------------------------------------------------------- suites
// Outside the desk-scale range (n <= 3, l in {3, 5}) a suite returns a single
// skipped entry unless override_bounds is set. l must be odd and >= 3.

/// l-th power centrality, the degree-l relation per site, closed forms, T_l(Omega).
std::vector<Task> center_suite(int n, int l, bool override_bounds = false);
/// Frobenius: det relation, commutativity, coproduct identities, Z_0 Hopf closure.
std::vector<Task> frobenius_suite(int n, int l, bool override_bounds = false);
/// T_l(qTr(product)) = Tr(Fr product) for every increasing tuple, and centrality.
std::vector<Task> threading_suite(int n, int l, bool override_bounds = false);

}  // namespace qgraph
