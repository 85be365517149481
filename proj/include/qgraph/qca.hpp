#pragma once
/// @file qca.hpp
/// @brief Quantum coadjoint derivations of U_eps^{(x)n}.
///
/// D_a(u) = -lim_{q -> eps} [a~, u~] / (l (q^l - q^{-l})) for a central at eps, computed
/// over RatFunc and then specialized. A Derivation is the table of its values on
/// E, F, K, K^{-1} at every slot, extended to all of U_eps^{(x)n} by the Leibniz rule.

#include <array>
#include <string>
#include <vector>

#include "qgraph/rootcenter.hpp"

namespace qgraph {

/// Named elements of Z_0(U_eps) (plus Omega) with their canonical q-lifts.
enum class Central { X, Y, Z, Zinv, E, F, Omega };

/// x -> -(q - q^{-1})^l E^l K^{-l}, y -> (q - q^{-1})^l F^l, z^{+-1} -> K^{+-l},
/// e -> (q - q^{-1})^l E^l, f -> -(q - q^{-1})^l F^l K^l, Omega -> Omega; at a 1-based site.
Elem<RatFunc> central_lift(Central a, int n, int site, int l);
const char* central_name(Central a);

/// The limit formula on explicit lifts. Throws PoleAtSpecialization if the commutator
/// is not divisible by q^l - q^{-l} (a is not central at eps).
EpsElem derivation(const Elem<RatFunc>& a_lift, const Elem<RatFunc>& u_lift, int l);

class Derivation {
 public:
  enum Gen { E = 0, F = 1, K = 2, Kinv = 3 };

  Derivation(int n, int l);
  /// D_a from a lift of a, evaluated on the generators by the limit formula.
  static Derivation from_central(const Elem<RatFunc>& a_lift, int l);

  int arity() const { return n_; }
  int l() const { return l_; }
  const EpsElem& value(int slot, Gen g) const { return v_[slot][g]; }
  EpsElem& value(int slot, Gen g) { return v_[slot][g]; }

  /// Leibniz extension.
  EpsElem apply(const EpsElem& u) const;

  Derivation operator+(const Derivation& o) const;
  /// c D for c central in U_eps^{(x)n}.
  Derivation scaled(const EpsElem& c) const;
  /// [D1, D2] = D1 D2 - D2 D1, again a derivation.
  static Derivation bracket(const Derivation& a, const Derivation& b);
  /// First generator on which the two derivations differ, or empty.
  std::string differs(const Derivation& o) const;

 private:
  EpsElem power_image(int slot, Gen g, int k) const;

  int n_, l_;
  std::vector<std::array<EpsElem, 4>> v_;
};

/// E = z D_x, F = -z D_y, H = -2 z^{-1} D_z at one site; site 0 gives the diagonal sums.
Derivation qca_e(int n, int l, int site);
Derivation qca_f(int n, int l, int site);
Derivation qca_h(int n, int l, int site);

/// Coefficients c_0..c_N of exp(tD)(u) = sum t^k D^k(u) / k!.
std::vector<EpsElem> exp_series(const Derivation& D, const EpsElem& u, int order);

/// Coefficients of (1 + s)^alpha and psi_alpha(s) = ((1 - s)^alpha - 1)/s up to s^N.
std::vector<mpq_class> binomial_series(const mpq_class& alpha, int order);
std::vector<mpq_class> psi_series(const mpq_class& alpha, int order);

// ---------------------------------------------------------------- suites
// Default bounds: n <= 2, l in {3, 5}, series order <= 6.

/// Generator values from the limit formula, lift independence, Leibniz, braid intertwining.
std::vector<Task> qca_derivation_suite(int n, int l, bool override_bounds = false);
/// sl(2) relations of (E, F, H) and of the diagonal triple.
std::vector<Task> sl2_triple_suite(int n, int l, bool override_bounds = false);
/// Exponential series against the closed forms, through t^order.
std::vector<Task> exp_series_suite(int l, int order, bool override_bounds = false);
/// E and F kill Omega; the diagonal E, F kill omega^(i) and the threaded traces.
std::vector<Task> invariance_suite(int n, int l, bool override_bounds = false);
/// All of the above.
std::vector<Task> qca_suite(int n, int l, int order, bool override_bounds = false);

}  // namespace qgraph
