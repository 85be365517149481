#pragma once
/// @file poisson.hpp
/// @brief The commutative side: O(G^n) with the Fock-Rosly bracket, the Z_0 coordinates
/// x, y, z with the coadjoint bracket, dressing of the site matrices, and the check that
/// Fr is a Poisson map.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "qgraph/qca.hpp"

namespace qgraph {

/// Variables of a commutative ring. Variables may be Laurent; groups of four variables
/// (l11, l12, l21, l22) carry the relation l11 l22 - l12 l21 = 1.
class PolyRing {
 public:
  /// l11^(i), l12^(i), l21^(i), l22^(i) for i = 1..n, with det = 1 per site.
  static const PolyRing& group(int n);
  /// x^(i), y^(i), z'^(i) for i = 1..n with z'^(i) Laurent and z = z'^2.
  static const PolyRing& coords(int n);

  int size() const { return static_cast<int>(names_.size()); }
  int sites() const { return n_; }
  bool is_group() const { return group_; }
  const std::string& name(int v) const { return names_[v]; }
  bool laurent(int v) const { return laurent_[v]; }
  const std::vector<std::array<int, 4>>& det_groups() const { return det_; }
  /// Variable index of l_{rs}^(i) (r, s in {1, 2}) or of x, y, z' at site i.
  int l(int i, int r, int s) const { return 4 * (i - 1) + 2 * (r - 1) + (s - 1); }
  int x(int i) const { return 3 * (i - 1); }
  int y(int i) const { return 3 * (i - 1) + 1; }
  int w(int i) const { return 3 * (i - 1) + 2; }

 private:
  PolyRing() = default;
  int n_ = 0;
  bool group_ = false;
  std::vector<std::string> names_;
  std::vector<bool> laurent_;
  std::vector<std::array<int, 4>> det_;
};

/// @brief Polynomial over Q in the variables of a PolyRing, kept in normal form: no
/// negative exponent on a non-Laurent variable and no monomial containing both l11 and l22
/// of one site.
class CommPoly {
 public:
  using Exps = std::vector<int>;

  CommPoly() = default;
  explicit CommPoly(const PolyRing& R) : R_(&R) {}
  static CommPoly constant(const PolyRing& R, const mpq_class& c);
  static CommPoly var(const PolyRing& R, int v, int power = 1);

  const PolyRing& ring() const { return *R_; }
  const std::map<Exps, mpq_class>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  CommPoly operator-() const;
  CommPoly& operator+=(const CommPoly& o);
  CommPoly& operator-=(const CommPoly& o);
  friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
  friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
  friend CommPoly operator*(CommPoly a, const mpq_class& c);
  bool operator==(const CommPoly& o) const { return t_ == o.t_; }
  bool operator!=(const CommPoly& o) const { return !(*this == o); }
  CommPoly pow(int k) const;

  /// Partial derivative in variable v of the normal-form representative.
  CommPoly derivative(int v) const;
  /// Ring map sending variable v to images[v]; every exponent must be nonnegative.
  CommPoly substitute(const PolyRing& target, const std::vector<CommPoly>& images) const;
  /// True if every exponent of z' is even (the element lies in the z-subring).
  bool even_in_w() const;

  /// Readable form; z'^(2k) prints as z^k.
  std::string str(size_t max_terms = 0) const;

 private:
  void add_term(const Exps& e, const mpq_class& c);
  const PolyRing* R_ = nullptr;
  std::map<Exps, mpq_class> t_;
};

/// Bracket values on all variable pairs, extended by Leibniz through partial derivatives.
class PoissonTable {
 public:
  explicit PoissonTable(const PolyRing& R);
  const PolyRing& ring() const { return *R_; }
  CommPoly& at(int a, int b) { return t_[a * R_->size() + b]; }
  const CommPoly& at(int a, int b) const { return t_[a * R_->size() + b]; }
  CommPoly bracket(const CommPoly& f, const CommPoly& g) const;
  /// First failing pair or triple, or empty.
  std::string antisymmetry_witness() const;
  std::string jacobi_witness() const;

 private:
  const PolyRing* R_;
  std::vector<CommPoly> t_;
};

/// 2x2 matrices of polynomials, row-major.
using PolyMat = std::array<CommPoly, 4>;
PolyMat mat_mul(const PolyMat& a, const PolyMat& b);

/// The classical r-matrix (1/4) H (x) H + X (x) Y on C^2 (x) C^2, row (r, t) -> 2r + t.
std::array<std::array<mpq_class, 4>, 4> classical_r();

/// Order of the two sandwich terms in the single-site formula
/// r L1 L2 - L1 L2 r' + (...): Printed is + L2 r' L1 - L1 r L2, Swapped is + L1 r' L2 - L2 r L1.
enum class SameSiteOrder { Printed, Swapped };

/// Fock-Rosly bracket on l^(i)_{rs}, from the 4x4 matrix formulas. Sites i < j use
/// r L1 L2 + L1 L2 r - L2 r L1 - L1 r L2.
PoissonTable fr_bracket(int n, SameSiteOrder order = SameSiteOrder::Printed);
/// {y, x} = -1 + xy + z^-2, {z, x} = -zx, {z, y} = yz per site, written on z' = z^{1/2};
/// zero across sites.
PoissonTable qca_bracket_model(int n);

/// Coordinate helpers in PolyRing::coords(n).
CommPoly coord_x(int n, int i);
CommPoly coord_y(int n, int i);
CommPoly coord_z(int n, int i, int power = 1);
/// M = [[z - zxy, y], [-x, z^-1]] at site i.
PolyMat site_matrix_poly(int n, int i);
/// M_+ = [[z', z'y], [0, z'^-1]] and M_- = [[z'^-1, 0], [z'x, z']] at site i.
PolyMat upper_factor(int n, int i);
PolyMat lower_factor(int n, int i);
/// R^(i) = M_+^(n) ... M_+^(i+1), and R^(i) M^(i) R^(i)-1.
PolyMat dressing_matrix(int n, int i);
PolyMat dressed_matrix(int n, int i);
/// Sends l^(i)_{rs} to the dressed entries: the coordinate form of Fr.
CommPoly fr_pullback(const CommPoly& f);

/// Reads an element of Z_0(U_eps^{(x)n}) in x, y, z. Throws std::domain_error if a
/// monomial is not of the form F^{la} K^{lb} E^{lc} per slot or a coefficient is irrational.
CommPoly extract_coordinates(const EpsElem& u, int l);
/// Canonical q-lift of a coordinate polynomial (z' exponents must be even).
Elem<RatFunc> lift_coordinates(const CommPoly& p, int l);
/// {a, b}_QCA = D_a(b) by the limit formula on canonical lifts, read back in coordinates.
CommPoly qca_bracket_from_derivations(const CommPoly& a, const CommPoly& b, int l);

// ---------------------------------------------------------------- suites
// Classical checks run for n <= 3; the derivation route for n <= 2, l in {3, 5}.

/// Antisymmetry and Jacobi of both tables, det as a Casimir, model values, invariance of
/// trace functions under conjugation, and the dual-group bracket.
std::vector<Task> poisson_suite(int n, int l, bool override_bounds = false);
/// Dressing identity against the Frobenius images, z' cancellation, group law.
std::vector<Task> dressing_suite(int n, int l, bool override_bounds = false);
/// {Fr f, Fr g}_QCA = Fr {f, g}_FR: every pair through the model table, and through the
/// derivations for every pair at n = 1 and a seeded cross-site sample at n = 2.
std::vector<Task> fr_poisson_suite(int n, int l, bool override_bounds = false);

}  // namespace qgraph
