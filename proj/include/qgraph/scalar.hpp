#pragma once
/// @file scalar.hpp
/// @brief Exact coefficients: Laurent polynomials and rational functions in
/// v = q^{1/2} over Q, and the cyclotomic field Q[x]/Phi_{4l}(x).

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qgraph {

/// Raised when a denominator vanishes under specialization.
class PoleAtSpecialization : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the element and scalar parsers.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// @brief Finite Laurent series sum_k c_k v^k with rational coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const mpq_class& c);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const mpq_class& c, int exp);
  static LaurentPoly v(int k = 1) { return monomial(1, k); }
  static LaurentPoly q(int k = 1) { return monomial(1, 2 * k); }
  /// [n]_q = (q^n - q^{-n})/(q - q^{-1}), for any integer n.
  static LaurentPoly qint(int n);
  /// Coefficient list c_0..c_d is read as sum c_i v^i.
  static LaurentPoly from_coeffs(std::vector<mpq_class> c, int low = 0);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.empty() || (c_.size() == 1 && lo_ == 0); }
  bool is_monomial() const { return c_.size() == 1; }
  int low() const { return lo_; }
  int high() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  mpq_class coeff(int exp) const;
  const std::vector<mpq_class>& coeffs() const { return c_; }
  const mpq_class& lead() const { return c_.back(); }
  const mpq_class& trail() const { return c_.front(); }

  LaurentPoly shifted(int k) const;
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const mpq_class& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly& o) const { return lo_ == o.lo_ && c_ == o.c_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  /// Substitutes v -> v^k (k may be negative).
  LaurentPoly substitute_power(int k) const;

  std::string str(const char* var = "v") const;
  static LaurentPoly parse(const std::string& s, const char* var = "v");

 private:
  void trim();
  int lo_ = 0;
  std::vector<mpq_class> c_;
};

/// Polynomial helpers over Q (low exponent 0, trailing coefficient nonzero).
namespace poly {
/// Euclidean division; both inputs are ordinary polynomials (low() >= 0).
std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b);
/// Monic gcd of two ordinary polynomials.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);
/// Exact division of Laurent polynomials, or false if not divisible.
bool try_divide(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly* out);
/// m-th cyclotomic polynomial, computed from x^m - 1 by exact division.
LaurentPoly cyclotomic(int m);
}  // namespace poly

/// @brief Reduced quotient of Laurent polynomials.
///
/// Normal form: the denominator has low exponent 0 and constant term 1, and
/// shares no factor with the numerator.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const mpq_class& c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  RatFunc(LaurentPoly p) : num_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(LaurentPoly num, LaurentPoly den);

  static RatFunc v(int k = 1) { return RatFunc(LaurentPoly::v(k)); }
  static RatFunc q(int k = 1) { return RatFunc(LaurentPoly::q(k)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_.is_constant(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc inverse() const;
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  std::string str() const;
  static RatFunc parse(const std::string& s);

 private:
  void normalize();
  LaurentPoly num_;
  LaurentPoly den_ = LaurentPoly(1);
};

class Cyclotomic;

/// @brief The field Q(x)/Phi_{4l}(x) with l odd, l >= 3.
///
/// Instances are interned per l and live for the whole program.
class CycloField {
 public:
  static const CycloField& get(int l);

  int l() const { return l_; }
  int order() const { return 4 * l_; }
  int degree() const { return deg_; }
  const LaurentPoly& modulus() const { return phi_; }

  /// class(x)^k for any integer k.
  Cyclotomic xpow(long k) const;
  Cyclotomic epsilon() const;       ///< x^4, of order l
  Cyclotomic sqrt_epsilon() const;  ///< eps^{(l+1)/2}
  Cyclotomic imag() const;          ///< x^l
  Cyclotomic zeta() const;          ///< i * eps^{1/2}
  /// Exponent e with class(x)^e = eps^{1/2}; v^k maps to x^{k*e}.
  int sqrt_eps_exponent() const { return 2 * (l_ + 1); }

  /// Reduces a coefficient vector of any length in place to length deg.
  void reduce(std::vector<mpq_class>& c) const;

 private:
  explicit CycloField(int l);
  int l_;
  int deg_;
  LaurentPoly phi_;
};

/// @brief Element of a cyclotomic field, or a bare rational awaiting a field.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(long c);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const mpq_class& c);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const CycloField* f, std::vector<mpq_class> c);

  const CycloField* field() const { return f_; }
  bool is_zero() const;
  bool is_rational() const;
  /// Requires is_rational().
  mpq_class rational_value() const;
  /// Coefficient of x^k in the reduced representative (k < degree).
  mpq_class coeff(int k) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  Cyclotomic inverse() const;
  Cyclotomic pow(long k) const;
  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  std::string str() const;
  static Cyclotomic parse(const std::string& s, const CycloField& f);

 private:
  void promote(const CycloField* f);
  const CycloField* f_ = nullptr;
  // Without a field: empty (zero) or one rational entry.
  std::vector<mpq_class> c_;
};

/// Evaluates f at v = point.
Cyclotomic specialize(const RatFunc& f, const Cyclotomic& point);
/// Evaluates a Laurent polynomial at v = point.
Cyclotomic specialize(const LaurentPoly& f, const Cyclotomic& point);
/// Evaluates f at v = eps^{1/2} of the field for l.
Cyclotomic specialize_at_root(const RatFunc& f, int l);
/// Evaluates f at a rational point v = v0.
mpq_class specialize(const RatFunc& f, const mpq_class& v0);

/// Integer polynomial, coefficients low to high.
using IntPoly = std::vector<mpz_class>;

/// Normalized Chebyshev polynomial: T_0 = 2, T_1 = x, T_k = x T_{k-1} - T_{k-2}.
IntPoly chebyshev(int k);
IntPoly compose(const IntPoly& outer, const IntPoly& inner);
std::string to_string(const IntPoly& p);

/// Evaluates T_k at an element of any unital ring by the three-term recurrence.
template <class R>
R chebyshev_eval(int k, const R& x, const R& one) {
  if (k == 0) return one + one;
  R prev = one + one;
  R cur = x;
  for (int j = 2; j <= k; ++j) {
    R next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::string to_string(const mpq_class& c);

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }
inline std::ostream& operator<<(std::ostream& os, const RatFunc& p) { return os << p.str(); }
inline std::ostream& operator<<(std::ostream& os, const Cyclotomic& p) { return os << p.str(); }

}  // namespace qgraph
