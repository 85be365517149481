#pragma once
/// @file uqsl2.hpp
/// @brief U_q(sl2) in PBW normal form F^a K^b E^c and its tensor powers.
///
/// The coefficient ring is a template parameter: RatFunc for generic q,
/// Cyclotomic at a root of unity, mpq_class at a rational value of v.

#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qgraph/scalar.hpp"

namespace qgraph {

constexpr int kMaxSlots = 4;

/// F^a K^b E^c.
struct Mono {
  int16_t a = 0;
  int16_t b = 0;
  int16_t c = 0;
  bool operator==(const Mono& o) const { return a == o.a && b == o.b && c == o.c; }
  bool operator!=(const Mono& o) const { return !(*this == o); }
  bool operator<(const Mono& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return c < o.c;
  }
  bool is_one() const { return a == 0 && b == 0 && c == 0; }
};

/// One monomial per tensor slot; unused slots stay at the unit.
struct Key {
  std::array<Mono, kMaxSlots> m{};
  bool operator==(const Key& o) const { return m == o.m; }
  bool operator<(const Key& o) const { return m < o.m; }
};

struct KeyHash {
  size_t operator()(const Key& k) const noexcept {
    uint64_t h = 1469598103934665603ULL;
    for (const Mono& x : k.m) {
      uint64_t w = (static_cast<uint64_t>(static_cast<uint16_t>(x.a)) << 32) ^
                   (static_cast<uint64_t>(static_cast<uint16_t>(x.b)) << 16) ^
                   static_cast<uint64_t>(static_cast<uint16_t>(x.c));
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<size_t>(h);
  }
};

inline bool coef_zero(const RatFunc& c) { return c.is_zero(); }
inline bool coef_zero(const Cyclotomic& c) { return c.is_zero(); }
inline bool coef_zero(const mpq_class& c) { return c == 0; }
inline std::string coef_str(const RatFunc& c) { return c.str(); }
inline std::string coef_str(const Cyclotomic& c) { return "(" + c.str() + ")"; }
inline std::string coef_str(const mpq_class& c) { return "(" + c.get_str() + ")"; }

/// E^c F^a = sum coef F^{a-j} K^m E^{c-j}.
template <class C>
struct STerm {
  int j;
  int m;
  C coef;
};

/// @brief Structure constants of U_q(sl2) over one coefficient ring.
template <class C>
class UAlg {
 public:
  /// @param vpow returns v^k in C
  /// @param root_l the odd order l when q = eps, 0 otherwise
  UAlg(std::function<C(long)> vpow, std::string label, int root_l = 0);
  ~UAlg();
  UAlg(const UAlg&) = delete;
  UAlg& operator=(const UAlg&) = delete;

  C v(long k) const;
  C q(long k) const { return v(2 * k); }
  C qint(long n) const;  ///< [n]_q
  C qfactorial(long n) const;
  C qdiff() const { return q(1) - q(-1); }
  const C& inv_qdiff() const { return inv_qdiff_; }
  const std::string& label() const { return label_; }
  int root_order() const { return root_l_; }

  /// Straightening coefficients for E^c F^a; memoized, safe for concurrent use.
  const std::vector<STerm<C>>& straighten(int c, int a) const;

 private:
  std::vector<STerm<C>>* compute(int c, int a) const;

  std::function<C(long)> vpow_;
  std::string label_;
  int root_l_;
  static constexpr long kCache = 512;
  std::vector<C> vcache_;
  C inv_qdiff_;
  static constexpr int kTable = 96;
  mutable std::vector<std::atomic<std::vector<STerm<C>>*>> table_;
  mutable std::mutex mu_;
};

/// Shared algebra instances.
const UAlg<RatFunc>& generic_alg();
const UAlg<Cyclotomic>& root_alg(int l);
/// v = v0 (a nonzero rational with v0^4 != 1).
const UAlg<mpq_class>& point_alg(long v0);

/// @brief Element of U_q(sl2)^{(x)n}; n = 1 is a plain PBW element.
template <class C>
class Elem {
 public:
  using Term = std::pair<Key, C>;

  Elem() = default;
  Elem(const UAlg<C>& A, int n);

  static Elem scalar(const UAlg<C>& A, int n, const C& c);
  static Elem one(const UAlg<C>& A, int n) { return scalar(A, n, C(1)); }
  static Elem mono(const UAlg<C>& A, int n, int slot, Mono m, const C& c = C(1));
  static Elem from_key(const UAlg<C>& A, int n, const Key& k, const C& c);
  static Elem E(const UAlg<C>& A, int n = 1, int slot = 0) { return mono(A, n, slot, {0, 0, 1}); }
  static Elem F(const UAlg<C>& A, int n = 1, int slot = 0) { return mono(A, n, slot, {1, 0, 0}); }
  static Elem K(const UAlg<C>& A, int n = 1, int slot = 0, int p = 1) {
    return mono(A, n, slot, {0, static_cast<int16_t>(p), 0});
  }
  /// Sorted terms, no zero coefficients.
  static Elem from_terms(const UAlg<C>& A, int n, std::vector<Term> terms);
  static Elem from_map(const UAlg<C>& A, int n, std::unordered_map<Key, C, KeyHash>&& acc);

  const UAlg<C>& alg() const { return *A_; }
  const UAlg<C>* alg_ptr() const { return A_; }
  int arity() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  /// Coefficient of the unit monomial.
  C constant_term() const;
  /// Coefficient of a given key (zero if absent).
  C coeff(const Key& k) const;

  Elem operator-() const;
  Elem& operator+=(const Elem& o);
  Elem& operator-=(const Elem& o);
  Elem& operator*=(const C& c);
  friend Elem operator+(Elem a, const Elem& b) { return a += b; }
  friend Elem operator-(Elem a, const Elem& b) { return a -= b; }
  friend Elem operator*(Elem a, const C& c) { return a *= c; }
  friend Elem operator*(const C& c, Elem a) { return a *= c; }
  friend Elem operator*(const Elem& a, const Elem& b) { return multiply(a, b); }
  Elem& operator*=(const Elem& o) { return *this = multiply(*this, o); }
  bool operator==(const Elem& o) const;
  bool operator!=(const Elem& o) const { return !(*this == o); }

  Elem pow(int k) const;
  static Elem multiply(const Elem& a, const Elem& b);

  /// Element grammar; a positive max_terms truncates with a count of the rest.
  std::string str(size_t max_terms = 0) const;
  static Elem parse(const UAlg<C>& A, const std::string& s);

 private:
  void check_compatible(const Elem& o) const;
  const UAlg<C>* A_ = nullptr;
  int n_ = 0;
  std::vector<Term> terms_;
};

template <class C>
Elem<C> commutator(const Elem<C>& a, const Elem<C>& b) {
  return a * b - b * a;
}

/// Places the slots of u (arity k) at the given positions of an arity-n tensor.
template <class C>
Elem<C> embed(const Elem<C>& u, int n, const std::vector<int>& slots);

/// Image of u under the algebra map sending slot s generators to images(s, g),
/// g in {E, F, K, Kinv}. If anti is set the map is an anti-homomorphism.
enum class Gen { E, F, K, Kinv };
template <class C>
Elem<C> apply_hom(const Elem<C>& u, int out_arity, const std::function<Elem<C>(int, Gen)>& images,
                  bool anti = false);

/// Delta: arity 1 -> arity 2.
template <class C>
Elem<C> coproduct(const Elem<C>& u);
/// Delta^{(n-1)}: arity 1 -> arity n.
template <class C>
Elem<C> coproduct_iter(const Elem<C>& u, int n);
template <class C>
Elem<C> antipode(const Elem<C>& u);
template <class C>
C counit(const Elem<C>& u);
/// Omega = qK + q^{-1}K^{-1} + (q - q^{-1})^2 FE.
template <class C>
Elem<C> casimir(const UAlg<C>& A);

/// Coefficientwise change of ring.
template <class D, class C>
Elem<D> map_coeffs(const Elem<C>& u, const UAlg<D>& B, const std::function<D(const C&)>& f) {
  std::vector<typename Elem<D>::Term> out;
  out.reserve(u.size());
  for (const auto& [k, c] : u.terms()) {
    D d = f(c);
    if (!coef_zero(d)) out.emplace_back(k, std::move(d));
  }
  return Elem<D>::from_terms(B, u.arity(), std::move(out));
}

/// Specialization v -> eps^{1/2}; throws PoleAtSpecialization naming the monomial.
Elem<Cyclotomic> specialize_elem(const Elem<RatFunc>& u, int l);
/// Specialization v -> v0.
Elem<mpq_class> specialize_point(const Elem<RatFunc>& u, long v0);

std::string mono_str(const Mono& m);
std::string key_str(const Key& k, int n);

// ------------------------------------------------------------------ Verma

class TruncationExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Laurent polynomial in the weight x with RatFunc coefficients.
using WeightPoly = std::map<int, RatFunc>;
/// A vector sum_k w_k v_k of the Verma module, entries indexed 0..N.
using VermaVec = std::vector<WeightPoly>;

/// u v_m, where K v_n = x q^{-2n} v_n, F v_n = v_{n+1} and
/// E v_n = [n] (x q^{1-n} - x^{-1} q^{n-1})/(q - q^{-1}) v_{n-1}.
VermaVec verma_action(const Elem<RatFunc>& u, int m, int N);
VermaVec verma_apply(const Elem<RatFunc>& u, const VermaVec& w);
bool verma_equal(const VermaVec& a, const VermaVec& b);

// Explicit instantiations live in uqsl2.cpp.
extern template class UAlg<RatFunc>;
extern template class UAlg<Cyclotomic>;
extern template class UAlg<mpq_class>;
extern template class Elem<RatFunc>;
extern template class Elem<Cyclotomic>;
extern template class Elem<mpq_class>;

}  // namespace qgraph
