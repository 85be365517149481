#pragma once
/// @file repv.hpp
/// @brief Finite-dimensional type-1 modules V_m, R-matrices, quantum traces,
/// and square matrices with algebra-element entries.

#include <string>
#include <vector>

#include "qgraph/uqsl2.hpp"

namespace qgraph {

/// @brief Dense matrix over a coefficient field.
template <class C>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, C(0)) {}
  static Matrix identity(int d) {
    Matrix m(d, d);
    for (int i = 0; i < d; ++i) m(i, i) = C(1);
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  C& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const C& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.c_ != y.r_) throw std::invalid_argument("matrix shape mismatch");
    Matrix z(x.r_, y.c_);
    for (int i = 0; i < x.r_; ++i)
      for (int k = 0; k < x.c_; ++k) {
        if (coef_zero(x(i, k))) continue;
        for (int j = 0; j < y.c_; ++j)
          if (!coef_zero(y(k, j))) z(i, j) += x(i, k) * y(k, j);
      }
    return z;
  }
  friend Matrix operator+(Matrix x, const Matrix& y) {
    for (size_t k = 0; k < x.a_.size(); ++k) x.a_[k] += y.a_[k];
    return x;
  }
  friend Matrix operator-(Matrix x, const Matrix& y) {
    for (size_t k = 0; k < x.a_.size(); ++k) x.a_[k] -= y.a_[k];
    return x;
  }
  friend Matrix operator*(const C& s, Matrix x) {
    for (auto& e : x.a_) e *= s;
    return x;
  }
  bool operator==(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) return false;
    for (size_t k = 0; k < a_.size(); ++k)
      if (!(a_[k] == o.a_[k])) return false;
    return true;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const {
    for (auto& e : a_)
      if (!coef_zero(e)) return false;
    return true;
  }

  /// Kronecker product x (x) y.
  friend Matrix kron(const Matrix& x, const Matrix& y) {
    Matrix z(x.r_ * y.r_, x.c_ * y.c_);
    for (int i = 0; i < x.r_; ++i)
      for (int j = 0; j < x.c_; ++j) {
        if (coef_zero(x(i, j))) continue;
        for (int k = 0; k < y.r_; ++k)
          for (int l = 0; l < y.c_; ++l) z(i * y.r_ + k, j * y.c_ + l) = x(i, j) * y(k, l);
      }
    return z;
  }

  Matrix inverse() const;
  /// Rank by exact Gaussian elimination.
  int rank() const;
  std::string str() const;

 private:
  int r_ = 0, c_ = 0;
  std::vector<C> a_;
};

/// @brief A finite weight module: generator images and K-weights (K e_j = q^{mu_j} e_j).
template <class C>
struct Module {
  int dim = 0;
  Matrix<C> E, F, K, Kinv;
  std::vector<int> weights;
};

/// V_m with basis e_0..e_{m-1}: K e_j = q^{m-1-2j} e_j, F e_j = e_{j+1}, E e_j = [j][m-j] e_{j-1}.
template <class C>
Module<C> module_V(const UAlg<C>& A, int m);
/// The module V (x) W through the coproduct.
template <class C>
Module<C> tensor_module(const UAlg<C>& A, const Module<C>& V, const Module<C>& W);
/// Image of a PBW monomial.
template <class C>
Matrix<C> represent_mono(const UAlg<C>& A, const Module<C>& V, const Mono& m);
/// (pi_1 (x) ... (x) pi_k)(u) for an arity-k element.
template <class C>
Matrix<C> represent(const Elem<C>& u, const std::vector<const Module<C>*>& mods);

/// (pi_V (x) pi_W)(R) with R = q^{H(x)H/2} sum_n (q-q^{-1})^n q^{n(n-1)/2}/[n]! E^n (x) F^n.
template <class C>
Matrix<C> r_matrix(const UAlg<C>& A, const Module<C>& V, const Module<C>& W);
/// Permutation a (x) b -> b (x) a from V (x) W to W (x) V.
template <class C>
Matrix<C> flip_matrix(int dv, int dw);

/// @brief Square matrix with entries in U_q^{(x)n}.
template <class C>
class AMat {
 public:
  AMat() = default;
  AMat(const UAlg<C>& A, int dim, int arity) : A_(&A), d_(dim), n_(arity), e_(dim * dim, Elem<C>(A, arity)) {}
  static AMat identity(const UAlg<C>& A, int dim, int arity) {
    AMat m(A, dim, arity);
    for (int i = 0; i < dim; ++i) m(i, i) = Elem<C>::one(A, arity);
    return m;
  }
  static AMat from_scalar(const UAlg<C>& A, const Matrix<C>& s, int arity) {
    AMat m(A, s.rows(), arity);
    for (int i = 0; i < s.rows(); ++i)
      for (int j = 0; j < s.cols(); ++j) m(i, j) = Elem<C>::scalar(A, arity, s(i, j));
    return m;
  }

  int dim() const { return d_; }
  int arity() const { return n_; }
  const UAlg<C>& alg() const { return *A_; }
  Elem<C>& operator()(int i, int j) { return e_[i * d_ + j]; }
  const Elem<C>& operator()(int i, int j) const { return e_[i * d_ + j]; }

  friend AMat operator*(const AMat& x, const AMat& y) {
    AMat z(*x.A_, x.d_, x.n_);
    for (int i = 0; i < x.d_; ++i)
      for (int k = 0; k < x.d_; ++k) {
        if (x(i, k).is_zero()) continue;
        for (int j = 0; j < x.d_; ++j)
          if (!y(k, j).is_zero()) z(i, j) += x(i, k) * y(k, j);
      }
    return z;
  }
  friend AMat operator*(const Matrix<C>& s, const AMat& y) {
    AMat z(*y.A_, y.d_, y.n_);
    for (int i = 0; i < y.d_; ++i)
      for (int k = 0; k < y.d_; ++k) {
        if (coef_zero(s(i, k))) continue;
        for (int j = 0; j < y.d_; ++j)
          if (!y(k, j).is_zero()) z(i, j) += y(k, j) * s(i, k);
      }
    return z;
  }
  friend AMat operator*(const AMat& x, const Matrix<C>& s) {
    AMat z(*x.A_, x.d_, x.n_);
    for (int i = 0; i < x.d_; ++i)
      for (int k = 0; k < x.d_; ++k) {
        if (x(i, k).is_zero()) continue;
        for (int j = 0; j < x.d_; ++j)
          if (!coef_zero(s(k, j))) z(i, j) += x(i, k) * s(k, j);
      }
    return z;
  }
  friend AMat operator+(AMat x, const AMat& y) {
    for (size_t k = 0; k < x.e_.size(); ++k) x.e_[k] += y.e_[k];
    return x;
  }
  friend AMat operator-(AMat x, const AMat& y) {
    for (size_t k = 0; k < x.e_.size(); ++k) x.e_[k] -= y.e_[k];
    return x;
  }
  bool is_zero() const {
    for (auto& e : e_)
      if (!e.is_zero()) return false;
    return true;
  }
  bool operator==(const AMat& o) const { return d_ == o.d_ && e_ == o.e_; }

  /// X (x) Id_w and Id_w (x) X on a product space.
  AMat kron_left(int w) const;
  AMat kron_right(int w) const;
  /// Applies f to every entry.
  AMat map(const std::function<Elem<C>(const Elem<C>&)>& f) const {
    AMat z(*A_, d_, n_);
    for (size_t k = 0; k < e_.size(); ++k) z.e_[k] = f(e_[k]);
    if (!e_.empty()) z.n_ = z.e_[0].arity();
    return z;
  }
  /// Largest residual entry printed in element grammar.
  std::string residual_witness(size_t max_terms = 6) const;
  size_t total_terms() const {
    size_t t = 0;
    for (auto& e : e_) t += e.size();
    return t;
  }

 private:
  const UAlg<C>* A_ = nullptr;
  int d_ = 0, n_ = 0;
  std::vector<Elem<C>> e_;
};

/// qTr_V(A) = Tr(pi_V(K) A).
template <class C>
Elem<C> quantum_trace(const AMat<C>& a, const Module<C>& V);

/// (pi_U (x) id)(R R') as a matrix over U_q, with no K^{1/2} appearing.
template <class C>
AMat<C> rr_prime_matrix(const UAlg<C>& A, const Module<C>& U);

extern template class Matrix<RatFunc>;
extern template class Matrix<Cyclotomic>;
extern template class Matrix<mpq_class>;
extern template class AMat<RatFunc>;
extern template class AMat<Cyclotomic>;
extern template class AMat<mpq_class>;

}  // namespace qgraph
