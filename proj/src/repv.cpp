#include "qgraph/repv.hpp"

#include <sstream>

namespace qgraph {

namespace {

RatFunc coef_inv(const RatFunc& c) { return c.inverse(); }
Cyclotomic coef_inv(const Cyclotomic& c) { return c.inverse(); }
mpq_class coef_inv(const mpq_class& c) { return mpq_class(1) / c; }

template <class C>
std::string plain_str(const C& c) {
  if constexpr (std::is_same_v<C, mpq_class>) {
    return c.get_str();
  } else {
    return c.str();
  }
}

template <class C>
Matrix<C> mat_pow(const Matrix<C>& x, int k) {
  Matrix<C> r = Matrix<C>::identity(x.rows());
  for (int i = 0; i < k; ++i) r = r * x;
  return r;
}

}  // namespace

template <class C>
Matrix<C> Matrix<C>::inverse() const {
  if (r_ != c_) throw std::invalid_argument("inverse of a non-square matrix");
  int d = r_;
  Matrix a = *this, inv = identity(d);
  for (int col = 0; col < d; ++col) {
    int piv = -1;
    for (int i = col; i < d; ++i)
      if (!coef_zero(a(i, col))) {
        piv = i;
        break;
      }
    if (piv < 0) throw std::domain_error("singular matrix");
    if (piv != col)
      for (int j = 0; j < d; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    C s = coef_inv(a(col, col));
    for (int j = 0; j < d; ++j) {
      a(col, j) *= s;
      inv(col, j) *= s;
    }
    for (int i = 0; i < d; ++i) {
      if (i == col || coef_zero(a(i, col))) continue;
      C f = a(i, col);
      for (int j = 0; j < d; ++j) {
        if (!coef_zero(a(col, j))) a(i, j) -= f * a(col, j);
        if (!coef_zero(inv(col, j))) inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

template <class C>
int Matrix<C>::rank() const {
  Matrix a = *this;
  int rank = 0;
  for (int col = 0; col < c_ && rank < r_; ++col) {
    int piv = -1;
    for (int i = rank; i < r_; ++i)
      if (!coef_zero(a(i, col))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < c_; ++j) std::swap(a(piv, j), a(rank, j));
    C s = coef_inv(a(rank, col));
    for (int i = rank + 1; i < r_; ++i) {
      if (coef_zero(a(i, col))) continue;
      C f = a(i, col) * s;
      for (int j = col; j < c_; ++j)
        if (!coef_zero(a(rank, j))) a(i, j) -= f * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

template <class C>
std::string Matrix<C>::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < r_; ++i) {
    os << (i ? "; " : "") << "[";
    for (int j = 0; j < c_; ++j) os << (j ? ", " : "") << plain_str((*this)(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

template <class C>
Module<C> module_V(const UAlg<C>& A, int m) {
  if (m < 1) throw std::invalid_argument("module dimension must be positive");
  Module<C> V;
  V.dim = m;
  V.E = Matrix<C>(m, m);
  V.F = Matrix<C>(m, m);
  V.K = Matrix<C>(m, m);
  V.Kinv = Matrix<C>(m, m);
  for (int j = 0; j < m; ++j) {
    int mu = m - 1 - 2 * j;
    V.weights.push_back(mu);
    V.K(j, j) = A.q(mu);
    V.Kinv(j, j) = A.q(-mu);
    if (j + 1 < m) V.F(j + 1, j) = C(1);
    if (j > 0) V.E(j - 1, j) = A.qint(j) * A.qint(m - j);
  }
  return V;
}

template <class C>
Module<C> tensor_module(const UAlg<C>&, const Module<C>& V, const Module<C>& W) {
  Module<C> T;
  T.dim = V.dim * W.dim;
  auto Iv = Matrix<C>::identity(V.dim), Iw = Matrix<C>::identity(W.dim);
  T.E = kron(V.E, W.K) + kron(Iv, W.E);
  T.F = kron(V.F, Iw) + kron(V.Kinv, W.F);
  T.K = kron(V.K, W.K);
  T.Kinv = kron(V.Kinv, W.Kinv);
  for (int a : V.weights)
    for (int b : W.weights) T.weights.push_back(a + b);
  return T;
}

template <class C>
Matrix<C> represent_mono(const UAlg<C>&, const Module<C>& V, const Mono& m) {
  Matrix<C> k = m.b >= 0 ? mat_pow(V.K, m.b) : mat_pow(V.Kinv, -m.b);
  return mat_pow(V.F, m.a) * k * mat_pow(V.E, m.c);
}

template <class C>
Matrix<C> represent(const Elem<C>& u, const std::vector<const Module<C>*>& mods) {
  if (static_cast<int>(mods.size()) != u.arity()) throw std::invalid_argument("one module per slot required");
  int d = 1;
  for (auto* M : mods) d *= M->dim;
  Matrix<C> out(d, d);
  for (const auto& [k, c] : u.terms()) {
    Matrix<C> t = represent_mono(u.alg(), *mods[0], k.m[0]);
    for (size_t s = 1; s < mods.size(); ++s) t = kron(t, represent_mono(u.alg(), *mods[s], k.m[s]));
    out = out + c * t;
  }
  return out;
}

template <class C>
Matrix<C> r_matrix(const UAlg<C>& A, const Module<C>& V, const Module<C>& W) {
  int d = V.dim * W.dim;
  Matrix<C> sum(d, d);
  Matrix<C> En = Matrix<C>::identity(V.dim), Fn = Matrix<C>::identity(W.dim);
  for (int n = 0; n < std::min(V.dim, W.dim); ++n) {
    if (En.is_zero() || Fn.is_zero()) break;
    C alpha = A.qdiff();
    C a = C(1);
    for (int k = 0; k < n; ++k) a *= alpha;
    a = a * A.q(static_cast<long>(n) * (n - 1) / 2) * coef_inv(A.qfactorial(n));
    sum = sum + a * kron(En, Fn);
    En = En * V.E;
    Fn = Fn * W.F;
  }
  Matrix<C> theta(d, d);
  for (int i = 0; i < V.dim; ++i)
    for (int j = 0; j < W.dim; ++j)
      theta(i * W.dim + j, i * W.dim + j) = A.v(static_cast<long>(V.weights[i]) * W.weights[j]);
  return theta * sum;
}

template <class C>
Matrix<C> flip_matrix(int dv, int dw) {
  Matrix<C> P(dv * dw, dv * dw);
  for (int i = 0; i < dv; ++i)
    for (int j = 0; j < dw; ++j) P(j * dv + i, i * dw + j) = C(1);
  return P;
}

template <class C>
AMat<C> AMat<C>::kron_left(int w) const {
  AMat z(*A_, d_ * w, n_);
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j)
      for (int t = 0; t < w; ++t) z(i * w + t, j * w + t) = (*this)(i, j);
  return z;
}

template <class C>
AMat<C> AMat<C>::kron_right(int w) const {
  AMat z(*A_, d_ * w, n_);
  for (int t = 0; t < w; ++t)
    for (int i = 0; i < d_; ++i)
      for (int j = 0; j < d_; ++j) z(t * d_ + i, t * d_ + j) = (*this)(i, j);
  return z;
}

template <class C>
std::string AMat<C>::residual_witness(size_t max_terms) const {
  int bi = -1, bj = -1;
  size_t best = 0;
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j)
      if ((*this)(i, j).size() > best) {
        best = (*this)(i, j).size();
        bi = i;
        bj = j;
      }
  if (bi < 0) return "";
  return "entry (" + std::to_string(bi + 1) + "," + std::to_string(bj + 1) + "): " + (*this)(bi, bj).str(max_terms);
}

template <class C>
Elem<C> quantum_trace(const AMat<C>& a, const Module<C>& V) {
  Elem<C> r(a.alg(), a.arity());
  for (int i = 0; i < V.dim; ++i) r += a(i, i) * a.alg().q(V.weights[i]);
  return r;
}

template <class C>
AMat<C> rr_prime_matrix(const UAlg<C>& A, const Module<C>& U) {
  int d = U.dim;
  AMat<C> out(A, d, 1);
  std::vector<Matrix<C>> Ep{Matrix<C>::identity(d)}, Fp{Matrix<C>::identity(d)};
  std::vector<C> alpha;
  for (int n = 0; n < d; ++n) {
    if (n > 0) {
      Ep.push_back(Ep.back() * U.E);
      Fp.push_back(Fp.back() * U.F);
    }
    C a = C(1);
    for (int k = 0; k < n; ++k) a *= A.qdiff();
    alpha.push_back(a * A.q(static_cast<long>(n) * (n - 1) / 2) * coef_inv(A.qfactorial(n)));
  }
  // (i,k) += alpha_n alpha_m (E^n)_{ij} (F^m)_{jk} q^{-mu_i n} F^n K^{mu_i - n} E^m
  for (int i = 0; i < d; ++i)
    for (int n = 0; n < d; ++n)
      for (int j = 0; j < d; ++j) {
        if (coef_zero(Ep[n](i, j))) continue;
        int mu = U.weights[i];
        if (U.weights[j] != mu - 2 * n) throw std::logic_error("module basis is not a weight basis");
        for (int m = 0; m < d; ++m)
          for (int k = 0; k < d; ++k) {
            if (coef_zero(Fp[m](j, k))) continue;
            C c = alpha[n] * alpha[m] * Ep[n](i, j) * Fp[m](j, k) * A.q(-static_cast<long>(mu) * n);
            Mono mo{static_cast<int16_t>(n), static_cast<int16_t>(mu - n), static_cast<int16_t>(m)};
            out(i, k) += Elem<C>::mono(A, 1, 0, mo, c);
          }
      }
  return out;
}

#define QG_REPV_INST(C)                                                                  \
  template class Matrix<C>;                                                              \
  template class AMat<C>;                                                                \
  template Module<C> module_V(const UAlg<C>&, int);                                      \
  template Module<C> tensor_module(const UAlg<C>&, const Module<C>&, const Module<C>&);  \
  template Matrix<C> represent_mono(const UAlg<C>&, const Module<C>&, const Mono&);      \
  template Matrix<C> represent(const Elem<C>&, const std::vector<const Module<C>*>&);    \
  template Matrix<C> r_matrix(const UAlg<C>&, const Module<C>&, const Module<C>&);       \
  template Matrix<C> flip_matrix<C>(int, int);                                           \
  template Elem<C> quantum_trace(const AMat<C>&, const Module<C>&);                      \
  template AMat<C> rr_prime_matrix(const UAlg<C>&, const Module<C>&);

QG_REPV_INST(RatFunc)
QG_REPV_INST(Cyclotomic)
QG_REPV_INST(mpq_class)

}  // namespace qgraph
