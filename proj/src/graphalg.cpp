#include "qgraph/graphalg.hpp"

#include <map>
#include <mutex>
#include <random>
#include <tuple>

namespace qgraph {

template <class C>
GenQuad<C> phi1_generators(const UAlg<C>& A) {
  using El = Elem<C>;
  El E = El::E(A), F = El::F(A), K = El::K(A), Ki = El::K(A, 1, 0, -1);
  C c = A.qdiff();
  return {K + F * E * (A.q(-1) * c * c), F * (A.q(-1) * c), Ki * E * c, Ki};
}

namespace {

/// K^{s/2} y K^{-s/2} at one slot: multiplies F^a K^b E^c there by q^{s(c-a)}.
template <class C>
Elem<C> ad_half(const Elem<C>& y, int slot, int sign) {
  std::vector<typename Elem<C>::Term> out;
  out.reserve(y.size());
  for (const auto& [k, c] : y.terms()) {
    int w = k.m[slot].c - k.m[slot].a;
    out.emplace_back(k, w == 0 ? c : c * y.alg().q(sign * w));
  }
  return Elem<C>::from_terms(y.alg(), y.arity(), std::move(out));
}

}  // namespace

template <class C>
AMat<C> conjugate_R(const AMat<C>& X, int s) {
  if (X.dim() != 2) throw std::invalid_argument("conjugate_R expects a 2x2 matrix");
  const UAlg<C>& A = X.alg();
  int n = X.arity();
  using El = Elem<C>;
  El F = El::F(A, n, s), K = El::K(A, n, s), Ki = El::K(A, n, s, -1);
  C c = A.qdiff();
  // R_{0s} = [[k, c k F], [0, k^-1]] with k = K^{1/2} at slot s; entries may have legs at s.
  El u = ad_half(X(0, 0), s, 1), v = ad_half(X(0, 1), s, 1), w = ad_half(X(1, 0), s, 1), x = ad_half(X(1, 1), s, 1);
  El wi = ad_half(X(1, 0), s, -1), xi = ad_half(X(1, 1), s, -1);
  AMat<C> Y(A, 2, n);
  Y(0, 0) = u + F * w * (A.q(-1) * c);
  Y(1, 0) = wi * Ki;
  Y(1, 1) = xi - wi * F * (A.q(1) * c);
  Y(0, 1) = v * K - u * K * F * (A.q(1) * c) - F * w * K * F * (c * c) + F * x * K * (A.q(-1) * c);
  return Y;
}

template <class C>
AMat<C> conjugate_R_factor(const AMat<C>& X, int factor, int k, int s) {
  int D = X.dim();
  if (D != (1 << k) || factor < 0 || factor >= k) throw std::invalid_argument("bad tensor factor");
  int bit = 1 << (k - 1 - factor);
  AMat<C> Y(X.alg(), D, X.arity());
  for (int r = 0; r < D; ++r) {
    if (r & bit) continue;
    for (int t = 0; t < D; ++t) {
      if (t & bit) continue;
      AMat<C> blk(X.alg(), 2, X.arity());
      for (int al = 0; al < 2; ++al)
        for (int be = 0; be < 2; ++be) blk(al, be) = X(r | (al ? bit : 0), t | (be ? bit : 0));
      blk = conjugate_R(blk, s);
      for (int al = 0; al < 2; ++al)
        for (int be = 0; be < 2; ++be) Y(r | (al ? bit : 0), t | (be ? bit : 0)) = blk(al, be);
    }
  }
  return Y;
}

namespace {

template <class C>
AMat<C> embed_mat(const AMat<C>& m, int n, int slot) {
  return m.map([&](const Elem<C>& e) { return embed(e, n, {slot}); });
}

template <class C>
AMat<C> compute_gen_matrix(const UAlg<C>& A, int n, int a) {
  auto g = phi1_generators(A);
  AMat<C> M(A, 2, n);
  M(0, 0) = embed(g.a, n, {a - 1});
  M(0, 1) = embed(g.b, n, {a - 1});
  M(1, 0) = embed(g.c, n, {a - 1});
  M(1, 1) = embed(g.d, n, {a - 1});
  for (int j = a + 1; j <= n; ++j) M = conjugate_R(M, j - 1);
  return M;
}

}  // namespace

template <class C>
const AMat<C>& gen_matrix(const UAlg<C>& A, int n, int a) {
  if (n < 1 || n > kMaxSlots || a < 1 || a > n) throw std::out_of_range("site index out of range");
  static std::mutex mu;
  static std::map<std::tuple<const void*, int, int>, std::unique_ptr<AMat<C>>> cache;
  auto key = std::make_tuple(static_cast<const void*>(&A), n, a);
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto fresh = std::make_unique<AMat<C>>(compute_gen_matrix(A, n, a));
  std::lock_guard<std::mutex> lk(mu);
  auto [it, inserted] = cache.emplace(key, std::move(fresh));
  return *it->second;
}

template <class C>
AMat<C> fused_matrix(const UAlg<C>& A, int n, int a) {
  auto V = module_V(A, 2);
  AMat<C> M = embed_mat(rr_prime_matrix(A, tensor_module(A, V, V)), n, a - 1);
  // (Delta (x) id)(R) = R_{1j} R_{2j}: conjugate by the second factor first.
  for (int j = a + 1; j <= n; ++j) {
    M = conjugate_R_factor(M, 1, 2, j - 1);
    M = conjugate_R_factor(M, 0, 2, j - 1);
  }
  return M;
}

template <class C>
AMat<C> product_matrix(const UAlg<C>& A, int n, int i, int j) {
  AMat<C> P = gen_matrix(A, n, i);
  for (int k = i + 1; k <= j; ++k) P = P * gen_matrix(A, n, k);
  return P;
}

template <class C>
Elem<C> omega(const UAlg<C>& A, int n, int i) {
  return quantum_trace(gen_matrix(A, n, i), module_V(A, 2));
}

template <class C>
Elem<C> eta(const UAlg<C>& A, int n) {
  return quantum_trace(product_matrix(A, n, 1, n), module_V(A, 2));
}

template <class C>
Elem<C> xi(const UAlg<C>& A, int n, int i) {
  if (i == n + 1) return Elem<C>::one(A, n);
  return product_matrix(A, n, i, n)(1, 1);
}

namespace {

/// Inverse of a single monomial c K^{b_1} (x) ... (x) K^{b_n}.
template <class C>
Elem<C> invert_toral(const Elem<C>& u) {
  if (u.size() != 1) throw std::domain_error("not an invertible toral monomial: " + u.str(4));
  auto [k, c] = u.terms()[0];
  Key inv;
  for (int s = 0; s < kMaxSlots; ++s) {
    if (k.m[s].a != 0 || k.m[s].c != 0) throw std::domain_error("not an invertible toral monomial: " + u.str(4));
    inv.m[s].b = static_cast<int16_t>(-k.m[s].b);
  }
  C ci;
  if constexpr (std::is_same_v<C, mpq_class>) {
    ci = mpq_class(1) / c;
  } else {
    ci = c.inverse();
  }
  return Elem<C>::from_key(u.alg(), u.arity(), inv, ci);
}

}  // namespace

template <class C>
Elem<C> delta(const UAlg<C>& A, int n, int i, int power) {
  Elem<C> d = xi(A, n, i) * invert_toral(xi(A, n, i + 1));
  if (power >= 0) return d.pow(power);
  return invert_toral(d).pow(-power);
}

template <class C>
Matrix<C> tl_element(const UAlg<C>& A) {
  Matrix<C> U(4, 4);
  U(1, 1) = A.q(1);
  U(1, 2) = C(-1);
  U(2, 1) = C(-1);
  U(2, 2) = A.q(-1);
  return U;
}

namespace {

/// Id_{before} (x) m (x) Id_{after} over a product of module dimensions.
template <class C>
AMat<C> embed_factor(const AMat<C>& m, const std::vector<int>& dims, int k) {
  int before = 1, after = 1;
  for (int t = 0; t < k; ++t) before *= dims[t];
  for (size_t t = k + 1; t < dims.size(); ++t) after *= dims[t];
  return m.kron_left(after).kron_right(before);
}

template <class C>
Matrix<C> embed_scalar_factor(const Matrix<C>& m, int before) {
  return kron(Matrix<C>::identity(before), m);
}

template <class C>
Module<C> tensor_range(const UAlg<C>& A, const std::vector<Module<C>>& mods, int from, int to) {
  Module<C> T = mods[from];
  for (int t = from + 1; t < to; ++t) T = tensor_module(A, T, mods[t]);
  return T;
}

}  // namespace

template <class C>
AMat<C> lambda_matrix(const UAlg<C>& A, int n, const std::vector<int>& lambda) {
  if (static_cast<int>(lambda.size()) != n) throw std::invalid_argument("one color per site required");
  std::vector<Module<C>> mods;
  std::vector<int> dims;
  for (int c : lambda) {
    if (c != 1 && c != 2) throw std::invalid_argument("colors must be 1 or 2");
    mods.push_back(module_V(A, c));
    dims.push_back(c);
  }
  auto site = [&](int k) {
    if (lambda[k] == 1) return AMat<C>::identity(A, 1, n);
    return gen_matrix(A, n, k + 1);
  };
  // S(k) = Id (x) R_{V_{k-1}, V_k (x) ... (x) V_n}
  std::vector<Matrix<C>> S(n + 1), Sinv(n + 1);
  int before = 1;
  for (int k = 2; k <= n; ++k) {
    Module<C> tail = tensor_range(A, mods, k - 1, n);
    S[k] = embed_scalar_factor(r_matrix(A, mods[k - 2], tail), before);
    Sinv[k] = S[k].inverse();
    before *= dims[k - 2];
  }
  AMat<C> out = embed_factor(site(0), dims, 0);
  for (int k = 2; k <= n; ++k) out = out * Sinv[k] * embed_factor(site(k - 1), dims, k - 1);
  for (int k = n; k >= 2; --k) out = out * S[k];
  return out;
}

template <class C>
Elem<C> invariant_element(const UAlg<C>& A, int n, const std::vector<int>& lambda, const Matrix<C>* a) {
  std::vector<Module<C>> mods;
  for (int c : lambda) mods.push_back(module_V(A, c));
  Module<C> T = tensor_range(A, mods, 0, n);
  AMat<C> L = lambda_matrix(A, n, lambda);
  if (a != nullptr) {
    if (a->rows() != T.dim || a->cols() != T.dim) throw NotAnIntertwiner("coupon has the wrong size");
    if (*a * T.E != T.E * *a || *a * T.F != T.F * *a || *a * T.K != T.K * *a)
      throw NotAnIntertwiner("coupon does not commute with the module action");
    L = *a * L;
  }
  return quantum_trace(L, T);
}

// ------------------------------------------------------------------ rank

RankResult phi1_monomial_rank(int max_degree, int truncation) {
  const auto& A = generic_alg();
  auto g = phi1_generators(A);
  std::vector<Elem<RatFunc>> imgs;
  for (int x = 0; x <= max_degree; ++x)
    for (int y = 0; x + y <= max_degree; ++y)
      for (int z = 0; x + y + z <= max_degree; ++z) {
        Elem<RatFunc> bc = g.b.pow(y) * g.c.pow(z);
        if (x >= 1) imgs.push_back(g.a.pow(x) * bc);
        imgs.push_back(g.d.pow(x) * bc);  // x plays the role of the d-exponent here
      }
  std::map<std::tuple<int, int, int>, int> rows;
  std::vector<std::map<std::tuple<int, int, int>, RatFunc>> cols;
  for (const auto& u : imgs) {
    std::map<std::tuple<int, int, int>, RatFunc> col;
    for (int m = 0; m + max_degree <= truncation; ++m) {
      VermaVec v = verma_action(u, m, truncation);
      for (int j = 0; j <= truncation; ++j)
        for (const auto& [e, c] : v[j]) {
          auto key = std::make_tuple(m, j, e);
          rows.emplace(key, 0);
          col[key] = c;
        }
    }
    cols.push_back(std::move(col));
  }
  int r = 0;
  for (auto& [k, idx] : rows) idx = r++;
  Matrix<RatFunc> mat(static_cast<int>(cols.size()), r);
  for (size_t i = 0; i < cols.size(); ++i)
    for (const auto& [k, c] : cols[i]) mat(static_cast<int>(i), rows[k]) = c;
  return {static_cast<int>(imgs.size()), mat.rank()};
}

// ---------------------------------------------------------------- suites

namespace {

using El = Elem<RatFunc>;
using AM = AMat<RatFunc>;

const UAlg<RatFunc>& G() { return generic_alg(); }
RatFunc qq(int k) { return RatFunc::q(k); }

CheckResult zero_elem(const El& r) {
  return CheckResult::expect(r.is_zero(), [&] { return r.str(8); });
}
CheckResult zero_mat(const AM& r) {
  return CheckResult::expect(r.is_zero(), [&] { return r.residual_witness(8); });
}

Inputs in_n(int n) { return {{"n", std::to_string(n)}}; }
Inputs in_site(int n, int a) { return {{"n", std::to_string(n)}, {"site", std::to_string(a)}}; }

std::string sup(const char* name, int a) { return std::string(name) + "^(" + std::to_string(a) + ")"; }

El random_elem(std::mt19937& rng) {
  std::uniform_int_distribution<int> co(-3, 3), ex(-2, 2), len(0, 3), letter(0, 3);
  El r(G(), 1);
  for (int t = 0; t < 3; ++t) {
    El w = El::one(G(), 1);
    int L = len(rng);
    for (int i = 0; i < L; ++i) {
      int x = letter(rng);
      w *= x == 0 ? El::E(G()) : x == 1 ? El::F(G()) : El::K(G(), 1, 0, x == 2 ? 1 : -1);
    }
    r += w * RatFunc(LaurentPoly::monomial(co(rng), ex(rng)));
  }
  return r;
}

RatFunc random_ratfunc(std::mt19937& rng) {
  std::uniform_int_distribution<int> co(-4, 4), ex(-3, 3);
  LaurentPoly num, den;
  for (int i = 0; i < 3; ++i) num += LaurentPoly::monomial(co(rng), ex(rng));
  for (int i = 0; i < 2; ++i) den += LaurentPoly::monomial(co(rng), ex(rng));
  if (den.is_zero()) den = LaurentPoly(1);
  return RatFunc(num, den);
}

/// Undoes R_{0,s} conjugation given K^{+-1} and F at slot s as elements.
AM unconjugate_R(const AM& Y, const El& K, const El& Ki, const El& F) {
  RatFunc c = qq(1) - qq(-1);
  AM X(G(), 2, Y.arity());
  El w = Y(1, 0) * K;
  El u = Y(0, 0) - w * F * (qq(-1) * c);
  El x = Y(1, 1) + w * F * (qq(1) * c);
  El KF = K * F;
  X(0, 1) = (Y(0, 1) + u * KF * (qq(1) * c) + w * KF * F * (qq(2) * c * c) - x * KF * (qq(1) * c)) * Ki;
  X(0, 0) = u;
  X(1, 0) = w;
  X(1, 1) = x;
  return X;
}

/// Phi_1 at slot i, rebuilt from M^{(i)} using delta^{(j)} images and F^{(j)} for j > i,
/// where F^{(j)} itself comes from the rebuilt site-j matrix.
AM recover_site(int n, int i) {
  AM X = gen_matrix(G(), n, i);
  RatFunc c = qq(1) - qq(-1);
  for (int j = n; j > i; --j) {
    El F = recover_site(n, j)(0, 1) * (qq(1) / c);
    X = unconjugate_R(X, delta(G(), n, j, -1), delta(G(), n, j, 1), F);
  }
  return X;
}

}  // namespace

std::vector<Task> presentation_suite(int n) {
  std::vector<Task> tasks;
  const RatFunc t = RatFunc(1) - qq(-2);
  struct Rel {
    const char* name;
    const char* statement;
    std::function<El(const GenQuad<RatFunc>&)> residual;
  };
  const std::vector<Rel> local = {
      {"ad", "a d = d a", [](const auto& g) { return g.a * g.d - g.d * g.a; }},
      {"ab", "a b - b a = -(1 - q^-2) b d", [t](const auto& g) { return g.a * g.b - g.b * g.a + g.b * g.d * t; }},
      {"db", "d b = q^2 b d", [](const auto& g) { return g.d * g.b - g.b * g.d * qq(2); }},
      {"cb", "c b - b c = (1 - q^-2)(d a - d^2)",
       [t](const auto& g) { return g.c * g.b - g.b * g.c - (g.d * g.a - g.d * g.d) * t; }},
      {"cd", "c d = q^2 d c", [](const auto& g) { return g.c * g.d - g.d * g.c * qq(2); }},
      {"ac", "a c - c a = (1 - q^-2) d c", [t](const auto& g) { return g.a * g.c - g.c * g.a - g.d * g.c * t; }},
      {"det", "a d - q^2 b c = 1",
       [](const auto& g) { return g.a * g.d - g.b * g.c * qq(2) - El::one(g.a.alg(), g.a.arity()); }},
  };
  for (int a = 1; a <= n; ++a)
    for (const auto& rel : local)
      tasks.push_back({"presentation.local." + std::string(rel.name) + ".site" + std::to_string(a), rel.statement,
                       in_site(n, a), [n, a, rel] { return zero_elem(rel.residual(site_generators(G(), n, a))); }});

  for (int a = 1; a <= n; ++a) {
    tasks.push_back({"presentation.reflection.site" + std::to_string(a), "R M_1 R' M_2 = M_2 R M_1 R' on V_2 (x) V_2",
                     in_site(n, a), [n, a] {
                       auto V = module_V(G(), 2);
                       auto R = r_matrix(G(), V, V);
                       auto P = flip_matrix<RatFunc>(2, 2);
                       auto Rp = P * R * P;
                       const AM& M = gen_matrix(G(), n, a);
                       AM M1 = M.kron_left(2), M2 = M.kron_right(2);
                       return zero_mat(R * M1 * Rp * M2 - M2 * R * M1 * Rp);
                     }});
    tasks.push_back({"presentation.fusion.site" + std::to_string(a),
                     "M^(V_2 (x) V_2) = M_1 R' M_2 R'^-1 at one site", in_site(n, a), [n, a] {
                       auto V = module_V(G(), 2);
                       auto P = flip_matrix<RatFunc>(2, 2);
                       auto Rp = P * r_matrix(G(), V, V) * P;
                       const AM& M = gen_matrix(G(), n, a);
                       AM rhs = M.kron_left(2) * Rp * M.kron_right(2) * Rp.inverse();
                       return zero_mat(fused_matrix(G(), n, a) - rhs);
                     }});
  }
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      tasks.push_back({"presentation.exchange." + std::to_string(a) + "-" + std::to_string(b),
                       "R M_1^(a) R^-1 M_2^(b) = M_2^(b) R M_1^(a) R^-1",
                       {{"n", std::to_string(n)}, {"a", std::to_string(a)}, {"b", std::to_string(b)}}, [n, a, b] {
                         auto V = module_V(G(), 2);
                         auto R = r_matrix(G(), V, V);
                         auto Ri = R.inverse();
                         AM M1 = gen_matrix(G(), n, a).kron_left(2);
                         AM M2 = gen_matrix(G(), n, b).kron_right(2);
                         return zero_mat(R * M1 * Ri * M2 - M2 * R * M1 * Ri);
                       }});

  if (n == 2) {
    const RatFunc tp = RatFunc(1) - qq(2);
    struct Rel2 {
      const char* name;
      const char* statement;
      std::function<El(const GenQuad<RatFunc>&, const GenQuad<RatFunc>&, const El&)> residual;
    };
    const std::vector<Rel2> rels = {
        {"c1d2", "c^(1) d^(2) = d^(2) c^(1)", [](const auto& g, const auto& h, const El&) { return commutator(g.c, h.d); }},
        {"d2a1", "d^(2) a^(1) = a^(1) d^(2) + (1 - q^-2) c^(1) b^(2)",
         [t](const auto& g, const auto& h, const El&) { return h.d * g.a - g.a * h.d - g.c * h.b * t; }},
        {"d2d1", "d^(2) d^(1) = d^(1) d^(2) + (1 - q^2) c^(1) b^(2)",
         [tp](const auto& g, const auto& h, const El&) { return h.d * g.d - g.d * h.d - g.c * h.b * tp; }},
        {"d2b1", "d^(2) b^(1) = b^(1) d^(2) + (1 - q^2)(a^(1) - d^(1)) b^(2)",
         [tp](const auto& g, const auto& h, const El&) { return h.d * g.b - g.b * h.d - (g.a - g.d) * h.b * tp; }},
        {"xi2inv.unit", "xi^(2) xi^(2)^-1 = xi^(2)^-1 xi^(2) = 1",
         [](const auto&, const auto& h, const El& x) {
           return (h.d * x - El::one(G(), 2)) + (x * h.d - El::one(G(), 2));
         }},
        {"xi2inv.c1", "xi^(2)^-1 c^(1) = c^(1) xi^(2)^-1",
         [](const auto& g, const auto&, const El& x) { return commutator(x, g.c); }},
        {"xi2inv.a1", "xi^(2)^-1 a^(1) = a^(1) xi^(2)^-1 - q^-2 (1 - q^-2) c^(1) b^(2) xi^(2)^-2",
         [t](const auto& g, const auto& h, const El& x) {
           return x * g.a - g.a * x + g.c * h.b * x * x * (qq(-2) * t);
         }},
        {"xi2inv.d1", "xi^(2)^-1 d^(1) = d^(1) xi^(2)^-1 - q^-2 (1 - q^2) c^(1) b^(2) xi^(2)^-2",
         [tp](const auto& g, const auto& h, const El& x) {
           return x * g.d - g.d * x + g.c * h.b * x * x * (qq(-2) * tp);
         }},
        {"xi2inv.b1",
         "xi^(2)^-1 b^(1) = b^(1) xi^(2)^-1 + (1 - q^-2)(a^(1) - d^(1)) b^(2) xi^(2)^-2 + q^-4 (1 - q^2)(1 - q^-4) "
         "c^(1) b^(2)^2 xi^(2)^-3",
         [t, tp](const auto& g, const auto& h, const El& x) {
           RatFunc t4 = RatFunc(1) - qq(-4);
           return x * g.b - g.b * x - (g.a - g.d) * h.b * x * x * t - g.c * h.b * h.b * x * x * x * (qq(-4) * tp * t4);
         }},
    };
    for (const auto& rel : rels)
      tasks.push_back({"presentation.n2." + std::string(rel.name), rel.statement, in_n(2), [rel] {
                         auto g = site_generators(G(), 2, 1), h = site_generators(G(), 2, 2);
                         El xinv = delta(G(), 2, 2, -1);
                         return zero_elem(rel.residual(g, h, xinv));
                       }});
  }

  tasks.push_back({"presentation.oracle.verma_product",
                   "u_v(a b) = u_v(a) u_v(b) on Verma modules for 100 seeded random pairs",
                   {{"seed", "20240501"}, {"pairs", "100"}, {"truncation", "10"}}, [] {
                     std::mt19937 rng(20240501);
                     std::uniform_int_distribution<int> idx(0, 4);
                     for (int k = 0; k < 100; ++k) {
                       El a = random_elem(rng), b = random_elem(rng);
                       int m = idx(rng);
                       VermaVec lhs = verma_action(a * b, m, 10);
                       VermaVec rhs = verma_apply(a, verma_action(b, m, 10));
                       if (!verma_equal(lhs, rhs))
                         return CheckResult::fail("pair " + std::to_string(k) + ": a = " + a.str(4) + ", b = " + b.str(4));
                     }
                     return CheckResult::pass();
                   }});
  tasks.push_back({"presentation.oracle.specialize_product",
                   "specialize(f g) = specialize(f) specialize(g) at v = eps^(1/2), l = 3, 5, for 100 seeded random pairs",
                   {{"seed", "20240502"}, {"pairs", "100"}}, [] {
                     std::mt19937 rng(20240502);
                     int checked = 0;
                     for (int k = 0; k < 100; ++k) {
                       int l = k % 2 ? 5 : 3;
                       RatFunc f = random_ratfunc(rng), g = random_ratfunc(rng);
                       try {
                         Cyclotomic sf = specialize_at_root(f, l), sg = specialize_at_root(g, l);
                         if (specialize_at_root(f * g, l) != sf * sg)
                           return CheckResult::fail("f = " + f.str() + ", g = " + g.str());
                         ++checked;
                       } catch (const PoleAtSpecialization&) {
                       }
                     }
                     if (checked < 90) return CheckResult::fail("too many poles: " + std::to_string(checked));
                     return CheckResult::pass();
                   }});
  return tasks;
}

std::vector<Task> alekseev_suite(int n, int max_degree) {
  std::vector<Task> tasks;
  tasks.push_back({"alekseev.phi1.omega", "q a + q^-1 d = Omega under Phi_1", in_n(1), [] {
                     auto g = phi1_generators(G());
                     return zero_elem(g.a * qq(1) + g.d * qq(-1) - casimir(G()));
                   }});
  tasks.push_back({"alekseev.phi1.rr_prime", "(pi_V2 (x) id)(R R') = Phi_1(M)", in_n(1), [] {
                     return zero_mat(rr_prime_matrix(G(), module_V(G(), 2)) - gen_matrix(G(), 1, 1));
                   }});
  tasks.push_back({"alekseev.product_coproduct", "M^(1) ... M^(n) = (pi_V2 (x) Delta^(n-1))(R R')", in_n(n), [n] {
                     AM lhs = product_matrix(G(), n, 1, n);
                     AM rhs = rr_prime_matrix(G(), module_V(G(), 2)).map([n](const El& e) { return coproduct_iter(e, n); });
                     return zero_mat(lhs - rhs);
                   }});
  if (n >= 2)
    tasks.push_back({"alekseev.c1_two_sites", "Phi_2(c^(1)) = (q - q^-1) K^-1 E (x) K^-1", in_n(2), [] {
                       El expect = embed(El::K(G(), 1, 0, -1) * El::E(G()) * (qq(1) - qq(-1)), 2, {0}) *
                                   El::K(G(), 2, 1, -1);
                       return zero_elem(gen_matrix(G(), 2, 1)(1, 0) - expect);
                     }});
  for (int i = 1; i <= n; ++i) {
    tasks.push_back({"alekseev.xi.value.site" + std::to_string(i), "Phi_n(xi^(i)) = K^-1 at sites i..n", in_site(n, i),
                     [n, i] {
                       El expect = El::one(G(), n);
                       for (int s = i; s <= n; ++s) expect *= El::K(G(), n, s - 1, -1);
                       return zero_elem(xi(G(), n, i) - expect);
                     }});
    tasks.push_back({"alekseev.delta.value.site" + std::to_string(i), "Phi_n(delta^(i)) = (K^-1)^(i)", in_site(n, i),
                     [n, i] { return zero_elem(delta(G(), n, i) - El::K(G(), n, i - 1, -1)); }});
    for (int j = i + 1; j <= n; ++j)
      tasks.push_back({"alekseev.xi.commute." + std::to_string(i) + "-" + std::to_string(j), "xi^(i) xi^(j) = xi^(j) xi^(i)",
                       {{"n", std::to_string(n)}, {"i", std::to_string(i)}, {"j", std::to_string(j)}},
                       [n, i, j] { return zero_elem(commutator(xi(G(), n, i), xi(G(), n, j))); }});
  }
  auto all_gens = [](int n) {
    std::vector<std::pair<std::string, El>> out;
    for (int a = 1; a <= n; ++a) {
      auto g = site_generators(G(), n, a);
      out.push_back({sup("a", a), g.a});
      out.push_back({sup("b", a), g.b});
      out.push_back({sup("c", a), g.c});
      out.push_back({sup("d", a), g.d});
    }
    return out;
  };
  auto central = [all_gens](int n, const El& z) {
    for (const auto& [name, g] : all_gens(n)) {
      El r = commutator(z, g);
      if (!r.is_zero()) return CheckResult::fail("[z, " + name + "] = " + r.str(8));
    }
    return CheckResult::pass();
  };
  for (int i = 1; i <= n; ++i)
    tasks.push_back({"alekseev.center.omega.site" + std::to_string(i), "[omega^(i), g] = 0 for all 4n generators",
                     in_site(n, i), [n, i, central] { return central(n, omega(G(), n, i)); }});
  if (n == 1) {
    tasks.push_back({"alekseev.center.eta", "[eta, g] = 0 for all 4n generators", in_n(n),
                     [n, central] { return central(n, eta(G(), n)); }});
  } else {
    tasks.push_back({"alekseev.center.eta_invariant",
                     "eta commutes with omega^(i), with the entries of M^(1)...M^(n) and with qTr(M^[(2,...,2)])",
                     in_n(n), [n] {
                       El z = eta(G(), n);
                       std::vector<std::pair<std::string, El>> others;
                       for (int i = 1; i <= n; ++i) others.push_back({sup("omega", i), omega(G(), n, i)});
                       AM P = product_matrix(G(), n, 1, n);
                       for (int r = 0; r < 2; ++r)
                         for (int t = 0; t < 2; ++t)
                           others.push_back({"(M^(1)...M^(n))_" + std::to_string(r + 1) + std::to_string(t + 1), P(r, t)});
                       others.push_back({"qTr(M^[lambda])", invariant_element(G(), n, std::vector<int>(n, 2))});
                       for (const auto& [name, y] : others) {
                         El r = commutator(z, y);
                         if (!r.is_zero()) return CheckResult::fail("[eta, " + name + "] = " + r.str(8));
                       }
                       return CheckResult::pass();
                     }});
    tasks.push_back({"alekseev.center.eta_not_central",
                     "[eta, a^(1)] != 0: for n >= 2 the center of L_{0,n} is generated by the omega^(i) alone", in_n(n),
                     [n] {
                       El r = commutator(eta(G(), n), site_generators(G(), n, 1).a);
                       return CheckResult::expect(!r.is_zero(), [] { return std::string("eta commutes with a^(1)"); });
                     }});
  }

  tasks.push_back({"alekseev.injectivity.rank",
                   "Phi_1 images of a^x b^y c^z (x >= 1) and d^w b^y c^z are linearly independent (Verma, symbolic weight)",
                   {{"max_degree", std::to_string(max_degree)}, {"truncation", "10"}}, [max_degree] {
                     RankResult r = phi1_monomial_rank(max_degree, 10);
                     return CheckResult::expect(r.rank == r.monomials, [&] {
                       return "rank " + std::to_string(r.rank) + " < " + std::to_string(r.monomials) + " monomials";
                     });
                   }});

  for (int i = 1; i <= n; ++i)
    tasks.push_back({"alekseev.surjectivity.site" + std::to_string(i),
                     "E^(i), F^(i), K^(i) are reached from the generators and delta^(j)^(+-1)", in_site(n, i), [n, i] {
                       AM X = recover_site(n, i);
                       RatFunc c = qq(1) - qq(-1);
                       El K = delta(G(), n, i, -1);
                       El E = K * X(1, 0) * c.inverse();
                       El F = X(0, 1) * (qq(1) / c);
                       return zero_elem((E - El::E(G(), n, i - 1)) + (F - El::F(G(), n, i - 1)) +
                                        (K - El::K(G(), n, i - 1)));
                     }});

  // invariant elements
  if (n == 1)
    tasks.push_back({"alekseev.invariant.fundamental", "qTr(M^[(2)]) = omega", in_n(1),
                     [] { return zero_elem(invariant_element(G(), 1, {2}) - omega(G(), 1, 1)); }});
  if (n >= 2) {
    tasks.push_back({"alekseev.invariant.pair_formula", "qTr(M^[(2,2)]) = qTr(M_1^(1) R^-1 M_2^(2) R)", in_n(2), [] {
                       auto V = module_V(G(), 2);
                       auto R = r_matrix(G(), V, V);
                       AM L = gen_matrix(G(), 2, 1).kron_left(2) * R.inverse() * gen_matrix(G(), 2, 2).kron_right(2) * R;
                       auto T = tensor_module(G(), V, V);
                       return zero_elem(invariant_element(G(), 2, {2, 2}) - quantum_trace(L, T));
                     }});
    tasks.push_back({"alekseev.invariant.trivial_color", "qTr(M^[(2,1)]) = omega^(1), qTr(M^[(1,2)]) = omega^(2)", in_n(2),
                     [] {
                       El r = (invariant_element(G(), 2, {2, 1}) - omega(G(), 2, 1)) +
                              (invariant_element(G(), 2, {1, 2}) - omega(G(), 2, 2));
                       return zero_elem(r);
                     }});
    for (int coupon = 0; coupon < 2; ++coupon)
      tasks.push_back({std::string("alekseev.invariant.centralizer.") + (coupon ? "tl" : "id"),
                       std::string("qTr(") + (coupon ? "U" : "id") +
                           " M^[(2,2)]) commutes with the entries of M^(1) M^(2)",
                       in_n(2), [coupon] {
                         Matrix<RatFunc> U = tl_element(G());
                         El z = invariant_element(G(), 2, {2, 2}, coupon ? &U : nullptr);
                         AM P = product_matrix(G(), 2, 1, 2);
                         for (int r = 0; r < 2; ++r)
                           for (int s = 0; s < 2; ++s) {
                             El c = commutator(z, P(r, s));
                             if (!c.is_zero()) return CheckResult::fail(c.str(8));
                           }
                         return CheckResult::pass();
                       }});
    tasks.push_back({"alekseev.invariant.rejects_non_intertwiner", "a coupon not commuting with the action is rejected",
                     in_n(2), [] {
                       Matrix<RatFunc> bad = Matrix<RatFunc>::identity(4);
                       bad(0, 1) = RatFunc(1);
                       try {
                         (void)invariant_element(G(), 2, {2, 2}, &bad);
                       } catch (const NotAnIntertwiner&) {
                         return CheckResult::pass();
                       }
                       return CheckResult::fail("accepted a non-intertwiner");
                     }});
  }
  return tasks;
}

#define QG_GRAPH_INST(C)                                                                      \
  template GenQuad<C> phi1_generators(const UAlg<C>&);                                        \
  template AMat<C> conjugate_R(const AMat<C>&, int);                                          \
  template AMat<C> conjugate_R_factor(const AMat<C>&, int, int, int);                         \
  template const AMat<C>& gen_matrix(const UAlg<C>&, int, int);                               \
  template AMat<C> fused_matrix(const UAlg<C>&, int, int);                                    \
  template AMat<C> product_matrix(const UAlg<C>&, int, int, int);                             \
  template Elem<C> omega(const UAlg<C>&, int, int);                                           \
  template Elem<C> eta(const UAlg<C>&, int);                                                  \
  template Elem<C> xi(const UAlg<C>&, int, int);                                              \
  template Elem<C> delta(const UAlg<C>&, int, int, int);                                      \
  template Matrix<C> tl_element(const UAlg<C>&);                                              \
  template AMat<C> lambda_matrix(const UAlg<C>&, int, const std::vector<int>&);               \
  template Elem<C> invariant_element(const UAlg<C>&, int, const std::vector<int>&, const Matrix<C>*);

QG_GRAPH_INST(RatFunc)
QG_GRAPH_INST(Cyclotomic)

}  // namespace qgraph
