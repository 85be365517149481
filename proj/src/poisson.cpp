#include "qgraph/poisson.hpp"

#include <memory>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qgraph {

// ---------------------------------------------------------------- PolyRing

namespace {

const PolyRing& interned(std::map<int, std::unique_ptr<PolyRing>>& cache, int n,
                         const std::function<PolyRing*()>& make) {
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, std::unique_ptr<PolyRing>(make())).first;
  return *it->second;
}

}  // namespace

const PolyRing& PolyRing::group(int n) {
  static std::map<int, std::unique_ptr<PolyRing>> cache;
  return interned(cache, n, [n] {
    auto* R = new PolyRing;
    R->n_ = n;
    R->group_ = true;
    for (int i = 1; i <= n; ++i) {
      for (const char* rs : {"11", "12", "21", "22"}) {
        R->names_.push_back(std::string("l") + rs + "_" + std::to_string(i));
        R->laurent_.push_back(false);
      }
      int b = 4 * (i - 1);
      R->det_.push_back({b, b + 1, b + 2, b + 3});
    }
    return R;
  });
}

const PolyRing& PolyRing::coords(int n) {
  static std::map<int, std::unique_ptr<PolyRing>> cache;
  return interned(cache, n, [n] {
    auto* R = new PolyRing;
    R->n_ = n;
    for (int i = 1; i <= n; ++i)
      for (const char* v : {"x", "y", "z'"}) {
        R->names_.push_back(v + std::to_string(i));
        R->laurent_.push_back(std::string(v) == "z'");
      }
    return R;
  });
}

// ---------------------------------------------------------------- CommPoly

namespace {

mpz_class binomial(int m, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), m, k);
  return r;
}

/// Rewrites l11^a l22^b (a, b > 0) through l11 l22 = 1 + l12 l21 until no monomial has both.
void reduce_det(const PolyRing& R, std::map<CommPoly::Exps, mpq_class>& t) {
  if (R.det_groups().empty()) return;
  for (;;) {
    auto bad = t.end();
    const std::array<int, 4>* grp = nullptr;
    for (auto it = t.begin(); it != t.end() && bad == t.end(); ++it)
      for (const auto& g : R.det_groups())
        if (it->first[g[0]] > 0 && it->first[g[3]] > 0) {
          bad = it;
          grp = &g;
          break;
        }
    if (bad == t.end()) return;
    CommPoly::Exps e = bad->first;
    mpq_class c = bad->second;
    t.erase(bad);
    int m = std::min(e[(*grp)[0]], e[(*grp)[3]]);
    e[(*grp)[0]] -= m;
    e[(*grp)[3]] -= m;
    for (int k = 0; k <= m; ++k) {
      CommPoly::Exps f = e;
      f[(*grp)[1]] += k;
      f[(*grp)[2]] += k;
      mpq_class v = t[f] + c * mpq_class(binomial(m, k));
      if (v == 0)
        t.erase(f);
      else
        t[f] = v;
    }
  }
}

}  // namespace

void CommPoly::add_term(const Exps& e, const mpq_class& c) {
  if (c == 0) return;
  auto it = t_.find(e);
  if (it == t_.end()) {
    t_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) t_.erase(it);
}

CommPoly CommPoly::constant(const PolyRing& R, const mpq_class& c) {
  CommPoly p(R);
  p.add_term(Exps(R.size(), 0), c);
  return p;
}

CommPoly CommPoly::var(const PolyRing& R, int v, int power) {
  if (power < 0 && !R.laurent(v)) throw std::invalid_argument("negative power of " + R.name(v));
  CommPoly p(R);
  Exps e(R.size(), 0);
  e[v] = power;
  p.add_term(e, 1);
  return p;
}

CommPoly CommPoly::operator-() const {
  CommPoly r = *this;
  for (auto& [e, c] : r.t_) c = -c;
  return r;
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
  if (!R_) R_ = o.R_;
  for (const auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o) {
  if (!R_) R_ = o.R_;
  for (const auto& [e, c] : o.t_) add_term(e, -c);
  return *this;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
  CommPoly r(a.R_ ? *a.R_ : *b.R_);
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_) {
      CommPoly::Exps e = ea;
      for (size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      r.add_term(e, ca * cb);
    }
  reduce_det(*r.R_, r.t_);
  return r;
}

CommPoly operator*(CommPoly a, const mpq_class& c) {
  if (c == 0) {
    a.t_.clear();
    return a;
  }
  for (auto& [e, v] : a.t_) v *= c;
  return a;
}

CommPoly CommPoly::pow(int k) const {
  CommPoly r = constant(*R_, 1), b = *this;
  for (; k > 0; k >>= 1) {
    if (k & 1) r = r * b;
    if (k > 1) b = b * b;
  }
  return r;
}

CommPoly CommPoly::derivative(int v) const {
  CommPoly r(*R_);
  for (const auto& [e, c] : t_) {
    if (e[v] == 0) continue;
    Exps f = e;
    f[v] -= 1;
    r.add_term(f, c * e[v]);
  }
  return r;
}

CommPoly CommPoly::substitute(const PolyRing& target, const std::vector<CommPoly>& images) const {
  CommPoly r(target);
  std::map<std::pair<int, int>, CommPoly> powers;
  for (const auto& [e, c] : t_) {
    CommPoly term = constant(target, c);
    for (size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (e[v] < 0) throw std::invalid_argument("substitute: negative exponent on " + R_->name(v));
      auto key = std::make_pair(static_cast<int>(v), e[v]);
      auto it = powers.find(key);
      if (it == powers.end()) it = powers.emplace(key, images[v].pow(e[v])).first;
      term = term * it->second;
    }
    r += term;
  }
  return r;
}

bool CommPoly::even_in_w() const {
  if (R_->is_group()) return true;
  for (const auto& [e, c] : t_)
    for (int i = 1; i <= R_->sites(); ++i)
      if (e[R_->w(i)] % 2 != 0) return false;
  return true;
}

std::string CommPoly::str(size_t max_terms) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  size_t k = 0;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it, ++k) {
    if (max_terms && k == max_terms) {
      os << " + ... (" << t_.size() - k << " more terms)";
      break;
    }
    const auto& [e, c] = *it;
    std::string mono;
    for (size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      std::string name = R_->name(v);
      int p = e[v];
      if (R_->laurent(v) && p % 2 == 0) {
        name = "z" + name.substr(2);
        p /= 2;
      }
      if (!mono.empty()) mono += "*";
      mono += name;
      if (p != 1) mono += "^" + std::to_string(p);
    }
    bool neg = c < 0;
    mpq_class a = abs(c);
    if (k > 0) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    if (mono.empty())
      os << a.get_str();
    else if (a == 1)
      os << mono;
    else
      os << a.get_str() << "*" << mono;
  }
  return os.str();
}

// ---------------------------------------------------------------- PoissonTable

PoissonTable::PoissonTable(const PolyRing& R) : R_(&R), t_(R.size() * R.size(), CommPoly(R)) {}

CommPoly PoissonTable::bracket(const CommPoly& f, const CommPoly& g) const {
  CommPoly r(*R_);
  std::vector<std::pair<int, CommPoly>> df, dg;
  for (int a = 0; a < R_->size(); ++a) {
    CommPoly d = f.derivative(a);
    if (!d.is_zero()) df.emplace_back(a, std::move(d));
    d = g.derivative(a);
    if (!d.is_zero()) dg.emplace_back(a, std::move(d));
  }
  for (const auto& [a, fa] : df)
    for (const auto& [b, gb] : dg)
      if (!at(a, b).is_zero()) r += fa * gb * at(a, b);
  return r;
}

std::string PoissonTable::antisymmetry_witness() const {
  for (int a = 0; a < R_->size(); ++a)
    for (int b = a; b < R_->size(); ++b) {
      CommPoly s = at(a, b) + at(b, a);
      if (!s.is_zero()) return "{" + R_->name(a) + ", " + R_->name(b) + "} + {" + R_->name(b) + ", " + R_->name(a) + "} = " + s.str(6);
    }
  return {};
}

std::string PoissonTable::jacobi_witness() const {
  int N = R_->size();
  auto v = [this](int a) { return CommPoly::var(*R_, a); };
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b)
      for (int c = b + 1; c < N; ++c) {
        CommPoly j = bracket(v(a), at(b, c)) + bracket(v(b), at(c, a)) + bracket(v(c), at(a, b));
        if (!j.is_zero()) return "(" + R_->name(a) + ", " + R_->name(b) + ", " + R_->name(c) + "): " + j.str(6);
      }
  return {};
}

PolyMat mat_mul(const PolyMat& a, const PolyMat& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

// ---------------------------------------------------------------- brackets

std::array<std::array<mpq_class, 4>, 4> classical_r() {
  int H[2][2] = {{1, 0}, {0, -1}}, X[2][2] = {{0, 1}, {0, 0}}, Y[2][2] = {{0, 0}, {1, 0}};
  std::array<std::array<mpq_class, 4>, 4> r;
  for (int a = 0; a < 2; ++a)
    for (int t = 0; t < 2; ++t)
      for (int s = 0; s < 2; ++s)
        for (int u = 0; u < 2; ++u)
          r[2 * a + t][2 * s + u] = mpq_class(H[a][s] * H[t][u], 4) + X[a][s] * Y[t][u];
  for (auto& row : r)
    for (auto& v : row) v.canonicalize();
  return r;
}

namespace {

using Mat4 = std::array<CommPoly, 16>;

Mat4 zero4(const PolyRing& R) {
  Mat4 m;
  m.fill(CommPoly(R));
  return m;
}

Mat4 mul4(const Mat4& a, const Mat4& b) {
  Mat4 c = zero4(a[0].ring());
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      if (a[4 * i + k].is_zero()) continue;
      for (int j = 0; j < 4; ++j)
        if (!b[4 * k + j].is_zero()) c[4 * i + j] += a[4 * i + k] * b[4 * k + j];
    }
  return c;
}

Mat4 add4(Mat4 a, const Mat4& b, int sign) {
  for (int k = 0; k < 16; ++k) a[k] += sign > 0 ? b[k] : -b[k];
  return a;
}

Mat4 numeric4(const PolyRing& R, const std::array<std::array<mpq_class, 4>, 4>& m) {
  Mat4 r = zero4(R);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[4 * i + j] = CommPoly::constant(R, m[i][j]);
  return r;
}

/// L (x) 1 and 1 (x) L for a 2x2 polynomial matrix.
Mat4 first_leg(const PolyMat& L) {
  Mat4 m = zero4(L[0].ring());
  for (int r = 0; r < 2; ++r)
    for (int t = 0; t < 2; ++t)
      for (int s = 0; s < 2; ++s) m[4 * (2 * r + t) + 2 * s + t] = L[2 * r + s];
  return m;
}

Mat4 second_leg(const PolyMat& L) {
  Mat4 m = zero4(L[0].ring());
  for (int r = 0; r < 2; ++r)
    for (int t = 0; t < 2; ++t)
      for (int u = 0; u < 2; ++u) m[4 * (2 * r + t) + 2 * r + u] = L[2 * t + u];
  return m;
}

PolyMat group_matrix(const PolyRing& R, int i) {
  return {CommPoly::var(R, R.l(i, 1, 1)), CommPoly::var(R, R.l(i, 1, 2)), CommPoly::var(R, R.l(i, 2, 1)),
          CommPoly::var(R, R.l(i, 2, 2))};
}

std::array<std::array<mpq_class, 4>, 4> flipped(const std::array<std::array<mpq_class, 4>, 4>& r) {
  std::array<std::array<mpq_class, 4>, 4> f;
  for (int a = 0; a < 2; ++a)
    for (int t = 0; t < 2; ++t)
      for (int s = 0; s < 2; ++s)
        for (int u = 0; u < 2; ++u) f[2 * a + t][2 * s + u] = r[2 * t + a][2 * u + s];
  return f;
}

}  // namespace

PoissonTable fr_bracket(int n, SameSiteOrder order) {
  const PolyRing& R = PolyRing::group(n);
  PoissonTable T(R);
  auto rr = classical_r();
  Mat4 r = numeric4(R, rr), rp = numeric4(R, flipped(rr));
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      Mat4 L1 = first_leg(group_matrix(R, i)), L2 = second_leg(group_matrix(R, j));
      Mat4 L12 = mul4(L1, L2), B;
      if (i == j) {
        Mat4 s1 = order == SameSiteOrder::Printed ? mul4(mul4(L2, rp), L1) : mul4(mul4(L1, rp), L2);
        Mat4 s2 = order == SameSiteOrder::Printed ? mul4(mul4(L1, r), L2) : mul4(mul4(L2, r), L1);
        B = add4(add4(add4(mul4(r, L12), mul4(L12, rp), -1), s1, 1), s2, -1);
      } else {
        B = add4(add4(add4(mul4(r, L12), mul4(L12, r), 1), mul4(mul4(L2, r), L1), -1), mul4(mul4(L1, r), L2), -1);
      }
      for (int a = 0; a < 2; ++a)
        for (int t = 0; t < 2; ++t)
          for (int s = 0; s < 2; ++s)
            for (int u = 0; u < 2; ++u) {
              const CommPoly& v = B[4 * (2 * a + t) + 2 * s + u];
              int f = R.l(i, a + 1, s + 1), g = R.l(j, t + 1, u + 1);
              T.at(f, g) = v;
              if (i != j) T.at(g, f) = -v;
            }
    }
  return T;
}

PoissonTable qca_bracket_model(int n) {
  const PolyRing& R = PolyRing::coords(n);
  PoissonTable T(R);
  for (int i = 1; i <= n; ++i) {
    CommPoly x = CommPoly::var(R, R.x(i)), y = CommPoly::var(R, R.y(i)), w = CommPoly::var(R, R.w(i));
    CommPoly yx = CommPoly::constant(R, -1) + x * y + CommPoly::var(R, R.w(i), -4);
    // {z, x} = -zx and {z, y} = yz with z = z'^2 give {z', x} = -z'x/2, {z', y} = z'y/2.
    CommPoly wx = w * x * mpq_class(-1, 2), wy = w * y * mpq_class(1, 2);
    T.at(R.y(i), R.x(i)) = yx;
    T.at(R.x(i), R.y(i)) = -yx;
    T.at(R.w(i), R.x(i)) = wx;
    T.at(R.x(i), R.w(i)) = -wx;
    T.at(R.w(i), R.y(i)) = wy;
    T.at(R.y(i), R.w(i)) = -wy;
  }
  return T;
}

// ---------------------------------------------------------------- coordinates

CommPoly coord_x(int n, int i) { return CommPoly::var(PolyRing::coords(n), PolyRing::coords(n).x(i)); }
CommPoly coord_y(int n, int i) { return CommPoly::var(PolyRing::coords(n), PolyRing::coords(n).y(i)); }
CommPoly coord_z(int n, int i, int power) {
  return CommPoly::var(PolyRing::coords(n), PolyRing::coords(n).w(i), 2 * power);
}

PolyMat site_matrix_poly(int n, int i) {
  CommPoly x = coord_x(n, i), y = coord_y(n, i), z = coord_z(n, i);
  return {z - z * x * y, y, -x, coord_z(n, i, -1)};
}

PolyMat upper_factor(int n, int i) {
  const PolyRing& R = PolyRing::coords(n);
  CommPoly w = CommPoly::var(R, R.w(i)), wi = CommPoly::var(R, R.w(i), -1);
  return {w, w * coord_y(n, i), CommPoly(R), wi};
}

PolyMat lower_factor(int n, int i) {
  const PolyRing& R = PolyRing::coords(n);
  CommPoly w = CommPoly::var(R, R.w(i)), wi = CommPoly::var(R, R.w(i), -1);
  return {wi, CommPoly(R), w * coord_x(n, i), w};
}

PolyMat dressing_matrix(int n, int i) {
  const PolyRing& R = PolyRing::coords(n);
  PolyMat m = {CommPoly::constant(R, 1), CommPoly(R), CommPoly(R), CommPoly::constant(R, 1)};
  for (int j = n; j > i; --j) m = mat_mul(m, upper_factor(n, j));
  return m;
}

PolyMat dressed_matrix(int n, int i) {
  PolyMat r = dressing_matrix(n, i);
  PolyMat rinv = {r[3], -r[1], r[2], r[0]};
  return mat_mul(mat_mul(r, site_matrix_poly(n, i)), rinv);
}

CommPoly fr_pullback(const CommPoly& f) {
  const PolyRing& G = f.ring();
  int n = G.sites();
  std::vector<CommPoly> images(G.size());
  for (int i = 1; i <= n; ++i) {
    PolyMat d = dressed_matrix(n, i);
    for (int r = 1; r <= 2; ++r)
      for (int s = 1; s <= 2; ++s) images[G.l(i, r, s)] = d[2 * (r - 1) + (s - 1)];
  }
  return f.substitute(PolyRing::coords(n), images);
}

CommPoly extract_coordinates(const EpsElem& u, int l) {
  int n = u.arity();
  const PolyRing& R = PolyRing::coords(n);
  Cyclotomic cl = root_alg(l).qdiff().pow(l);
  CommPoly r(R);
  CommPoly::Exps e0(R.size(), 0);
  for (const auto& [key, c] : u.terms()) {
    CommPoly::Exps e = e0;
    Cyclotomic k = c;
    for (int s = 0; s < n; ++s) {
      const Mono& m = key.m[s];
      if (m.a % l || m.b % l || m.c % l)
        throw std::domain_error("not in Z_0: monomial with exponents (" + std::to_string(m.a) + ", " +
                                std::to_string(m.b) + ", " + std::to_string(m.c) + ") at slot " + std::to_string(s + 1));
      int A = m.a / l, B = m.b / l, C = m.c / l;
      // F^{lA} K^{lB} E^{lC} = y^A z^{B+C} x^C / ((c^l)^A (-c^l)^C) at eps.
      k /= cl.pow(A + C);
      if (C % 2) k = -k;
      e[R.x(s + 1)] = C;
      e[R.y(s + 1)] = A;
      e[R.w(s + 1)] = 2 * (B + C);
    }
    if (!k.is_rational()) throw std::domain_error("irrational coordinate coefficient " + k.str());
    r += CommPoly::var(R, 0, 0) * CommPoly::constant(R, k.rational_value()) *
         [&] {
           CommPoly m = CommPoly::constant(R, 1);
           for (int v = 0; v < R.size(); ++v)
             if (e[v]) m = m * CommPoly::var(R, v, e[v]);
           return m;
         }();
  }
  return r;
}

Elem<RatFunc> lift_coordinates(const CommPoly& p, int l) {
  const PolyRing& R = p.ring();
  if (R.is_group()) throw std::invalid_argument("lift_coordinates needs a coordinate polynomial");
  int n = R.sites();
  const auto& G = generic_alg();
  Elem<RatFunc> out(G, n);
  for (const auto& [e, c] : p.terms()) {
    Elem<RatFunc> t = Elem<RatFunc>::scalar(G, n, RatFunc(c));
    for (int i = 1; i <= n; ++i) {
      int wx = e[R.w(i)];
      if (wx % 2) throw std::invalid_argument("odd power of z' has no lift in U_q");
      if (e[R.x(i)]) t *= central_lift(Central::X, n, i, l).pow(e[R.x(i)]);
      if (e[R.y(i)]) t *= central_lift(Central::Y, n, i, l).pow(e[R.y(i)]);
      if (wx) t *= Elem<RatFunc>::K(G, n, i - 1, l * wx / 2);
    }
    out += t;
  }
  return out;
}

CommPoly qca_bracket_from_derivations(const CommPoly& a, const CommPoly& b, int l) {
  return extract_coordinates(derivation(lift_coordinates(a, l), lift_coordinates(b, l), l), l);
}

// ---------------------------------------------------------------- suites

namespace {

Inputs in_nl(int n, int l) { return {{"n", std::to_string(n)}, {"l", std::to_string(l)}}; }

bool guarded(const std::string& suite, int n, int l, int max_n, bool override_bounds, std::vector<Task>& out) {
  if (l < 3 || l % 2 == 0) throw std::invalid_argument("l must be odd and >= 3");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (override_bounds || (n <= max_n && (l == 3 || l == 5))) return false;
  std::string why = "n = " + std::to_string(n) + ", l = " + std::to_string(l) + " is outside the default bound n <= " +
                    std::to_string(max_n) + ", l in {3, 5}; pass --override-bounds to run";
  out.push_back({suite + ".bound", "resource bound", in_nl(n, l), [why] { return CheckResult::skip(why); }});
  return true;
}

CheckResult equal_poly(const CommPoly& got, const CommPoly& want) {
  CommPoly d = got - want;
  if (d.is_zero()) return CheckResult::pass();
  return CheckResult::fail("got " + got.str(8) + "; expected " + want.str(8));
}

CheckResult equal_mat(const PolyMat& got, const PolyMat& want) {
  static const char* pos[] = {"(1,1)", "(1,2)", "(2,1)", "(2,2)"};
  for (int k = 0; k < 4; ++k)
    if (got[k] != want[k]) return CheckResult::fail(std::string(pos[k]) + ": got " + got[k].str(8) + "; expected " + want[k].str(8));
  return CheckResult::pass();
}

CommPoly trace_of_product(const std::vector<PolyMat>& ms) {
  PolyMat p = ms[0];
  for (size_t k = 1; k < ms.size(); ++k) p = mat_mul(p, ms[k]);
  return p[0] + p[3];
}

std::vector<std::vector<int>> consecutive_tuples(int n) {
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      std::vector<int> t;
      for (int k = i; k <= j; ++k) t.push_back(k);
      out.push_back(t);
    }
  return out;
}

std::string tuple_id(const std::vector<int>& t) {
  std::string s;
  for (int k : t) s += (s.empty() ? "" : "-") + std::to_string(k);
  return s;
}

/// {L1_a, L2_b} against [r, L1_a L2_b] for the factor pairs of the dual group.
CheckResult dual_group_check(const PolyMat& A, const PolyMat& B, const PoissonTable& T) {
  const PolyRing& R = T.ring();
  Mat4 r = numeric4(R, classical_r());
  Mat4 L12 = mul4(first_leg(A), second_leg(B));
  Mat4 rhs = add4(mul4(r, L12), mul4(L12, r), -1);
  for (int a = 0; a < 2; ++a)
    for (int t = 0; t < 2; ++t)
      for (int s = 0; s < 2; ++s)
        for (int u = 0; u < 2; ++u) {
          CommPoly lhs = T.bracket(A[2 * a + s], B[2 * t + u]);
          const CommPoly& want = rhs[4 * (2 * a + t) + 2 * s + u];
          if (lhs != want)
            return CheckResult::fail("entry (" + std::to_string(a + 1) + std::to_string(s + 1) + ", " + std::to_string(t + 1) +
                                     std::to_string(u + 1) + "): " + lhs.str(6) + " vs " + want.str(6));
        }
  return CheckResult::pass();
}

}  // namespace

std::vector<Task> poisson_suite(int n, int l, bool override_bounds) {
  std::vector<Task> tasks;
  if (guarded("poisson", n, l, 3, override_bounds, tasks)) return tasks;
  Inputs in_n = {{"n", std::to_string(n)}};

  for (SameSiteOrder order : {SameSiteOrder::Printed, SameSiteOrder::Swapped}) {
    std::string pre = order == SameSiteOrder::Printed ? "poisson.fr." : "poisson.fr_swapped.";
    std::string which = order == SameSiteOrder::Printed ? " (printed same-site order)" : " (swapped same-site order)";
    tasks.push_back({pre + "antisymmetry", "{f, g} = -{g, f} on the Fock-Rosly generator table" + which, in_n, [n, order] {
                       std::string w = fr_bracket(n, order).antisymmetry_witness();
                       return w.empty() ? CheckResult::pass() : CheckResult::fail(w);
                     }});
    tasks.push_back({pre + "jacobi", "Jacobi identity on every triple of generators l^(i)_rs, modulo det = 1" + which, in_n,
                     [n, order] {
                       std::string w = fr_bracket(n, order).jacobi_witness();
                       return w.empty() ? CheckResult::pass() : CheckResult::fail(w);
                     }});
    tasks.push_back({pre + "det_casimir", "l11 l22 - l12 l21 Poisson-commutes with every generator before reduction" + which,
                     in_n, [n, order] {
                       // Leibniz on the generator table, reducing only at the end.
                       const PolyRing& R = PolyRing::group(n);
                       PoissonTable T = fr_bracket(n, order);
                       for (int i = 1; i <= n; ++i)
                         for (int g = 0; g < R.size(); ++g) {
                           auto v = [&](int r, int s) { return CommPoly::var(R, R.l(i, r, s)); };
                           auto br = [&](int r, int s) { return T.at(R.l(i, r, s), g); };
                           CommPoly d = br(1, 1) * v(2, 2) + v(1, 1) * br(2, 2) - br(1, 2) * v(2, 1) - v(1, 2) * br(2, 1);
                           if (!d.is_zero())
                             return CheckResult::fail("site " + std::to_string(i) + " with " + R.name(g) + ": " + d.str(6));
                         }
                       return CheckResult::pass();
                     }});
  }
  tasks.push_back({"poisson.fr.same_site_orders_differ",
                   "the two same-site orders give different brackets: {l12, l21} is 1 + l12 l21 - l11^2 (printed) and 1 + l12 l21 - l22^2 (swapped)",
                   {}, [] {
                     const PolyRing& R = PolyRing::group(1);
                     CommPoly one = CommPoly::constant(R, 1), l11 = CommPoly::var(R, R.l(1, 1, 1)),
                              l22 = CommPoly::var(R, R.l(1, 2, 2)),
                              p = CommPoly::var(R, R.l(1, 1, 2)) * CommPoly::var(R, R.l(1, 2, 1));
                     int a = R.l(1, 1, 2), b = R.l(1, 2, 1);
                     CheckResult r = equal_poly(fr_bracket(1).at(a, b), one + p - l11 * l11);
                     if (r.status != CheckResult::Status::Pass) return CheckResult::fail("printed: " + r.witness);
                     r = equal_poly(fr_bracket(1, SameSiteOrder::Swapped).at(a, b), one + p - l22 * l22);
                     if (r.status != CheckResult::Status::Pass) return CheckResult::fail("swapped: " + r.witness);
                     return CheckResult::pass();
                   }});
  for (const auto& t : consecutive_tuples(n))
    tasks.push_back({"poisson.fr.conjugation_invariance." + tuple_id(t),
                     "the vector fields L^(i) -> [xi, L^(i)], xi in {H, X, Y}, kill Tr(L^(i)...L^(j))",
                     {{"n", std::to_string(n)}, {"sites", tuple_id(t)}}, [n, t] {
                       const PolyRing& R = PolyRing::group(n);
                       std::vector<PolyMat> ms;
                       for (int i : t) ms.push_back(group_matrix(R, i));
                       CommPoly tr = trace_of_product(ms);
                       int xis[3][4] = {{1, 0, 0, -1}, {0, 1, 0, 0}, {0, 0, 1, 0}};
                       const char* names[] = {"H", "X", "Y"};
                       for (int k = 0; k < 3; ++k) {
                         PolyMat xi;
                         for (int e = 0; e < 4; ++e) xi[e] = CommPoly::constant(R, xis[k][e]);
                         CommPoly out(R);
                         for (int i = 1; i <= n; ++i) {
                           PolyMat L = group_matrix(R, i);
                           PolyMat a = mat_mul(xi, L), b = mat_mul(L, xi);
                           for (int r = 1; r <= 2; ++r)
                             for (int s = 1; s <= 2; ++s) {
                               int e = 2 * (r - 1) + (s - 1);
                               out += tr.derivative(R.l(i, r, s)) * (a[e] - b[e]);
                             }
                         }
                         if (!out.is_zero()) return CheckResult::fail(std::string(names[k]) + ": " + out.str(6));
                       }
                       return CheckResult::pass();
                     }});

  tasks.push_back({"poisson.qca.antisymmetry", "{f, g} = -{g, f} on the coordinate table", in_n, [n] {
                     std::string w = qca_bracket_model(n).antisymmetry_witness();
                     return w.empty() ? CheckResult::pass() : CheckResult::fail(w);
                   }});
  tasks.push_back({"poisson.qca.jacobi", "Jacobi identity on every triple of x^(i), y^(i), z'^(i)", in_n, [n] {
                     std::string w = qca_bracket_model(n).jacobi_witness();
                     return w.empty() ? CheckResult::pass() : CheckResult::fail(w);
                   }});
  tasks.push_back({"poisson.qca.values", "{y, x} = -1 + xy + z^-2, {z, x} = -zx, {z, y} = yz at every site", in_n, [n] {
                     PoissonTable T = qca_bracket_model(n);
                     for (int i = 1; i <= n; ++i) {
                       CommPoly x = coord_x(n, i), y = coord_y(n, i), z = coord_z(n, i);
                       CommPoly one = CommPoly::constant(x.ring(), 1);
                       if (T.bracket(y, x) != x * y + coord_z(n, i, -2) - one) return CheckResult::fail("{y, x} at site " + std::to_string(i));
                       if (T.bracket(z, x) != -(z * x)) return CheckResult::fail("{z, x} at site " + std::to_string(i));
                       if (T.bracket(z, y) != y * z) return CheckResult::fail("{z, y} at site " + std::to_string(i));
                     }
                     return CheckResult::pass();
                   }});
  if (n >= 2)
    tasks.push_back({"poisson.qca.cross_site", "coordinates at different sites Poisson-commute", in_n, [n] {
                       PoissonTable T = qca_bracket_model(n);
                       for (int i = 1; i <= n; ++i)
                         for (int j = 1; j <= n; ++j) {
                           if (i == j) continue;
                           for (const CommPoly& a : {coord_x(n, i), coord_y(n, i), coord_z(n, i)})
                             for (const CommPoly& b : {coord_x(n, j), coord_y(n, j), coord_z(n, j)}) {
                               CommPoly r = T.bracket(a, b);
                               if (!r.is_zero()) return CheckResult::fail("{" + a.str() + ", " + b.str() + "} = " + r.str(6));
                             }
                         }
                       return CheckResult::pass();
                     }});
  tasks.push_back({"poisson.qca.center", "-xyz + z + z^-1 Poisson-commutes with x, y and z", in_n, [n] {
                     PoissonTable T = qca_bracket_model(n);
                     for (int i = 1; i <= n; ++i) {
                       CommPoly x = coord_x(n, i), y = coord_y(n, i), z = coord_z(n, i);
                       CommPoly c = z + coord_z(n, i, -1) - x * y * z;
                       for (const CommPoly& v : {x, y, z}) {
                         CommPoly r = T.bracket(c, v);
                         if (!r.is_zero()) return CheckResult::fail("with " + v.str() + ": " + r.str(6));
                       }
                     }
                     return CheckResult::pass();
                   }});
  tasks.push_back({"poisson.dual_group",
                   "with L_+ = [[z', z'y], [0, z'^-1]] and L_- = [[z'^-1, 0], [z'x, z']], the coordinate bracket gives {L1_a, L2_b} = [r, L1_a L2_b] for (a, b) in {(+,+), (-,-), (+,-)}",
                   {}, [] {
                     PoissonTable T = qca_bracket_model(1);
                     PolyMat P = upper_factor(1, 1), M = lower_factor(1, 1);
                     for (auto [A, B, name] : {std::make_tuple(P, P, "++"), std::make_tuple(M, M, "--"), std::make_tuple(P, M, "+-")}) {
                       CheckResult r = dual_group_check(A, B, T);
                       if (r.status != CheckResult::Status::Pass) return CheckResult::fail(std::string(name) + " " + r.witness);
                     }
                     return CheckResult::pass();
                   }});

  struct Pair {
    const char* id;
    char a, b;
  };
  for (Pair p : {Pair{"y_x", 'y', 'x'}, Pair{"z_x", 'z', 'x'}, Pair{"z_y", 'z', 'y'}, Pair{"x_y", 'x', 'y'},
                 Pair{"x_z", 'x', 'z'}, Pair{"y_z", 'y', 'z'}})
    tasks.push_back({std::string("poisson.from_derivations.") + p.id,
                     std::string("D_") + p.a + "(" + p.b + ") read in coordinates equals the coordinate bracket {" + p.a +
                         ", " + p.b + "}",
                     {{"l", std::to_string(l)}}, [p, l] {
                       auto c = [](char v) { return v == 'x' ? coord_x(1, 1) : v == 'y' ? coord_y(1, 1) : coord_z(1, 1); };
                       CommPoly got = qca_bracket_from_derivations(c(p.a), c(p.b), l);
                       return equal_poly(got, qca_bracket_model(1).bracket(c(p.a), c(p.b)));
                     }});
  tasks.push_back({"poisson.from_derivations.omega_x", "D_Omega(x) = 0", {{"l", std::to_string(l)}}, [l] {
                     EpsElem r = derivation(central_lift(Central::Omega, 1, 1, l), central_lift(Central::X, 1, 1, l), l);
                     return CheckResult::expect(r.is_zero(), [&] { return r.str(6); });
                   }});
  return tasks;
}

std::vector<Task> dressing_suite(int n, int l, bool override_bounds) {
  std::vector<Task> tasks;
  if (guarded("dressing", n, l, 3, override_bounds, tasks)) return tasks;
  for (int i = 1; i <= n; ++i) {
    Inputs in = {{"n", std::to_string(n)}, {"l", std::to_string(l)}, {"site", std::to_string(i)}};
    std::string s = std::to_string(i);
    tasks.push_back({"dressing.fr_matrix.site" + s, "the Frobenius matrix of site i read in coordinates equals R M R^-1", in,
                     [n, l, i] {
                       AMat<Cyclotomic> F = fr_matrix(n, l, i);
                       PolyMat got = {extract_coordinates(F(0, 0), l), extract_coordinates(F(0, 1), l),
                                      extract_coordinates(F(1, 0), l), extract_coordinates(F(1, 1), l)};
                       return equal_mat(got, dressed_matrix(n, i));
                     }});
    tasks.push_back({"dressing.cancel.site" + s, "z' cancels: R M R^-1 has only even powers of every z'", in, [n, i] {
                       PolyMat d = dressed_matrix(n, i);
                       for (int k = 0; k < 4; ++k)
                         if (!d[k].even_in_w()) return CheckResult::fail("entry " + std::to_string(k) + ": " + d[k].str(6));
                       return CheckResult::pass();
                     }});
    tasks.push_back({"dressing.lower_left.site" + s, "(2,1) entry = -x^(i) z^(i+1)-1 ... z^(n)-1", in, [n, i] {
                       CommPoly want = -coord_x(n, i);
                       for (int j = i + 1; j <= n; ++j) want = want * coord_z(n, j, -1);
                       return equal_poly(dressed_matrix(n, i)[2], want);
                     }});
    tasks.push_back({"dressing.lower_right.site" + s,
                     "(2,2) entry = z^(i)-1 + x^(i)(y^(i+1) + sum_j z^(i+1)-1 ... z^(i+j)-1 y^(i+j+1))", in, [n, i] {
                       const PolyRing& R = PolyRing::coords(n);
                       CommPoly f(R), pref = CommPoly::constant(R, 1);
                       for (int k = i + 1; k <= n; ++k) {
                         f += pref * coord_y(n, k);
                         pref = pref * coord_z(n, k, -1);
                       }
                       return equal_poly(dressed_matrix(n, i)[3], coord_z(n, i, -1) + coord_x(n, i) * f);
                     }});
  }
  tasks.push_back({"dressing.last_site", "R^(n) is the identity, so the last site is undressed", {{"n", std::to_string(n)}},
                   [n] { return equal_mat(dressed_matrix(n, n), site_matrix_poly(n, n)); }});

  // Characters chi_1, chi_2 as sites 1, 2 of the two-site coordinate ring.
  tasks.push_back({"group.law", "(M_+, M_-) pairs multiply in the opposite groups to x = x1 + z1^-1 x2, y = y1 + y2 z1^-1, z = z1 z2",
                   {}, [] {
                     PolyMat up = mat_mul(upper_factor(2, 2), upper_factor(2, 1));
                     PolyMat lo = mat_mul(lower_factor(2, 2), lower_factor(2, 1));
                     PolyMat want_up = upper_factor(2, 1), want_lo = lower_factor(2, 1);
                     const PolyRing& R = PolyRing::coords(2);
                     CommPoly w = CommPoly::var(R, R.w(1)) * CommPoly::var(R, R.w(2));
                     CommPoly wi = CommPoly::var(R, R.w(1), -1) * CommPoly::var(R, R.w(2), -1);
                     CommPoly x = coord_x(2, 1) + coord_z(2, 1, -1) * coord_x(2, 2);
                     CommPoly y = coord_y(2, 1) + coord_y(2, 2) * coord_z(2, 1, -1);
                     CheckResult a = equal_mat(up, {w, w * y, CommPoly(R), wi});
                     if (a.status != CheckResult::Status::Pass) return CheckResult::fail("upper " + a.witness);
                     CheckResult b = equal_mat(lo, {wi, CommPoly(R), w * x, w});
                     if (b.status != CheckResult::Status::Pass) return CheckResult::fail("lower " + b.witness);
                     return CheckResult::pass();
                   }});
  tasks.push_back({"group.inverse", "the inverse pair has x = -zx, y = -yz, z' -> z'^-1", {}, [] {
                     const PolyRing& R = PolyRing::coords(1);
                     CommPoly w = CommPoly::var(R, R.w(1)), wi = CommPoly::var(R, R.w(1), -1);
                     PolyMat up = upper_factor(1, 1), lo = lower_factor(1, 1);
                     PolyMat up_inv = {up[3], -up[1], up[2], up[0]}, lo_inv = {lo[3], -lo[1], -lo[2], lo[0]};
                     lo_inv[2] = -lo[2];
                     CommPoly xi = -(coord_z(1, 1) * coord_x(1, 1)), yi = -(coord_y(1, 1) * coord_z(1, 1));
                     CheckResult a = equal_mat(up_inv, {wi, wi * yi, CommPoly(R), w});
                     if (a.status != CheckResult::Status::Pass) return CheckResult::fail("upper " + a.witness);
                     return equal_mat(lo_inv, {w, CommPoly(R), wi * xi, wi});
                   }});
  tasks.push_back({"group.unit", "x = y = 0, z = 1 gives the identity pair and M = I", {}, [] {
                     const PolyRing& R = PolyRing::coords(1);
                     std::vector<CommPoly> at_unit = {CommPoly(R), CommPoly(R), CommPoly::constant(R, 1)};
                     PolyMat I = {CommPoly::constant(R, 1), CommPoly(R), CommPoly(R), CommPoly::constant(R, 1)};
                     PolyMat m = site_matrix_poly(1, 1), u = upper_factor(1, 1), d = lower_factor(1, 1);
                     for (PolyMat* p : {&m, &u, &d}) {
                       PolyMat v;
                       for (int k = 0; k < 4; ++k) {
                         // z'^-1 appears only as a monomial; evaluate it at z' = 1 by hand.
                         CommPoly e(R);
                         for (const auto& [ex, c] : (*p)[k].terms()) {
                           if (ex[R.x(1)] || ex[R.y(1)]) continue;
                           e += CommPoly::constant(R, c);
                         }
                         v[k] = e;
                       }
                       if (v != I) return CheckResult::fail("not the identity at the unit");
                     }
                     (void)at_unit;
                     return CheckResult::pass();
                   }});
  tasks.push_back({"group.split", "M_+ M_-^-1 = [[z - zxy, y], [-x, z^-1]]", {}, [] {
                     PolyMat lo = lower_factor(1, 1);
                     PolyMat lo_inv = {lo[3], -lo[1], -lo[2], lo[0]};
                     return equal_mat(mat_mul(upper_factor(1, 1), lo_inv), site_matrix_poly(1, 1));
                   }});
  return tasks;
}

std::vector<Task> fr_poisson_suite(int n, int l, bool override_bounds) {
  std::vector<Task> tasks;
  if (guarded("frpoisson", n, l, 2, override_bounds, tasks)) return tasks;
  const PolyRing& G = PolyRing::group(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (SameSiteOrder order : {SameSiteOrder::Printed, SameSiteOrder::Swapped}) {
        if (i != j && order == SameSiteOrder::Swapped) continue;
        std::string id = std::to_string(i) + "-" + std::to_string(j);
        std::string pre = order == SameSiteOrder::Printed ? "frpoisson.model.sites" : "frpoisson.model_swapped.sites";
        tasks.push_back({pre + id,
                         "{Fr f, Fr g} = Fr {f, g}_FR for all generators f at site i and g at site j, through the coordinate bracket",
                         {{"n", std::to_string(n)}, {"sites", id}}, [n, i, j, order] {
                           const PolyRing& G = PolyRing::group(n);
                           PoissonTable FR = fr_bracket(n, order), Q = qca_bracket_model(n);
                           for (int r = 1; r <= 2; ++r)
                             for (int s = 1; s <= 2; ++s)
                               for (int t = 1; t <= 2; ++t)
                                 for (int u = 1; u <= 2; ++u) {
                                   CommPoly f = CommPoly::var(G, G.l(i, r, s)), g = CommPoly::var(G, G.l(j, t, u));
                                   CommPoly lhs = Q.bracket(fr_pullback(f), fr_pullback(g));
                                   CommPoly rhs = fr_pullback(FR.bracket(f, g));
                                   if (lhs != rhs)
                                     return CheckResult::fail("{" + G.name(G.l(i, r, s)) + ", " + G.name(G.l(j, t, u)) +
                                                              "}: " + lhs.str(6) + " vs " + rhs.str(6));
                                 }
                           return CheckResult::pass();
                         }});
      }

  auto derivation_task = [&tasks, n, l](int f, int g, SameSiteOrder order) {
    const PolyRing& G = PolyRing::group(n);
    std::string id = G.name(f) + "_" + G.name(g);
    std::string pre = order == SameSiteOrder::Printed ? "frpoisson.derivation." : "frpoisson.derivation_swapped.";
    tasks.push_back({pre + id, "D_{Fr f}(Fr g) by the limit formula, read in coordinates, equals Fr {f, g}_FR",
                     {{"n", std::to_string(n)}, {"l", std::to_string(l)}, {"f", G.name(f)}, {"g", G.name(g)}},
                     [n, l, f, g, order] {
                       const PolyRing& G = PolyRing::group(n);
                       CommPoly F = CommPoly::var(G, f), H = CommPoly::var(G, g);
                       CommPoly lhs = qca_bracket_from_derivations(fr_pullback(F), fr_pullback(H), l);
                       return equal_poly(lhs, fr_pullback(fr_bracket(n, order).bracket(F, H)));
                     }});
  };
  if (n == 1) {
    for (int f = 0; f < 4; ++f)
      for (int g = f; g < 4; ++g)
        for (SameSiteOrder order : {SameSiteOrder::Printed, SameSiteOrder::Swapped}) derivation_task(f, g, order);
  } else {
    // Seeded cross-site sample, always including (l22_1, l22_2).
    std::mt19937 rng(20240605);
    std::vector<std::pair<int, int>> pairs = {{G.l(1, 2, 2), G.l(2, 2, 2)}};
    std::uniform_int_distribution<int> site(1, n), idx(1, 2);
    while (pairs.size() < 10) {
      int i = site(rng), j = site(rng);
      if (i == j) continue;
      std::pair<int, int> p = {G.l(i, idx(rng), idx(rng)), G.l(j, idx(rng), idx(rng))};
      if (std::find(pairs.begin(), pairs.end(), p) == pairs.end()) pairs.push_back(p);
    }
    for (auto [f, g] : pairs) derivation_task(f, g, SameSiteOrder::Printed);
  }
  return tasks;
}

}  // namespace qgraph
