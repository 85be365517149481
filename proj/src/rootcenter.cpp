#include "qgraph/rootcenter.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>

namespace qgraph {

using AE = AMat<Cyclotomic>;

namespace {

const UAlg<Cyclotomic>& R(int l) { return root_alg(l); }

void check_args(int n, int l, int site) {
  if (l < 3 || l % 2 == 0) throw std::invalid_argument("l must be odd and >= 3");
  if (n < 1 || site < 1 || site > n) throw std::invalid_argument("site out of range");
}

Cyclotomic qdiff_pow(int l, int k) { return R(l).qdiff().pow(k); }

}  // namespace

EpsElem specialize_element(const Elem<RatFunc>& t, int l) { return specialize_elem(t, l); }

EpsElem z0_x(int n, int l, int site) {
  check_args(n, l, site);
  const auto& A = R(l);
  EpsElem e = EpsElem::E(A, n, site - 1).pow(l) * EpsElem::K(A, n, site - 1, -l);
  return e * (-qdiff_pow(l, l));
}

EpsElem z0_y(int n, int l, int site) {
  check_args(n, l, site);
  return EpsElem::F(R(l), n, site - 1).pow(l) * qdiff_pow(l, l);
}

EpsElem z0_z(int n, int l, int site, int power) {
  check_args(n, l, site);
  return EpsElem::K(R(l), n, site - 1, power * l);
}

const EpsElem& site_power(int n, int l, int site, char g) {
  check_args(n, l, site);
  using Key = std::tuple<int, int, int, char>;
  static std::map<Key, EpsElem> cache;
  static std::mutex mu;
  Key key{n, l, site, g};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  GenQuad<Cyclotomic> s = site_generators(R(l), n, site);
  const EpsElem* base = g == 'a' ? &s.a : g == 'b' ? &s.b : g == 'c' ? &s.c : g == 'd' ? &s.d : nullptr;
  if (!base) throw std::invalid_argument("generator must be one of a, b, c, d");
  EpsElem p = base->pow(l);
  std::lock_guard<std::mutex> lock(mu);
  return cache.try_emplace(key, std::move(p)).first->second;
}

FrImage frobenius(int n, int l, int site) {
  check_args(n, l, site);
  EpsElem w = omega(R(l), n, site);
  const EpsElem& dl = site_power(n, l, site, 'd');
  return {chebyshev_eval(l, w, EpsElem::one(R(l), n)) - dl, site_power(n, l, site, 'b'),
          site_power(n, l, site, 'c'), dl};
}

AE fr_matrix(int n, int l, int site) {
  FrImage f = frobenius(n, l, site);
  AE m(R(l), 2, n);
  m(0, 0) = f.a;
  m(0, 1) = f.b;
  m(1, 0) = f.c;
  m(1, 1) = f.d;
  return m;
}

namespace {

/// prod_{j=from..to} z^{p (j)}.
EpsElem z_run(int n, int l, int from, int to, int p) {
  EpsElem r = EpsElem::one(R(l), n);
  for (int j = from; j <= to; ++j) r *= z0_z(n, l, j, p);
  return r;
}

/// The image of ((eps - eps^{-1})F)^l under the iterated coproduct onto sites i+1..n:
/// sum_k z^{-1 (i+1)} ... z^{-1 (k-1)} y^{(k)}.
EpsElem f_power(int n, int l, int i) {
  EpsElem f(R(l), n);
  for (int k = i + 1; k <= n; ++k) f += z_run(n, l, i + 1, k - 1, -1) * z0_y(n, l, k);
  return f;
}

/// T_l(Omega) at a site as z + z^{-1} - xyz.
EpsElem t_omega_coords(int n, int l, int i) {
  return z0_z(n, l, i) + z0_z(n, l, i, -1) - z0_x(n, l, i) * z0_y(n, l, i) * z0_z(n, l, i);
}

}  // namespace

EpsElem closed_c_power(int n, int l, int site) {
  check_args(n, l, site);
  return -(z0_x(n, l, site) * z_run(n, l, site + 1, n, -1));
}

EpsElem closed_d_power(int n, int l, int site) {
  check_args(n, l, site);
  return z0_z(n, l, site, -1) + z0_x(n, l, site) * f_power(n, l, site);
}

EpsElem closed_b_power(int n, int l, int site) {
  check_args(n, l, site);
  EpsElem Z = z_run(n, l, site + 1, n, 1);
  EpsElem f = f_power(n, l, site);
  EpsElem T = t_omega_coords(n, l, site) - z0_z(n, l, site, -1) * Cyclotomic(2);
  return Z * (z0_y(n, l, site) - f * T + f * f * z0_x(n, l, site));
}

namespace {

AE tuple_product(int n, int l, const std::vector<int>& sites) {
  if (sites.empty()) throw std::invalid_argument("empty site tuple");
  AE P = gen_matrix(R(l), n, sites[0]);
  for (size_t k = 1; k < sites.size(); ++k) P = P * gen_matrix(R(l), n, sites[k]);
  return P;
}

}  // namespace

EpsElem threaded_trace(int n, int l, const std::vector<int>& sites) {
  AE P = tuple_product(n, l, sites);
  EpsElem t = P(0, 0) * R(l).q(1) + P(1, 1) * R(l).q(-1);
  return chebyshev_eval(l, t, EpsElem::one(R(l), n));
}

EpsElem frobenius_trace(int n, int l, const std::vector<int>& sites) {
  if (sites.empty()) throw std::invalid_argument("empty site tuple");
  AE P = fr_matrix(n, l, sites[0]);
  for (size_t k = 1; k < sites.size(); ++k) P = P * fr_matrix(n, l, sites[k]);
  return P(0, 0) + P(1, 1);
}

// ---------------------------------------------------------------- suites

namespace {

CheckResult zero_elem(const EpsElem& r) {
  return CheckResult::expect(r.is_zero(), [&] { return r.str(8); });
}

Inputs in_nl(int n, int l) { return {{"n", std::to_string(n)}, {"l", std::to_string(l)}}; }
Inputs in_site(int n, int l, int i) {
  return {{"n", std::to_string(n)}, {"l", std::to_string(l)}, {"site", std::to_string(i)}};
}

std::string sup(const std::string& name, int i) { return name + "^(" + std::to_string(i) + ")"; }

/// First nonzero [z, g] over the 4n generators, as a failure.
CheckResult central(int n, int l, const EpsElem& z) {
  for (int i = 1; i <= n; ++i) {
    GenQuad<Cyclotomic> g = site_generators(R(l), n, i);
    std::pair<char, const EpsElem*> gens[] = {{'a', &g.a}, {'b', &g.b}, {'c', &g.c}, {'d', &g.d}};
    for (const auto& [name, y] : gens) {
      EpsElem r = commutator(z, *y);
      if (!r.is_zero()) return CheckResult::fail(std::string("[z, ") + name + "^(" + std::to_string(i) + ")] = " + r.str(8));
    }
  }
  return CheckResult::pass();
}

bool within_bounds(int n, int l) { return n >= 1 && n <= 3 && (l == 3 || l == 5); }

/// Validates l and returns a skipped entry when the run is out of bounds.
bool guarded(const std::string& suite, int n, int l, bool override_bounds, std::vector<Task>& out) {
  if (l < 3 || l % 2 == 0) throw std::invalid_argument("l must be odd and >= 3");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (override_bounds || within_bounds(n, l)) return false;
  std::string why = "n = " + std::to_string(n) + ", l = " + std::to_string(l) +
                    " is outside the default bound n <= 3, l in {3, 5}; pass --override-bounds to run";
  out.push_back({suite + ".bound", "resource bound", in_nl(n, l), [why] { return CheckResult::skip(why); }});
  return true;
}

std::string tuple_name(const std::vector<int>& s) {
  std::string r;
  for (int i : s) r += (r.empty() ? "" : "-") + std::to_string(i);
  return r;
}

}  // namespace

std::vector<Task> center_suite(int n, int l, bool override_bounds) {
  std::vector<Task> tasks;
  if (guarded("center", n, l, override_bounds, tasks)) return tasks;

  tasks.push_back({"center.specialize.generators", "Phi_n images at eps equal the specialized generic images",
                   in_nl(n, l), [n, l] {
                     for (int i = 1; i <= n; ++i) {
                       const AMat<RatFunc>& G = gen_matrix(generic_alg(), n, i);
                       const AE& E = gen_matrix(R(l), n, i);
                       for (int r = 0; r < 2; ++r)
                         for (int t = 0; t < 2; ++t) {
                           EpsElem d = specialize_element(G(r, t), l) - E(r, t);
                           if (!d.is_zero()) return CheckResult::fail(sup("M", i) + " entry differs: " + d.str(8));
                         }
                     }
                     return CheckResult::pass();
                   }});

  for (int i = 1; i <= n; ++i) {
    for (char g : {'b', 'c', 'd'}) {
      std::string name(1, g);
      tasks.push_back({"center.power." + name + ".site" + std::to_string(i),
                       name + "^(i)l commutes with all 4n generators", in_site(n, l, i),
                       [n, l, i, g] { return central(n, l, site_power(n, l, i, g)); }});
    }
    tasks.push_back({"center.omega.site" + std::to_string(i), "omega^(i) commutes with all 4n generators at eps",
                     in_site(n, l, i), [n, l, i] { return central(n, l, omega(R(l), n, i)); }});
    tasks.push_back({"center.degree_l_relation.site" + std::to_string(i),
                     "d^l T_l(omega) - d^{2l} - 1 = b^l c^l at each site", in_site(n, l, i), [n, l, i] {
                       const EpsElem& b = site_power(n, l, i, 'b');
                       const EpsElem& c = site_power(n, l, i, 'c');
                       const EpsElem& d = site_power(n, l, i, 'd');
                       EpsElem T = chebyshev_eval(l, omega(R(l), n, i), EpsElem::one(R(l), n));
                       return zero_elem(d * T - d * d - EpsElem::one(R(l), n) - b * c);
                     }});
    tasks.push_back({"center.closed.c.site" + std::to_string(i),
                     "c^(i)l = -x^(i) z^(i+1)-1 ... z^(n)-1", in_site(n, l, i),
                     [n, l, i] { return zero_elem(site_power(n, l, i, 'c') - closed_c_power(n, l, i)); }});
    tasks.push_back({"center.closed.d.site" + std::to_string(i),
                     "d^(i)l = z^(i)-1 + x^(i) (y^(i+1) + sum z^-1 ... z^-1 y)", in_site(n, l, i),
                     [n, l, i] { return zero_elem(site_power(n, l, i, 'd') - closed_d_power(n, l, i)); }});
    tasks.push_back({"center.closed.b.site" + std::to_string(i),
                     "b^(i)l from the degree-l relation in the x, y, z coordinates", in_site(n, l, i),
                     [n, l, i] { return zero_elem(site_power(n, l, i, 'b') - closed_b_power(n, l, i)); }});
  }

  tasks.push_back({"center.chebyshev_casimir", "T_l(Omega) = (eps - eps^{-1})^{2l} E^l F^l + K^l + K^{-l}",
                   {{"l", std::to_string(l)}}, [l] {
                     const auto& A = R(l);
                     EpsElem lhs = chebyshev_eval(l, casimir(A), EpsElem::one(A, 1));
                     EpsElem rhs = EpsElem::E(A).pow(l) * EpsElem::F(A).pow(l) * qdiff_pow(l, 2 * l) +
                                   EpsElem::K(A, 1, 0, l) + EpsElem::K(A, 1, 0, -l);
                     return zero_elem(lhs - rhs);
                   }});
  tasks.push_back({"center.chebyshev_casimir.coords", "T_l(Omega) = z + z^{-1} - xyz", {{"l", std::to_string(l)}},
                   [l] {
                     const auto& A = R(l);
                     EpsElem lhs = chebyshev_eval(l, casimir(A), EpsElem::one(A, 1));
                     return zero_elem(lhs - t_omega_coords(1, l, 1));
                   }});
  tasks.push_back({"center.z0.central", "x, y, z^{+-1} are central in U_eps", {{"l", std::to_string(l)}}, [l] {
                     const auto& A = R(l);
                     EpsElem gens[] = {EpsElem::E(A), EpsElem::F(A), EpsElem::K(A), EpsElem::K(A, 1, 0, -1)};
                     EpsElem zs[] = {z0_x(1, l, 1), z0_y(1, l, 1), z0_z(1, l, 1), z0_z(1, l, 1, -1)};
                     for (const EpsElem& z : zs)
                       for (const EpsElem& g : gens) {
                         EpsElem r = commutator(z, g);
                         if (!r.is_zero()) return CheckResult::fail(r.str(8));
                       }
                     return CheckResult::pass();
                   }});
  return tasks;
}

std::vector<Task> frobenius_suite(int n, int l, bool override_bounds) {
  std::vector<Task> tasks;
  if (guarded("frobenius", n, l, override_bounds, tasks)) return tasks;

  for (int i = 1; i <= n; ++i) {
    tasks.push_back({"frobenius.det.site" + std::to_string(i), "Fr(a)Fr(d) - Fr(b)Fr(c) = 1", in_site(n, l, i),
                     [n, l, i] {
                       FrImage f = frobenius(n, l, i);
                       return zero_elem(f.a * f.d - f.b * f.c - EpsElem::one(R(l), n));
                     }});
    tasks.push_back({"frobenius.trace.site" + std::to_string(i), "T_l(qTr M^(i)) = Tr(Fr M^(i))", in_site(n, l, i),
                     [n, l, i] { return zero_elem(threaded_trace(n, l, {i}) - frobenius_trace(n, l, {i})); }});
    tasks.push_back({"frobenius.a_power.site" + std::to_string(i),
                     "Fr(a) = a^l + Q_l(a, d) with Q_l(X, Y) = T_l(eps X + eps^{-1} Y) - X^l - Y^l", in_site(n, l, i),
                     [n, l, i] {
                       const auto& A = R(l);
                       GenQuad<Cyclotomic> g = site_generators(A, n, i);
                       EpsElem al = g.a.pow(l), dl = g.d.pow(l);
                       EpsElem Q = chebyshev_eval(l, g.a * A.q(1) + g.d * A.q(-1), EpsElem::one(A, n)) - al - dl;
                       return zero_elem(al + Q - frobenius(n, l, i).a);
                     }});
  }

  tasks.push_back({"frobenius.commutative", "all pairwise commutators of Fr images vanish", in_nl(n, l), [n, l] {
                     std::vector<std::pair<std::string, EpsElem>> all;
                     for (int i = 1; i <= n; ++i) {
                       FrImage f = frobenius(n, l, i);
                       all.push_back({sup("Fr a", i), f.a});
                       all.push_back({sup("Fr b", i), f.b});
                       all.push_back({sup("Fr c", i), f.c});
                       all.push_back({sup("Fr d", i), f.d});
                     }
                     for (size_t s = 0; s < all.size(); ++s)
                       for (size_t t = s + 1; t < all.size(); ++t) {
                         EpsElem r = commutator(all[s].second, all[t].second);
                         if (!r.is_zero())
                           return CheckResult::fail("[" + all[s].first + ", " + all[t].first + "] = " + r.str(8));
                       }
                     return CheckResult::pass();
                   }});

  if (n >= 2) {
    const char* entry[] = {"11", "12", "21", "22"};
    for (int e = 0; e < 4; ++e) {
      int r = e / 2, t = e % 2;
      tasks.push_back({std::string("frobenius.coproduct.") + entry[e],
                       "iterated coproduct of Phi_1(Fr M) equals Fr M^(1) ... Fr M^(n), entry " + std::string(entry[e]),
                       in_nl(n, l), [n, l, r, t] {
                         AE one = fr_matrix(1, l, 1);
                         AE P = fr_matrix(n, l, 1);
                         for (int i = 2; i <= n; ++i) P = P * fr_matrix(n, l, i);
                         return zero_elem(coproduct_iter(one(r, t), n) - P(r, t));
                       }});
    }
  }

  tasks.push_back({"frobenius.hopf.k", "Delta(K^{-l}) = K^{-l} (x) K^{-l}", {{"l", std::to_string(l)}}, [l] {
                     const auto& A = R(l);
                     EpsElem lhs = coproduct(EpsElem::K(A, 1, 0, -1)).pow(l);
                     return zero_elem(lhs - EpsElem::K(A, 2, 0, -l) * EpsElem::K(A, 2, 1, -l));
                   }});
  tasks.push_back({"frobenius.hopf.f", "Delta(F)^l = F^l (x) 1 + K^{-l} (x) F^l", {{"l", std::to_string(l)}}, [l] {
                     const auto& A = R(l);
                     EpsElem lhs = coproduct(EpsElem::F(A)).pow(l);
                     EpsElem rhs = EpsElem::F(A, 2, 0).pow(l) + EpsElem::K(A, 2, 0, -l) * EpsElem::F(A, 2, 1).pow(l);
                     return zero_elem(lhs - rhs);
                   }});
  tasks.push_back({"frobenius.hopf.e", "Delta(E)^l = E^l (x) K^l + 1 (x) E^l", {{"l", std::to_string(l)}}, [l] {
                     const auto& A = R(l);
                     EpsElem lhs = coproduct(EpsElem::E(A)).pow(l);
                     EpsElem rhs = EpsElem::E(A, 2, 0).pow(l) * EpsElem::K(A, 2, 1, l) + EpsElem::E(A, 2, 1).pow(l);
                     return zero_elem(lhs - rhs);
                   }});
  tasks.push_back({"frobenius.qbinomial", "the Gauss polynomials [l choose k]_q vanish at eps for 0 < k < l",
                   {{"l", std::to_string(l)}}, [l] {
                     const auto& G = generic_alg();
                     for (int k = 0; k <= l; ++k) {
                       RatFunc g = G.qfactorial(l) / (G.qfactorial(k) * G.qfactorial(l - k));
                       Cyclotomic v = specialize_at_root(g, l);
                       bool edge = k == 0 || k == l;
                       if (edge ? v != Cyclotomic(1) : !v.is_zero())
                         return CheckResult::fail("k = " + std::to_string(k) + ": " + v.str());
                     }
                     return CheckResult::pass();
                   }});
  return tasks;
}

std::vector<Task> threading_suite(int n, int l, bool override_bounds) {
  std::vector<Task> tasks;
  if (guarded("threading", n, l, override_bounds, tasks)) return tasks;
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> s;
    for (int i = 1; i <= n; ++i)
      if (mask & (1 << (i - 1))) s.push_back(i);
    std::string id = tuple_name(s);
    Inputs in = in_nl(n, l);
    in.push_back({"sites", id});
    tasks.push_back({"threading.trace." + id, "T_l(qTr(M^(i1)...M^(ik))) = Tr(Fr M^(i1) ... Fr M^(ik))", in,
                     [n, l, s] { return zero_elem(threaded_trace(n, l, s) - frobenius_trace(n, l, s)); }});
    tasks.push_back({"threading.central." + id, "T_l(qTr(M^(i1)...M^(ik))) commutes with all 4n generators", in,
                     [n, l, s] { return central(n, l, threaded_trace(n, l, s)); }});
  }
  return tasks;
}

}  // namespace qgraph
