#include "qgraph/skein.hpp"

#include <map>
#include <regex>
#include <stdexcept>

namespace qgraph {

namespace {

using El = Elem<RatFunc>;
using Cyc = Matrix<Cyclotomic>;

const UAlg<RatFunc>& G() { return generic_alg(); }

Inputs in_nl(int n, int l) { return {{"n", std::to_string(n)}, {"l", std::to_string(l)}}; }

std::string tuple_id(const std::vector<int>& t) {
  std::string s;
  for (int k : t) s += (s.empty() ? "" : "-") + std::to_string(k);
  return s;
}

bool out_of_bounds(const std::string& suite, const std::string& why, const Inputs& in, std::vector<Task>& out) {
  std::string msg = why + "; pass --override-bounds to run";
  out.push_back({suite + ".bound", "resource bound", in, [msg] { return CheckResult::skip(msg); }});
  return true;
}

void check_l(int l) {
  if (l < 3 || l % 2 == 0) throw std::invalid_argument("l must be odd and >= 3");
}

CheckResult equal_mat(const Cyc& got, const Cyc& want) {
  for (int i = 0; i < got.rows(); ++i)
    for (int j = 0; j < got.cols(); ++j)
      if (got(i, j) != want(i, j))
        return CheckResult::fail("entry (" + std::to_string(i) + ", " + std::to_string(j) + "): " + got(i, j).str() + " vs " +
                                 want(i, j).str());
  return CheckResult::pass();
}

Cyc specialized(const Matrix<RatFunc>& m, int l) {
  Cyc r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = specialize_at_root(m(i, j), l);
  return r;
}

/// First generator of L_{0,n} at eps that fails to commute with u.
CheckResult central_at_eps(const EpsElem& u, int n, int l) {
  const auto& A = root_alg(l);
  static const char* names[] = {"a", "b", "c", "d"};
  for (int site = 1; site <= n; ++site) {
    const AMat<Cyclotomic>& M = gen_matrix(A, n, site);
    for (int k = 0; k < 4; ++k) {
      EpsElem c = commutator(u, M(k / 2, k % 2));
      if (!c.is_zero()) return CheckResult::fail(std::string("[., ") + names[k] + "^(" + std::to_string(site) + ")] = " + c.str(6));
    }
  }
  return CheckResult::pass();
}

/// Commutation with the diagonal images Delta^{(n-1)}(E), Delta^{(n-1)}(F), Delta^{(n-1)}(K).
CheckResult diagonal_invariant_at_eps(const EpsElem& u, int n, int l) {
  const auto& A = root_alg(l);
  std::pair<const char*, EpsElem> gens[] = {{"E", EpsElem::E(A)}, {"F", EpsElem::F(A)}, {"K", EpsElem::K(A)}};
  for (const auto& [name, g] : gens) {
    EpsElem c = commutator(u, coproduct_iter(g, n));
    if (!c.is_zero()) return CheckResult::fail(std::string("[., Delta(") + name + ")] = " + c.str(6));
  }
  return CheckResult::pass();
}

}  // namespace

// ---------------------------------------------------------------- braiding

Matrix<Cyclotomic> braiding_matrix(int l) {
  check_l(l);
  const auto& A = root_alg(l);
  Module<Cyclotomic> V = module_V(A, 2);
  Cyclotomic i = CycloField::get(l).imag();
  return i * (flip_matrix<Cyclotomic>(2, 2) * r_matrix(A, V, V));
}

Matrix<Cyclotomic> kauffman_u(int l) {
  Cyclotomic zeta = CycloField::get(l).zeta();
  return zeta * (braiding_matrix(l) - zeta * Cyc::identity(4));
}

std::vector<Task> kauffman_suite(int l) {
  check_l(l);
  std::vector<Task> tasks;
  std::string pre = "skein.kauffman.l" + std::to_string(l) + ".";
  Inputs in = {{"l", std::to_string(l)}};
  auto field = [l]() -> const CycloField& { return CycloField::get(l); };

  tasks.push_back({pre + "zeta", "zeta^2 = -eps and -(zeta^2 + zeta^-2) = eps + eps^-1", in, [field] {
                     Cyclotomic z = field().zeta(), e = field().epsilon();
                     if (z * z != -e) return CheckResult::fail("zeta^2 = " + (z * z).str());
                     Cyclotomic d = -(z * z + (z * z).inverse());
                     return CheckResult::expect(d == e + e.inverse(), [&] { return "loop value " + d.str(); });
                   }});
  tasks.push_back({pre + "skein_relation",
                   "i (flip o R) = zeta id + zeta^-1 U with U the Temperley-Lieb intertwiner [[q, -1], [-1, q^-1]] on the weight-zero block",
                   in, [l, field] {
                     Cyclotomic z = field().zeta();
                     Cyc U = specialized(tl_element(G()), l);
                     return equal_mat(braiding_matrix(l), z * Cyc::identity(4) + z.inverse() * U);
                   }});
  tasks.push_back({pre + "u_square", "U^2 = -(zeta^2 + zeta^-2) U", in, [l, field] {
                     Cyclotomic z = field().zeta();
                     Cyc U = kauffman_u(l);
                     return equal_mat(U * U, -(z * z + (z * z).inverse()) * U);
                   }});
  tasks.push_back({pre + "u_rank_one", "U has rank 1", in, [l] {
                     int r = kauffman_u(l).rank();
                     return CheckResult::expect(r == 1, [&] { return "rank " + std::to_string(r); });
                   }});
  tasks.push_back({pre + "u_trivial_image", "E and F kill the image of U on V_2 (x) V_2 and K fixes it", in, [l] {
                     const auto& A = root_alg(l);
                     Module<Cyclotomic> V = module_V(A, 2);
                     Module<Cyclotomic> VV = tensor_module(A, V, V);
                     Cyc U = kauffman_u(l);
                     if (!(VV.E * U).is_zero()) return CheckResult::fail("E U != 0");
                     if (!(VV.F * U).is_zero()) return CheckResult::fail("F U != 0");
                     if (VV.K * U != U) return CheckResult::fail("K U != U");
                     if (U * VV.E != VV.E * U || U * VV.F != VV.F * U) return CheckResult::fail("U is not an intertwiner");
                     return CheckResult::pass();
                   }});
  tasks.push_back({pre + "inverse", "the inverse braiding is zeta^-1 id + zeta U", in, [l, field] {
                     Cyclotomic z = field().zeta();
                     return equal_mat(braiding_matrix(l) * (z.inverse() * Cyc::identity(4) + z * kauffman_u(l)), Cyc::identity(4));
                   }});
  tasks.push_back({pre + "eigenvalues", "eigenvalues zeta (three times) and -zeta^-3: (b - zeta)(b + zeta^-3) = 0, Tr b = 3 zeta - zeta^-3",
                   in, [l, field] {
                     Cyclotomic z = field().zeta();
                     Cyc b = braiding_matrix(l), I = Cyc::identity(4);
                     if (!((b - z * I) * (b + z.pow(-3) * I)).is_zero()) return CheckResult::fail("minimal polynomial");
                     Cyclotomic tr = b(0, 0) + b(1, 1) + b(2, 2) + b(3, 3);
                     return CheckResult::expect(tr == Cyclotomic(3) * z - z.pow(-3), [&] { return "trace " + tr.str(); });
                   }});
  return tasks;
}

// ---------------------------------------------------------------- curves

CurveSpec CurveSpec::parse(const std::string& s, int l) {
  static const std::regex re(R"(^(boundary:(\d+)|outer|arc:(\d+)\.\.(\d+))(\^(\d+|l))?(@(-?\d+))?$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw std::invalid_argument("bad curve spec '" + s + "'");
  CurveSpec c;
  if (m[2].matched) {
    c.kind = Kind::Boundary;
    c.first = std::stoi(m[2]);
  } else if (m[3].matched) {
    c.kind = Kind::Arc;
    c.first = std::stoi(m[3]);
    int last = std::stoi(m[4]);
    if (last < c.first) throw std::invalid_argument("empty arc in '" + s + "'");
    c.length = last - c.first + 1;
  } else {
    c.kind = Kind::Outer;
  }
  if (m[6].matched) c.power = m[6] == "l" ? l : std::stoi(m[6]);
  if (m[8].matched) c.lk = std::stoi(m[8]);
  return c;
}

std::string CurveSpec::str() const {
  std::string s;
  switch (kind) {
    case Kind::Boundary: s = "boundary:" + std::to_string(first); break;
    case Kind::Outer: s = "outer"; break;
    case Kind::Arc: s = "arc:" + std::to_string(first) + ".." + std::to_string(first + length - 1); break;
  }
  if (power != 1) s += "^" + std::to_string(power);
  if (lk != 0) s += "@" + std::to_string(lk);
  return s;
}

std::vector<int> CurveSpec::sites(int n) const {
  std::vector<int> t;
  if (kind == Kind::Boundary) return {first};
  if (kind == Kind::Outer)
    for (int k = 1; k <= n; ++k) t.push_back(k);
  else
    for (int k = first; k < first + length; ++k) t.push_back(k);
  return t;
}

void CurveSpec::validate(int n) const {
  if (power < 1) throw std::invalid_argument("Chebyshev power must be >= 1 in " + str());
  for (int k : sites(n))
    if (k < 1 || k > n) throw std::invalid_argument("site " + std::to_string(k) + " outside 1.." + std::to_string(n) + " in " + str());
}

El wilson_curve(const CurveSpec& c, int n) {
  c.validate(n);
  if (c.lk % 2 != 0) throw std::invalid_argument("odd i-exponent needs the root-of-unity field: " + c.str());
  std::vector<int> t = c.sites(n);
  El w = quantum_trace(product_matrix(G(), n, t.front(), t.back()), module_V(G(), 2));
  El r = chebyshev_eval(c.power, w, El::one(G(), n));
  return (c.lk / 2) % 2 ? -r : r;
}

EpsElem wilson_curve_eps(const CurveSpec& c, int n, int l) {
  check_l(l);
  c.validate(n);
  CurveSpec base = c;
  base.power = 1;
  base.lk = 0;
  EpsElem w = specialize_element(wilson_curve(base, n), l);
  EpsElem r = chebyshev_eval(c.power, w, EpsElem::one(root_alg(l), n));
  int k = ((c.lk % 4) + 4) % 4;
  return k ? r * CycloField::get(l).imag().pow(k) : r;
}

// ---------------------------------------------------------------- suites

std::vector<Task> wilson_suite(int n, bool override_bounds) {
  std::vector<Task> tasks;
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  Inputs in = {{"n", std::to_string(n)}};
  if (n > 3 && !override_bounds)
    out_of_bounds("skein.wilson", "n = " + std::to_string(n) + " is outside the default bound n <= 3", in, tasks);
  if (!tasks.empty()) return tasks;

  for (int i = 1; i <= n; ++i)
    tasks.push_back({"skein.wilson.boundary" + std::to_string(i), "the loop around puncture i maps to omega^(i)", in, [n, i] {
                       CurveSpec c;
                       c.first = i;
                       return CheckResult::expect(wilson_curve(c, n) == omega(G(), n, i), [] { return std::string("differs"); });
                     }});
  tasks.push_back({"skein.wilson.outer", "the outer boundary maps to eta", in, [n] {
                     CurveSpec c;
                     c.kind = CurveSpec::Kind::Outer;
                     return CheckResult::expect(wilson_curve(c, n) == eta(G(), n), [] { return std::string("differs"); });
                   }});
  if (n == 1)
    tasks.push_back({"skein.wilson.outer_is_boundary", "with one puncture the outer boundary and the puncture loop agree", in, [] {
                       El d = eta(G(), 1) - omega(G(), 1, 1);
                       return CheckResult::expect(d.is_zero(), [&] { return d.str(6); });
                     }});
  else
    tasks.push_back({"skein.wilson.full_arc", "the loop around all punctures 1..n equals eta", in, [n] {
                       CurveSpec c = CurveSpec::parse("arc:1.." + std::to_string(n), 3);
                       return CheckResult::expect(wilson_curve(c, n) == eta(G(), n), [] { return std::string("differs"); });
                     }});
  tasks.push_back({"skein.wilson.coproduct_route",
                   "M^(1) ... M^(n) equals the iterated coproduct of M applied entrywise", in, [n] {
                     AMat<RatFunc> want = gen_matrix(G(), 1, 1).map([n](const El& u) { return coproduct_iter(u, n); });
                     AMat<RatFunc> got = product_matrix(G(), n, 1, n);
                     return CheckResult::expect(got == want, [&] { return (got - want).residual_witness(); });
                   }});
  tasks.push_back({"skein.wilson.normalization", "i^2 multiplies W by -1, and T_2(W) = W^2 - 2", in, [n] {
                     CurveSpec c;
                     El w = wilson_curve(c, n);
                     c.lk = 2;
                     if (wilson_curve(c, n) != -w) return CheckResult::fail("lk = 2");
                     c.lk = 0;
                     c.power = 2;
                     El t2 = wilson_curve(c, n);
                     return CheckResult::expect(t2 == w * w - El::scalar(G(), n, RatFunc(2)), [&] { return t2.str(6); });
                   }});
  tasks.push_back({"skein.wilson.boundary_commute", "omega^(i) and eta pairwise commute", in, [n] {
                     std::vector<El> gens;
                     for (int i = 1; i <= n; ++i) gens.push_back(omega(G(), n, i));
                     gens.push_back(eta(G(), n));
                     for (size_t a = 0; a < gens.size(); ++a)
                       for (size_t b = a + 1; b < gens.size(); ++b) {
                         El c = commutator(gens[a], gens[b]);
                         if (!c.is_zero()) return CheckResult::fail(std::to_string(a) + ", " + std::to_string(b) + ": " + c.str(6));
                       }
                     return CheckResult::pass();
                   }});
  tasks.push_back({"skein.wilson.independence",
                   "monomials of degree <= 3 in omega^(1..n) and eta (omega^(1) alone for n = 1) are linearly independent",
                   {{"n", std::to_string(n)}, {"point", "v = 2"}}, [n] {
                     // Full rank after v -> 2 implies full rank over Q(v).
                     const long v0 = 2;
                     const auto& P = point_alg(v0);
                     std::vector<Elem<mpq_class>> vars;
                     for (int i = 1; i <= n; ++i) vars.push_back(specialize_point(omega(G(), n, i), v0));
                     if (n > 1) vars.push_back(specialize_point(eta(G(), n), v0));
                     std::vector<Elem<mpq_class>> monos = {Elem<mpq_class>::one(P, n)};
                     std::vector<std::pair<Elem<mpq_class>, size_t>> layer = {{monos[0], 0}};
                     for (int deg = 1; deg <= 3; ++deg) {
                       std::vector<std::pair<Elem<mpq_class>, size_t>> next;
                       for (const auto& [m, start] : layer)
                         for (size_t k = start; k < vars.size(); ++k) {
                           next.emplace_back(m * vars[k], k);
                           monos.push_back(next.back().first);
                         }
                       layer = std::move(next);
                     }
                     std::map<Key, int> rows;
                     for (const auto& m : monos)
                       for (const auto& [k, c] : m.terms()) rows.emplace(k, static_cast<int>(rows.size()));
                     Matrix<mpq_class> mat(static_cast<int>(rows.size()), static_cast<int>(monos.size()));
                     for (size_t j = 0; j < monos.size(); ++j)
                       for (const auto& [k, c] : monos[j].terms()) mat(rows[k], static_cast<int>(j)) = c;
                     int r = mat.rank();
                     return CheckResult::expect(r == static_cast<int>(monos.size()), [&] {
                       return "rank " + std::to_string(r) + " of " + std::to_string(monos.size()) + " monomials";
                     });
                   }});
  return tasks;
}

std::vector<Task> chebyshev_center_suite(int n, int l, bool override_bounds) {
  check_l(l);
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::vector<Task> tasks;
  bool ok = (l == 3 && n <= 3) || (l == 5 && n <= 1);
  if (!ok && !override_bounds) {
    out_of_bounds("skein.threaded",
                  "n = " + std::to_string(n) + ", l = " + std::to_string(l) + " is outside the default bound (l = 3, n <= 3 or l = 5, n = 1)",
                  in_nl(n, l), tasks);
    return tasks;
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      std::vector<int> t;
      for (int k = i; k <= j; ++k) t.push_back(k);
      CurveSpec c = CurveSpec::parse("arc:" + std::to_string(i) + ".." + std::to_string(j) + "^l", l);
      Inputs in = {{"n", std::to_string(n)}, {"l", std::to_string(l)}, {"curve", c.str()}};
      std::string id = "skein.threaded." + tuple_id(t);
      tasks.push_back({id + ".central", "T_l of the loop around punctures i..j is central at eps", in,
                       [c, n, l] { return central_at_eps(wilson_curve_eps(c, n, l), n, l); }});
      tasks.push_back({id + ".frobenius", "T_l of the loop around punctures i..j equals Tr(Fr M^(i) ... Fr M^(j))", in, [c, t, n, l] {
                         EpsElem d = wilson_curve_eps(c, n, l) - frobenius_trace(n, l, t);
                         return CheckResult::expect(d.is_zero(), [&] { return d.str(6); });
                       }});
    }
  return tasks;
}

std::vector<Task> curve_suite(const std::vector<CurveSpec>& curves, int n, int l, bool override_bounds) {
  check_l(l);
  std::vector<Task> tasks;
  if (n > 3 && !override_bounds) {
    out_of_bounds("skein.curve", "n = " + std::to_string(n) + " is outside the default bound n <= 3", in_nl(n, l), tasks);
    return tasks;
  }
  for (const CurveSpec& c : curves) {
    c.validate(n);
    bool full = c.kind == CurveSpec::Kind::Boundary || c.power % l == 0;
    Inputs in = {{"n", std::to_string(n)}, {"l", std::to_string(l)}, {"curve", c.str()}};
    tasks.push_back({"skein.curve." + c.str(),
                     full ? "the curve image is central at eps" : "the curve image commutes with the diagonal action at eps", in,
                     [c, n, l, full] {
                       EpsElem w = wilson_curve_eps(c, n, l);
                       return full ? central_at_eps(w, n, l) : diagonal_invariant_at_eps(w, n, l);
                     }});
  }
  return tasks;
}

std::vector<Task> skein_suite(int n, int l, bool override_bounds) {
  std::vector<Task> tasks = kauffman_suite(l);
  for (auto part : {wilson_suite(n, override_bounds), chebyshev_center_suite(n, l, override_bounds)})
    tasks.insert(tasks.end(), part.begin(), part.end());
  return tasks;
}

}  // namespace qgraph
