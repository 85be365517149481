#include "qgraph/qca.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <tuple>

namespace qgraph {

namespace {

using RE = Elem<RatFunc>;

const UAlg<RatFunc>& G() { return generic_alg(); }
const UAlg<Cyclotomic>& R(int l) { return root_alg(l); }
RatFunc qd() { return RatFunc::q(1) - RatFunc::q(-1); }

RatFunc qd_pow(int k) {
  RatFunc r(1);
  for (int i = 0; i < k; ++i) r *= qd();
  return r;
}

void check_site(int n, int site) {
  if (n < 1 || site < 1 || site > n) throw std::invalid_argument("site out of range");
}

}  // namespace

const char* central_name(Central a) {
  switch (a) {
    case Central::X: return "x";
    case Central::Y: return "y";
    case Central::Z: return "z";
    case Central::Zinv: return "z^-1";
    case Central::E: return "e";
    case Central::F: return "f";
    case Central::Omega: return "Omega";
  }
  return "?";
}

RE central_lift(Central a, int n, int site, int l) {
  check_site(n, site);
  int s = site - 1;
  RE E = RE::E(G(), n, s).pow(l), F = RE::F(G(), n, s).pow(l);
  RE Kp = RE::K(G(), n, s, l), Km = RE::K(G(), n, s, -l);
  switch (a) {
    case Central::X: return E * Km * (-qd_pow(l));
    case Central::Y: return F * qd_pow(l);
    case Central::Z: return Kp;
    case Central::Zinv: return Km;
    case Central::E: return E * qd_pow(l);
    case Central::F: return F * Kp * (-qd_pow(l));
    case Central::Omega: return embed(casimir(G()), n, {s});
  }
  throw std::invalid_argument("unknown central element");
}

EpsElem derivation(const RE& a_lift, const RE& u_lift, int l) {
  RatFunc h = RatFunc::q(l) - RatFunc::q(-l);
  RatFunc factor = RatFunc(-1) / (RatFunc(l) * h);
  return specialize_elem(commutator(a_lift, u_lift) * factor, l);
}

// ---------------------------------------------------------------- Derivation

Derivation::Derivation(int n, int l) : n_(n), l_(l) {
  const auto& A = R(l);
  v_.resize(n);
  for (auto& row : v_)
    for (auto& e : row) e = EpsElem(A, n);
}

Derivation Derivation::from_central(const RE& a_lift, int l) {
  int n = a_lift.arity();
  Derivation D(n, l);
  for (int s = 0; s < n; ++s) {
    D.v_[s][E] = derivation(a_lift, RE::E(G(), n, s), l);
    D.v_[s][F] = derivation(a_lift, RE::F(G(), n, s), l);
    D.v_[s][K] = derivation(a_lift, RE::K(G(), n, s), l);
    D.v_[s][Kinv] = derivation(a_lift, RE::K(G(), n, s, -1), l);
  }
  return D;
}

EpsElem Derivation::power_image(int slot, Gen g, int k) const {
  const auto& A = R(l_);
  EpsElem X = g == E ? EpsElem::E(A, n_, slot)
              : g == F ? EpsElem::F(A, n_, slot)
              : EpsElem::K(A, n_, slot, g == K ? 1 : -1);
  EpsElem r(A, n_);
  if (v_[slot][g].is_zero()) return r;
  for (int j = 0; j < k; ++j) r += X.pow(j) * v_[slot][g] * X.pow(k - 1 - j);
  return r;
}

EpsElem Derivation::apply(const EpsElem& u) const {
  const auto& A = R(l_);
  std::map<std::tuple<int, int, int>, EpsElem> memo;
  auto pw = [&](int slot, Gen g, int k) -> const EpsElem& {
    auto key = std::make_tuple(slot, static_cast<int>(g), k);
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, power_image(slot, g, k)).first;
    return it->second;
  };
  EpsElem out(A, n_);
  for (const auto& [key, c] : u.terms()) {
    std::vector<EpsElem> part(n_);
    for (int s = 0; s < n_; ++s) {
      Key k;
      k.m[s] = key.m[s];
      part[s] = EpsElem::from_key(A, n_, k, Cyclotomic(1));
    }
    for (int s = 0; s < n_; ++s) {
      const Mono& m = key.m[s];
      if (m.is_one()) continue;
      EpsElem Fa = EpsElem::mono(A, n_, s, {m.a, 0, 0});
      EpsElem Kb = EpsElem::mono(A, n_, s, {0, m.b, 0});
      EpsElem Ec = EpsElem::mono(A, n_, s, {0, 0, m.c});
      EpsElem d(A, n_);
      if (m.a) d += pw(s, F, m.a) * Kb * Ec;
      if (m.b) d += Fa * pw(s, m.b > 0 ? K : Kinv, std::abs(m.b)) * Ec;
      if (m.c) d += Fa * Kb * pw(s, E, m.c);
      if (d.is_zero()) continue;
      EpsElem t = EpsElem::one(A, n_);
      for (int r = 0; r < s; ++r) t *= part[r];
      t *= d;
      for (int r = s + 1; r < n_; ++r) t *= part[r];
      out += t * c;
    }
  }
  return out;
}

Derivation Derivation::operator+(const Derivation& o) const {
  Derivation r = *this;
  for (int s = 0; s < n_; ++s)
    for (int g = 0; g < 4; ++g) r.v_[s][g] += o.v_[s][g];
  return r;
}

Derivation Derivation::scaled(const EpsElem& c) const {
  Derivation r = *this;
  for (auto& row : r.v_)
    for (auto& e : row) e = c * e;
  return r;
}

Derivation Derivation::bracket(const Derivation& a, const Derivation& b) {
  Derivation r(a.n_, a.l_);
  for (int s = 0; s < a.n_; ++s)
    for (int g = 0; g < 4; ++g) r.v_[s][g] = a.apply(b.v_[s][g]) - b.apply(a.v_[s][g]);
  return r;
}

std::string Derivation::differs(const Derivation& o) const {
  static const char* names[] = {"E", "F", "K", "K^-1"};
  for (int s = 0; s < n_; ++s)
    for (int g = 0; g < 4; ++g) {
      EpsElem d = v_[s][g] - o.v_[s][g];
      if (!d.is_zero()) return std::string("on ") + names[g] + "^(" + std::to_string(s + 1) + "): " + d.str(8);
    }
  return {};
}

// ---------------------------------------------------------------- the triple

namespace {

/// Memoized site derivations, keyed by (kind, n, l, site).
const Derivation& site_derivation(char kind, int n, int l, int site) {
  using Key = std::tuple<char, int, int, int>;
  static std::map<Key, Derivation> cache;
  static std::mutex mu;
  Key key{kind, n, l, site};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Derivation D(n, l);
  if (site == 0) {
    for (int i = 1; i <= n; ++i) D = D + site_derivation(kind, n, l, i);
  } else if (kind == 'e') {
    D = Derivation::from_central(central_lift(Central::X, n, site, l), l).scaled(z0_z(n, l, site));
  } else if (kind == 'f') {
    D = Derivation::from_central(central_lift(Central::Y, n, site, l), l).scaled(-z0_z(n, l, site));
  } else {
    D = Derivation::from_central(central_lift(Central::Z, n, site, l), l)
            .scaled(z0_z(n, l, site, -1) * Cyclotomic(-2));
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.try_emplace(key, std::move(D)).first->second;
}

}  // namespace

Derivation qca_e(int n, int l, int site) { return site_derivation('e', n, l, site); }
Derivation qca_f(int n, int l, int site) { return site_derivation('f', n, l, site); }
Derivation qca_h(int n, int l, int site) { return site_derivation('h', n, l, site); }

std::vector<EpsElem> exp_series(const Derivation& D, const EpsElem& u, int order) {
  std::vector<EpsElem> out{u};
  EpsElem w = u;
  mpq_class fact = 1;
  for (int k = 1; k <= order; ++k) {
    w = D.apply(w);
    fact *= k;
    out.push_back(w * Cyclotomic(mpq_class(1) / fact));
  }
  return out;
}

std::vector<mpq_class> binomial_series(const mpq_class& alpha, int order) {
  std::vector<mpq_class> c{1};
  for (int k = 1; k <= order; ++k) c.push_back(c.back() * (alpha - (k - 1)) / k);
  return c;
}

std::vector<mpq_class> psi_series(const mpq_class& alpha, int order) {
  std::vector<mpq_class> b = binomial_series(alpha, order + 1);
  std::vector<mpq_class> c;
  for (int m = 0; m <= order; ++m) c.push_back((m % 2 == 0 ? -1 : 1) * b[m + 1]);
  return c;
}

// ---------------------------------------------------------------- suites

namespace {

CheckResult zero_elem(const EpsElem& r) {
  return CheckResult::expect(r.is_zero(), [&] { return r.str(8); });
}

Inputs in_nl(int n, int l) { return {{"n", std::to_string(n)}, {"l", std::to_string(l)}}; }

bool guarded(const std::string& suite, int n, int l, int order, bool override_bounds, std::vector<Task>& out) {
  if (l < 3 || l % 2 == 0) throw std::invalid_argument("l must be odd and >= 3");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (override_bounds || (n <= 2 && (l == 3 || l == 5) && order <= 6)) return false;
  std::string why = "n = " + std::to_string(n) + ", l = " + std::to_string(l) + ", order = " + std::to_string(order) +
                    " is outside the default bound n <= 2, l in {3, 5}, order <= 6; pass --override-bounds to run";
  out.push_back({suite + ".bound", "resource bound", in_nl(n, l), [why] { return CheckResult::skip(why); }});
  return true;
}

/// [K; r] = (K eps^r - K^{-1} eps^{-r}) / (eps - eps^{-1}) at one slot.
EpsElem qbracket_K(int l, int r) {
  const auto& A = R(l);
  return (EpsElem::K(A) * A.q(r) - EpsElem::K(A, 1, 0, -1) * A.q(-r)) * A.qdiff().inverse();
}

Cyclotomic cd_pow(int l, int k) { return R(l).qdiff().pow(k); }

/// Random element of U_q^{(x)n} with Laurent coefficients and short words.
RE random_elem(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> co(-3, 3), ex(-2, 2), len(0, 3), letter(0, 3), slot(0, n - 1);
  RE r(G(), n);
  for (int t = 0; t < 3; ++t) {
    RE w = RE::one(G(), n);
    int L = len(rng);
    for (int i = 0; i < L; ++i) {
      int x = letter(rng), s = slot(rng);
      w *= x == 0 ? RE::E(G(), n, s) : x == 1 ? RE::F(G(), n, s) : RE::K(G(), n, s, x == 2 ? 1 : -1);
    }
    r += w * RatFunc(LaurentPoly::monomial(co(rng), ex(rng)));
  }
  return r;
}

std::vector<std::pair<std::string, RE>> generic_generators(int n) {
  std::vector<std::pair<std::string, RE>> g;
  for (int s = 0; s < n; ++s) {
    std::string i = "^(" + std::to_string(s + 1) + ")";
    g.push_back({"E" + i, RE::E(G(), n, s)});
    g.push_back({"F" + i, RE::F(G(), n, s)});
    g.push_back({"K" + i, RE::K(G(), n, s)});
    g.push_back({"K^-1" + i, RE::K(G(), n, s, -1)});
  }
  return g;
}

/// The braid automorphism T_1: K -> K^{-1}, E -> -F K^{-1}, F -> -K E.
template <class C>
Elem<C> braid_t1(const Elem<C>& u) {
  const UAlg<C>& A = u.alg();
  using El = Elem<C>;
  return apply_hom<C>(u, 1, [&](int, Gen g) {
    switch (g) {
      case Gen::K: return El::K(A, 1, 0, -1);
      case Gen::Kinv: return El::K(A);
      case Gen::E: return -(El::F(A) * El::K(A, 1, 0, -1));
      case Gen::F: return -(El::K(A) * El::E(A));
    }
    return El::one(A, 1);
  });
}

/// Compares a computed series with expected coefficients.
CheckResult series_match(const std::vector<EpsElem>& got, const std::vector<EpsElem>& want) {
  for (size_t k = 0; k < got.size(); ++k) {
    EpsElem d = got[k] - want[k];
    if (!d.is_zero()) return CheckResult::fail("t^" + std::to_string(k) + ": " + d.str(8));
  }
  return CheckResult::pass();
}

/// J = (c~ - (1 - x~y~ - z~^-2)) / (q^l - q^{-l}) at eps, where c~ = -[x~, y~] / (l (q^l - q^{-l})).
EpsElem lift_defect_xy(int n, int l, int site) {
  RE x = central_lift(Central::X, 1, 1, l), y = central_lift(Central::Y, 1, 1, l), zi = central_lift(Central::Zinv, 1, 1, l);
  RatFunc h = RatFunc::q(l) - RatFunc::q(-l);
  RE c = commutator(x, y) * (RatFunc(-1) / (RatFunc(l) * h));
  RE J = (c - (RE::one(G(), 1) - x * y - zi * zi)) * h.inverse();
  return embed(specialize_elem(J, l), n, {site - 1});
}

/// [[z - zxy, y], [-x, z^-1]] at one site, row-major.
std::array<EpsElem, 4> site_matrix(int n, int l, int site) {
  EpsElem x = z0_x(n, l, site), y = z0_y(n, l, site), z = z0_z(n, l, site);
  return {z - z * x * y, y, -x, z0_z(n, l, site, -1)};
}

EpsElem local_trace(int n, int l, const std::vector<int>& sites) {
  std::array<EpsElem, 4> p = site_matrix(n, l, sites[0]);
  for (size_t k = 1; k < sites.size(); ++k) {
    auto m = site_matrix(n, l, sites[k]);
    p = {p[0] * m[0] + p[1] * m[2], p[0] * m[1] + p[1] * m[3], p[2] * m[0] + p[3] * m[2], p[2] * m[1] + p[3] * m[3]};
  }
  return p[0] + p[3];
}

/// K^+-1 at every slot and x, y, z^+-1, Omega at every site.
std::vector<std::pair<std::string, EpsElem>> center_probes(int n, int l) {
  const auto& A = R(l);
  std::vector<std::pair<std::string, EpsElem>> out;
  for (int i = 1; i <= n; ++i) {
    std::string t = "^(" + std::to_string(i) + ")";
    out.push_back({"K" + t, EpsElem::K(A, n, i - 1)});
    out.push_back({"K^-1" + t, EpsElem::K(A, n, i - 1, -1)});
    out.push_back({"x" + t, z0_x(n, l, i)});
    out.push_back({"y" + t, z0_y(n, l, i)});
    out.push_back({"z" + t, z0_z(n, l, i)});
    out.push_back({"z^-1" + t, z0_z(n, l, i, -1)});
    out.push_back({"Omega" + t, embed(casimir(A), n, {i - 1})});
  }
  return out;
}

}  // namespace

std::vector<Task> qca_derivation_suite(int n, int l, bool override_bounds) {
  std::vector<Task> tasks;
  if (guarded("qca.derivation", n, l, 0, override_bounds, tasks)) return tasks;
  Inputs in_l = {{"l", std::to_string(l)}};

  struct Value {
    std::string id, statement;
    Central a;
    std::function<RE()> u;
    std::function<EpsElem()> expect;
  };
  const auto& A = R(l);
  auto one = [&A] { return EpsElem::one(A, 1); };
  mpq_class il = mpq_class(1, l);
  EpsElem z = z0_z(1, l, 1), y = z0_y(1, l, 1), x = z0_x(1, l, 1);
  EpsElem e = -(x * z);
  EpsElem Ee = EpsElem::E(A), Fe = EpsElem::F(A), Ke = EpsElem::K(A), Ki = EpsElem::K(A, 1, 0, -1);
  std::vector<Value> values = {
      {"z.K", "D_z(K) = 0", Central::Z, [] { return RE::K(G()); }, [&A] { return EpsElem(A, 1); }},
      {"z.E", "D_z(E) = -(1/l) z E", Central::Z, [] { return RE::E(G()); },
       [=] { return z * Ee * Cyclotomic(-il); }},
      {"z.F", "D_z(F) = (1/l) z F", Central::Z, [] { return RE::F(G()); }, [=] { return z * Fe * Cyclotomic(il); }},
      {"e.K", "D_e(K) = (1/l) e K", Central::E, [] { return RE::K(G()); }, [=] { return e * Ke * Cyclotomic(il); }},
      {"e.E", "D_e(E) = 0", Central::E, [] { return RE::E(G()); }, [&A] { return EpsElem(A, 1); }},
      {"e.F", "D_e(F) = -(1/l)(eps - eps^{-1})^{l-1} [K;1] E^{l-1}", Central::E, [] { return RE::F(G()); },
       [=] { return qbracket_K(l, 1) * Ee.pow(l - 1) * (cd_pow(l, l - 1) * Cyclotomic(-il)); }},
      {"y.K", "D_y(K) = -(1/l) y K", Central::Y, [] { return RE::K(G()); }, [=] { return y * Ke * Cyclotomic(-il); }},
      {"y.F", "D_y(F) = 0", Central::Y, [] { return RE::F(G()); }, [&A] { return EpsElem(A, 1); }},
      {"y.E", "D_y(E) = (1/l)(eps - eps^{-1})^{l-1} [K;-1] F^{l-1}", Central::Y, [] { return RE::E(G()); },
       [=] { return qbracket_K(l, -1) * Fe.pow(l - 1) * (cd_pow(l, l - 1) * Cyclotomic(il)); }},
      {"x.Kinv", "D_x(K^{-1}) = -(1/l) x K^{-1}", Central::X, [] { return RE::K(G(), 1, 0, -1); },
       [=] { return x * Ki * Cyclotomic(-il); }},
      {"x.KinvE", "D_x(K^{-1} E) = 0", Central::X, [] { return RE::K(G(), 1, 0, -1) * RE::E(G()); },
       [&A] { return EpsElem(A, 1); }},
      {"x.FK", "D_x(F K) = (1/l)(eps - eps^{-1})^{l-1} [K;1] (K^{-1} E)^{l-1}", Central::X,
       [] { return RE::F(G()) * RE::K(G()); },
       [=] { return qbracket_K(l, 1) * (Ki * Ee).pow(l - 1) * (cd_pow(l, l - 1) * Cyclotomic(il)); }},
      {"omega.E", "D_Omega = 0 (on E)", Central::Omega, [] { return RE::E(G()); }, [&A] { return EpsElem(A, 1); }},
  };
  (void)one;
  for (const Value& v : values)
    tasks.push_back({"qca.value." + v.id, v.statement, in_l, [v, l] {
                       return zero_elem(derivation(central_lift(v.a, 1, 1, l), v.u(), l) - v.expect());
                     }});

  // Junk on u~ never matters: [a~, h J] / h -> [a, J] = 0 at eps.
  tasks.push_back({"qca.lift.u_junk", "D_a(u) is unchanged by u~ -> u~ + (q^l - q^{-l}) J (10 random J)",
                   {{"n", std::to_string(n)}, {"l", std::to_string(l)}, {"seed", "20240601"}}, [n, l] {
                     std::mt19937 rng(20240601);
                     RatFunc h = RatFunc::q(l) - RatFunc::q(-l);
                     auto gens = generic_generators(n);
                     std::uniform_int_distribution<int> site(1, n), which(0, static_cast<int>(gens.size()) - 1);
                     for (int trial = 0; trial < 10; ++trial) {
                       RE J = random_elem(rng, n);
                       for (Central a : {Central::X, Central::Y, Central::Z, Central::E, Central::F}) {
                         RE al = central_lift(a, n, site(rng), l);
                         const auto& [name, u] = gens[which(rng)];
                         EpsElem d = derivation(al, u + J * h, l) - derivation(al, u, l);
                         if (!d.is_zero())
                           return CheckResult::fail("trial " + std::to_string(trial) + ", D_" + central_name(a) + "(" +
                                                    name + "): " + d.str(8));
                       }
                     }
                     return CheckResult::pass();
                   }});
  // Junk on a~ adds the inner derivation -[J, .]/l, which vanishes on central u.
  tasks.push_back({"qca.lift.a_junk_central", "D_a(u) for central u is unchanged by a~ -> a~ + (q^l - q^{-l}) J (10 random J)",
                   {{"n", std::to_string(n)}, {"l", std::to_string(l)}, {"seed", "20240602"}}, [n, l] {
                     std::mt19937 rng(20240602);
                     RatFunc h = RatFunc::q(l) - RatFunc::q(-l);
                     std::uniform_int_distribution<int> site(1, n);
                     Central all[] = {Central::X, Central::Y, Central::Z, Central::Zinv, Central::Omega};
                     for (int trial = 0; trial < 10; ++trial) {
                       RE J = random_elem(rng, n);
                       for (Central a : {Central::X, Central::Y, Central::Z})
                         for (Central u : all) {
                           RE al = central_lift(a, n, site(rng), l), ul = central_lift(u, n, site(rng), l);
                           EpsElem d = derivation(al + J * h, ul, l) - derivation(al, ul, l);
                           if (!d.is_zero())
                             return CheckResult::fail("trial " + std::to_string(trial) + ", D_" + central_name(a) + "(" +
                                                      central_name(u) + "): " + d.str(8));
                         }
                     }
                     return CheckResult::pass();
                   }});
  tasks.push_back({"qca.lift.a_junk_inner",
                   "a~ -> a~ + (q^l - q^{-l}) J changes D_a on generators by exactly -[J, .]/l at eps",
                   {{"n", std::to_string(n)}, {"l", std::to_string(l)}, {"seed", "20240603"}}, [n, l] {
                     std::mt19937 rng(20240603);
                     RatFunc h = RatFunc::q(l) - RatFunc::q(-l);
                     for (int trial = 0; trial < 10; ++trial) {
                       RE J = random_elem(rng, n);
                       RE al = central_lift(Central::X, n, 1, l);
                       EpsElem Je = specialize_elem(J, l);
                       for (const auto& [name, u] : generic_generators(n)) {
                         EpsElem d = derivation(al + J * h, u, l) - derivation(al, u, l);
                         EpsElem inner = commutator(Je, specialize_elem(u, l)) * Cyclotomic(mpq_class(-1, l));
                         if (d != inner) return CheckResult::fail("trial " + std::to_string(trial) + " on " + name);
                       }
                     }
                     return CheckResult::pass();
                   }});

  tasks.push_back({"qca.leibniz", "the limit formula on products equals the Leibniz extension (random pairs)",
                   {{"n", std::to_string(n)}, {"l", std::to_string(l)}, {"seed", "20240604"}}, [n, l] {
                     std::mt19937 rng(20240604);
                     for (Central a : {Central::X, Central::Y, Central::Z, Central::E, Central::F}) {
                       RE al = central_lift(a, n, 1 + static_cast<int>(rng() % n), l);
                       Derivation D = Derivation::from_central(al, l);
                       for (int trial = 0; trial < 4; ++trial) {
                         RE u = random_elem(rng, n), w = random_elem(rng, n);
                         EpsElem ue = specialize_elem(u, l), we = specialize_elem(w, l);
                         EpsElem lim = derivation(al, u * w, l);
                         EpsElem lb = D.apply(ue) * we + ue * D.apply(we);
                         if (lim != lb) return CheckResult::fail(std::string("D_") + central_name(a) + ": " + (lim - lb).str(8));
                         EpsElem ext = D.apply(ue * we);
                         if (lim != ext)
                           return CheckResult::fail(std::string("extension of D_") + central_name(a) + ": " + (lim - ext).str(8));
                       }
                     }
                     return CheckResult::pass();
                   }});

  tasks.push_back({"qca.braid.images", "T_1(x) = y and T_1(y) = z^2 x", in_l, [l] {
                     EpsElem x = z0_x(1, l, 1), y = z0_y(1, l, 1), z = z0_z(1, l, 1);
                     EpsElem d1 = braid_t1(x) - y, d2 = braid_t1(y) - z * z * x;
                     if (!d1.is_zero()) return CheckResult::fail("T_1(x) - y = " + d1.str(8));
                     return zero_elem(d2);
                   }});
  tasks.push_back({"qca.braid.intertwines", "D_{T_1(a)}(T_1(u)) = T_1(D_a(u)) for a in {x, y, z}, u in {E, F, K, K^-1}",
                   in_l, [l] {
                     for (Central a : {Central::X, Central::Y, Central::Z}) {
                       RE al = central_lift(a, 1, 1, l);
                       for (const auto& [name, u] : generic_generators(1)) {
                         EpsElem lhs = derivation(braid_t1(al), braid_t1(u), l);
                         EpsElem rhs = braid_t1(derivation(al, u, l));
                         if (lhs != rhs)
                           return CheckResult::fail(std::string("a = ") + central_name(a) + ", u = " + name + ": " +
                                                    (lhs - rhs).str(8));
                       }
                     }
                     return CheckResult::pass();
                   }});
  return tasks;
}

std::vector<Task> sl2_triple_suite(int n, int l, bool override_bounds) {
  std::vector<Task> tasks;
  if (guarded("qca.sl2", n, l, 0, override_bounds, tasks)) return tasks;
  auto check = [](const Derivation& lhs, const Derivation& rhs) {
    std::string d = lhs.differs(rhs);
    return d.empty() ? CheckResult::pass() : CheckResult::fail(d);
  };
  auto add = [&](const std::string& tag, int site) {
    Inputs in = in_nl(n, l);
    in.push_back({"site", site == 0 ? "diagonal" : std::to_string(site)});
    tasks.push_back({"qca.sl2." + tag + ".he", "[H, E] = 2E on E, F, K, K^-1 at every slot", in, [=] {
                       Derivation e = qca_e(n, l, site);
                       return check(Derivation::bracket(qca_h(n, l, site), e), e.scaled(EpsElem::scalar(R(l), n, Cyclotomic(2))));
                     }});
    tasks.push_back({"qca.sl2." + tag + ".hf", "[H, F] = -2F on E, F, K, K^-1 at every slot", in, [=] {
                       Derivation f = qca_f(n, l, site);
                       return check(Derivation::bracket(qca_h(n, l, site), f), f.scaled(EpsElem::scalar(R(l), n, Cyclotomic(-2))));
                     }});
    tasks.push_back({"qca.sl2." + tag + ".ef_center", "[E, F] = H on K^+-1 and on x, y, z^+-1, Omega at every site", in, [=] {
                       Derivation ef = Derivation::bracket(qca_e(n, l, site), qca_f(n, l, site));
                       Derivation h = qca_h(n, l, site);
                       for (const auto& [name, u] : center_probes(n, l)) {
                         EpsElem r = ef.apply(u) - h.apply(u);
                         if (!r.is_zero()) return CheckResult::fail(name + ": " + r.str(8));
                       }
                       return CheckResult::pass();
                     }});
    tasks.push_back({"qca.sl2." + tag + ".ef_inner",
                     "[E, F] - H = ad(w), w = sum z^2 J / l with J the lift defect of {x, y}; nonzero on E, so [E, F] = H fails on E and F",
                     in, [=] {
                       Derivation ef = Derivation::bracket(qca_e(n, l, site), qca_f(n, l, site));
                       Derivation h = qca_h(n, l, site);
                       EpsElem w(R(l), n);
                       for (int i = 1; i <= n; ++i)
                         if (site == 0 || site == i)
                           w += z0_z(n, l, i, 2) * lift_defect_xy(n, l, i) * Cyclotomic(mpq_class(1, l));
                       const auto& A = R(l);
                       for (int s = 0; s < n; ++s) {
                         std::pair<const char*, EpsElem> gens[] = {{"E", EpsElem::E(A, n, s)},
                                                                   {"F", EpsElem::F(A, n, s)},
                                                                   {"K", EpsElem::K(A, n, s)},
                                                                   {"K^-1", EpsElem::K(A, n, s, -1)}};
                         for (const auto& [name, u] : gens) {
                           EpsElem r = ef.apply(u) - h.apply(u) - commutator(w, u);
                           if (!r.is_zero())
                             return CheckResult::fail(std::string(name) + "^(" + std::to_string(s + 1) + "): " + r.str(8));
                         }
                       }
                       int s = site == 0 ? 0 : site - 1;
                       if (commutator(w, EpsElem::E(A, n, s)).is_zero()) return CheckResult::fail("ad(w) vanishes on E");
                       return CheckResult::pass();
                     }});
  };
  for (int i = 1; i <= n; ++i) add("site" + std::to_string(i), i);
  if (n >= 2) add("diagonal", 0);
  return tasks;
}

std::vector<Task> exp_series_suite(int l, int order, bool override_bounds) {
  std::vector<Task> tasks;
  if (guarded("qca.exp", 1, l, order, override_bounds, tasks)) return tasks;
  Inputs in = {{"l", std::to_string(l)}, {"order", std::to_string(order)}};
  const auto& A = R(l);
  EpsElem x = z0_x(1, l, 1), y = z0_y(1, l, 1), z = z0_z(1, l, 1), zi = z0_z(1, l, 1, -1);
  EpsElem Ee = EpsElem::E(A), Fe = EpsElem::F(A), Ke = EpsElem::K(A), Ki = EpsElem::K(A, 1, 0, -1);
  EpsElem zero(A, 1);
  mpq_class il(1, l);

  // (1 - t w)^alpha u.
  auto power_series = [order](const EpsElem& w, const mpq_class& alpha, const EpsElem& u) {
    std::vector<mpq_class> b = binomial_series(alpha, order);
    std::vector<EpsElem> out;
    EpsElem p = u;
    for (int k = 0; k <= order; ++k) {
      out.push_back(p * Cyclotomic(b[k] * (k % 2 ? -1 : 1)));
      p = p * w;
    }
    return out;
  };
  auto constant = [order, zero](const EpsElem& u) {
    std::vector<EpsElem> out(order + 1, zero);
    out[0] = u;
    return out;
  };
  // u + c (K a psi_{-1/l}(t w) + K^{-1} b psi_{1/l}(t w)) t z m.
  auto psi_form = [=, &A](const EpsElem& u, const Cyclotomic& a, const Cyclotomic& b, const EpsElem& w, const EpsElem& m,
                          const Cyclotomic& c) {
    std::vector<mpq_class> pm = psi_series(-il, order), pp = psi_series(il, order);
    std::vector<EpsElem> out{u};
    EpsElem wp = EpsElem::one(A, 1);
    for (int k = 1; k <= order; ++k) {
      EpsElem inner = Ke * (a * Cyclotomic(pm[k - 1])) + Ki * (b * Cyclotomic(pp[k - 1]));
      out.push_back(inner * z * wp * m * c);
      wp = wp * w;
    }
    return out;
  };

  struct Case {
    std::string id, statement;
    char v;
    EpsElem u;
    std::vector<EpsElem> want;
  };
  Cyclotomic e = A.q(1), ei = A.q(-1), c2 = A.qdiff().pow(l - 2);
  EpsElem KiE = Ki * Ee;
  std::vector<Case> cases = {
      {"f.K", "exp(tF)(K) = (1 - tyz)^{-1/l} K", 'f', Ke, power_series(y * z, -il, Ke)},
      {"f.Kinv", "exp(tF)(K^-1) = (1 - tyz)^{1/l} K^-1", 'f', Ki, power_series(y * z, il, Ki)},
      {"f.F", "exp(tF)(F) = F", 'f', Fe, constant(Fe)},
      {"f.E", "exp(tF)(E) = E - c^{l-2}(K eps^-1 tz psi_{-1/l}(tyz) + K^-1 eps tz psi_{1/l}(tyz)) F^{l-1}", 'f', Ee,
       psi_form(Ee, ei, e, y * z, Fe.pow(l - 1), -c2)},
      {"e.K", "exp(tE)(K) = (1 - txz)^{-1/l} K", 'e', Ke, power_series(x * z, -il, Ke)},
      {"e.Kinv", "exp(tE)(K^-1) = (1 - txz)^{1/l} K^-1", 'e', Ki, power_series(x * z, il, Ki)},
      {"e.KinvE", "exp(tE)(K^-1 E) = K^-1 E", 'e', KiE, constant(KiE)},
      {"e.FK", "exp(tE)(FK) = FK + c^{l-2}(K eps tz psi_{-1/l}(txz) + K^-1 eps^-1 tz psi_{1/l}(txz))(K^-1 E)^{l-1}", 'e',
       Fe * Ke, psi_form(Fe * Ke, e, ei, x * z, KiE.pow(l - 1), c2)},
      {"e.x", "exp(tE)(x) = x", 'e', x, constant(x)},
      {"f.y", "exp(tF)(y) = y", 'f', y, constant(y)},
      {"e.Omega", "exp(tE)(Omega) = Omega", 'e', casimir(A), constant(casimir(A))},
      {"f.Omega", "exp(tF)(Omega) = Omega", 'f', casimir(A), constant(casimir(A))},
      {"e.z", "exp(tE)(z) = (1 - tzx)^{-1} z", 'e', z, power_series(z * x, -1, z)},
      {"f.z", "exp(tF)(z) = (1 - tzy)^{-1} z", 'f', z, power_series(z * y, -1, z)},
  };
  {
    std::vector<EpsElem> w = constant(y);
    if (order >= 1) w[1] = z - zi - x * y * z;
    if (order >= 2) w[2] = x;
    cases.push_back({"e.y", "exp(tE)(y) = y + t(-xyz + z - z^-1) + t^2 x", 'e', y, w});
    w = constant(x);
    if (order >= 1) w[1] = z - zi - x * y * z;
    if (order >= 2) w[2] = y;
    cases.push_back({"f.x", "exp(tF)(x) = x + t(-xyz + z - z^-1) + t^2 y", 'f', x, w});
  }
  for (const Case& c : cases)
    tasks.push_back({"qca.exp." + c.id, c.statement, in, [c, l, order] {
                       Derivation D = c.v == 'e' ? qca_e(1, l, 1) : qca_f(1, l, 1);
                       return series_match(exp_series(D, c.u, order), c.want);
                     }});
  return tasks;
}

std::vector<Task> invariance_suite(int n, int l, bool override_bounds) {
  std::vector<Task> tasks;
  if (guarded("qca.invariance", n, l, 0, override_bounds, tasks)) return tasks;
  tasks.push_back({"qca.invariance.omega_u", "E(Omega) = F(Omega) = H(Omega) = 0 in U_eps", {{"l", std::to_string(l)}},
                   [l] {
                     EpsElem W = casimir(R(l));
                     for (const Derivation& D : {qca_e(1, l, 1), qca_f(1, l, 1), qca_h(1, l, 1)}) {
                       EpsElem r = D.apply(W);
                       if (!r.is_zero()) return CheckResult::fail(r.str(8));
                     }
                     return CheckResult::pass();
                   }});
  for (int i = 1; i <= n; ++i)
    tasks.push_back({"qca.invariance.conjugation.site" + std::to_string(i),
                     "diagonal E(M) = MX - XM and F(M) = MY - YM on the site matrix M = [[z - zxy, y], [-x, z^-1]]",
                     {{"n", std::to_string(n)}, {"l", std::to_string(l)}, {"site", std::to_string(i)}}, [n, l, i] {
                       auto m = site_matrix(n, l, i);
                       // X = [[0, 1], [0, 0]], Y = [[0, 0], [1, 0]].
                       std::array<EpsElem, 4> mx = {-m[2], m[0] - m[3], m[2] - m[2], m[2]};
                       std::array<EpsElem, 4> my = {m[1], m[1] - m[1], m[3] - m[0], -m[1]};
                       for (int k = 0; k < 4; ++k) {
                         EpsElem r = qca_e(n, l, 0).apply(m[k]) - mx[k];
                         if (!r.is_zero()) return CheckResult::fail("E, entry " + std::to_string(k) + ": " + r.str(8));
                         r = qca_f(n, l, 0).apply(m[k]) - my[k];
                         if (!r.is_zero()) return CheckResult::fail("F, entry " + std::to_string(k) + ": " + r.str(8));
                       }
                       return CheckResult::pass();
                     }});
  if (n < 2) return tasks;
  for (int i = 1; i <= n; ++i)
    tasks.push_back({"qca.invariance.omega.site" + std::to_string(i), "diagonal E and F kill omega^(i)",
                     {{"n", std::to_string(n)}, {"l", std::to_string(l)}, {"site", std::to_string(i)}}, [n, l, i] {
                       EpsElem w = omega(R(l), n, i);
                       EpsElem r = qca_e(n, l, 0).apply(w);
                       if (!r.is_zero()) return CheckResult::fail("E: " + r.str(8));
                       return zero_elem(qca_f(n, l, 0).apply(w));
                     }});
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      std::vector<int> s;
      std::string id;
      for (int k = i; k <= j; ++k) {
        s.push_back(k);
        id += (id.empty() ? "" : "-") + std::to_string(k);
      }
      Inputs in = {{"n", std::to_string(n)}, {"l", std::to_string(l)}, {"sites", id}};
      tasks.push_back({"qca.invariance.local_trace." + id, "diagonal E and F kill Tr(M^(i)...M^(j)) of the site matrices", in,
                       [n, l, s] {
                         EpsElem w = local_trace(n, l, s);
                         EpsElem r = qca_e(n, l, 0).apply(w);
                         if (!r.is_zero()) return CheckResult::fail("E: " + r.str(8));
                         return zero_elem(qca_f(n, l, 0).apply(w));
                       }});
      if (s.size() == 1) {
        tasks.push_back({"qca.invariance.threaded." + id, "diagonal E and F kill T_l(qTr(M^(i)))", in, [n, l, s] {
                           EpsElem w = threaded_trace(n, l, s);
                           EpsElem r = qca_e(n, l, 0).apply(w);
                           if (!r.is_zero()) return CheckResult::fail("E: " + r.str(8));
                           return zero_elem(qca_f(n, l, 0).apply(w));
                         }});
      } else {
        tasks.push_back({"qca.invariance.threaded_moves." + id,
                         "diagonal E and F do not kill T_l(qTr(M^(i)...M^(j))) = Tr(Fr M^(i)...Fr M^(j)); Fr M^(k) is the dressed site matrix",
                         in, [n, l, s] {
                           EpsElem w = threaded_trace(n, l, s);
                           bool e = qca_e(n, l, 0).apply(w).is_zero(), f = qca_f(n, l, 0).apply(w).is_zero();
                           return CheckResult::expect(!e && !f, [&] { return std::string(e ? "E" : "F") + " kills it"; });
                         }});
      }
    }
  return tasks;
}

std::vector<Task> qca_suite(int n, int l, int order, bool override_bounds) {
  std::vector<Task> all;
  for (auto part : {qca_derivation_suite(n, l, override_bounds), sl2_triple_suite(n, l, override_bounds),
                    exp_series_suite(l, order, override_bounds), invariance_suite(n, l, override_bounds)})
    all.insert(all.end(), part.begin(), part.end());
  return all;
}

}  // namespace qgraph
