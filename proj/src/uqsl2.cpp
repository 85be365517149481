#include "qgraph/uqsl2.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qgraph {

// ----------------------------------------------------------------------- UAlg

template <class C>
UAlg<C>::UAlg(std::function<C(long)> vpow, std::string label, int root_l)
    : vpow_(std::move(vpow)), label_(std::move(label)), root_l_(root_l), table_(kTable * kTable) {
  vcache_.reserve(2 * kCache + 1);
  for (long k = -kCache; k <= kCache; ++k) vcache_.push_back(vpow_(k));
  C d = q(1) - q(-1);
  inv_qdiff_ = C(1) / d;
  for (auto& p : table_) p.store(nullptr, std::memory_order_relaxed);
}

template <class C>
UAlg<C>::~UAlg() {
  for (auto& p : table_) delete p.load();
}

template <class C>
C UAlg<C>::v(long k) const {
  if (k >= -kCache && k <= kCache) return vcache_[k + kCache];
  return vpow_(k);
}

template <class C>
C UAlg<C>::qint(long n) const {
  C r(0);
  long m = n < 0 ? -n : n;
  for (long k = 0; k < m; ++k) r += q(m - 1 - 2 * k);
  return n < 0 ? C(0) - r : r;
}

template <class C>
C UAlg<C>::qfactorial(long n) const {
  C r(1);
  for (long k = 2; k <= n; ++k) r *= qint(k);
  return r;
}

template <class C>
const std::vector<STerm<C>>& UAlg<C>::straighten(int c, int a) const {
  if (c < 0 || a < 0 || c >= kTable || a >= kTable)
    throw std::out_of_range("straightening exponent out of table range");
  auto& slot = table_[c * kTable + a];
  std::vector<STerm<C>>* p = slot.load(std::memory_order_acquire);
  if (p != nullptr) return *p;
  std::vector<STerm<C>>* fresh = compute(c, a);
  std::lock_guard<std::mutex> lock(mu_);
  p = slot.load(std::memory_order_acquire);
  if (p != nullptr) {
    delete fresh;
    return *p;
  }
  slot.store(fresh, std::memory_order_release);
  return *fresh;
}

template <class C>
std::vector<STerm<C>>* UAlg<C>::compute(int c, int a) const {
  auto* out = new std::vector<STerm<C>>();
  if (c == 0 || a == 0) {
    out->push_back({0, 0, C(1)});
    return out;
  }
  // E * F^{a'} K^m E^e = q^{-2m} F^{a'} K^m E^{e+1}
  //   + [a']/(q-q^{-1}) (q^{1-a'} F^{a'-1} K^{m+1} E^e - q^{a'-1} F^{a'-1} K^{m-1} E^e)
  std::map<std::pair<int, int>, C> acc;
  for (const STerm<C>& t : straighten(c - 1, a)) {
    int ap = a - t.j;
    acc[{t.j, t.m}] += t.coef * q(-2 * t.m);
    if (ap > 0) {
      C base = t.coef * qint(ap) * inv_qdiff_;
      acc[{t.j + 1, t.m + 1}] += base * q(1 - ap);
      acc[{t.j + 1, t.m - 1}] -= base * q(ap - 1);
    }
  }
  for (auto& [jm, coef] : acc)
    if (!coef_zero(coef)) out->push_back({jm.first, jm.second, coef});
  return out;
}

const UAlg<RatFunc>& generic_alg() {
  static const UAlg<RatFunc> A([](long k) { return RatFunc::v(static_cast<int>(k)); }, "generic");
  return A;
}

const UAlg<Cyclotomic>& root_alg(int l) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<UAlg<Cyclotomic>>> reg;
  std::lock_guard<std::mutex> lock(mu);
  auto it = reg.find(l);
  if (it != reg.end()) return *it->second;
  const CycloField& F = CycloField::get(l);
  const long e = F.sqrt_eps_exponent();
  auto* A = new UAlg<Cyclotomic>([&F, e](long k) { return F.xpow(k * e); }, "eps, l=" + std::to_string(l), l);
  reg.emplace(l, std::unique_ptr<UAlg<Cyclotomic>>(A));
  return *A;
}

const UAlg<mpq_class>& point_alg(long v0) {
  static std::mutex mu;
  static std::map<long, std::unique_ptr<UAlg<mpq_class>>> reg;
  std::lock_guard<std::mutex> lock(mu);
  auto it = reg.find(v0);
  if (it != reg.end()) return *it->second;
  if (v0 == 0 || v0 == 1 || v0 == -1) throw std::invalid_argument("v0 must avoid roots of unity");
  auto* A = new UAlg<mpq_class>(
      [v0](long k) {
        mpz_class p;
        mpz_pow_ui(p.get_mpz_t(), mpz_class(v0).get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
        return k < 0 ? mpq_class(1, 1) / mpq_class(p) : mpq_class(p);
      },
      "v=" + std::to_string(v0));
  reg.emplace(v0, std::unique_ptr<UAlg<mpq_class>>(A));
  return *A;
}

// ----------------------------------------------------------------------- Elem

template <class C>
Elem<C>::Elem(const UAlg<C>& A, int n) : A_(&A), n_(n) {
  if (n < 1 || n > kMaxSlots) throw std::invalid_argument("tensor arity out of range");
}

template <class C>
Elem<C> Elem<C>::scalar(const UAlg<C>& A, int n, const C& c) {
  Elem e(A, n);
  if (!coef_zero(c)) e.terms_.emplace_back(Key{}, c);
  return e;
}

template <class C>
Elem<C> Elem<C>::mono(const UAlg<C>& A, int n, int slot, Mono m, const C& c) {
  if (slot < 0 || slot >= n) throw std::out_of_range("slot out of range");
  Key k;
  k.m[slot] = m;
  return from_key(A, n, k, c);
}

template <class C>
Elem<C> Elem<C>::from_key(const UAlg<C>& A, int n, const Key& k, const C& c) {
  Elem e(A, n);
  if (!coef_zero(c)) e.terms_.emplace_back(k, c);
  return e;
}

template <class C>
Elem<C> Elem<C>::from_terms(const UAlg<C>& A, int n, std::vector<Term> terms) {
  Elem e(A, n);
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
  // merge duplicates
  for (auto& t : terms) {
    if (!e.terms_.empty() && e.terms_.back().first == t.first) {
      e.terms_.back().second += t.second;
    } else {
      e.terms_.push_back(std::move(t));
    }
  }
  e.terms_.erase(std::remove_if(e.terms_.begin(), e.terms_.end(), [](const Term& t) { return coef_zero(t.second); }),
                 e.terms_.end());
  return e;
}

template <class C>
Elem<C> Elem<C>::from_map(const UAlg<C>& A, int n, std::unordered_map<Key, C, KeyHash>&& acc) {
  Elem e(A, n);
  e.terms_.reserve(acc.size());
  for (auto& kv : acc)
    if (!coef_zero(kv.second)) e.terms_.emplace_back(kv.first, std::move(kv.second));
  std::sort(e.terms_.begin(), e.terms_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
  return e;
}

template <class C>
C Elem<C>::constant_term() const {
  return coeff(Key{});
}

template <class C>
C Elem<C>::coeff(const Key& k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const Term& t, const Key& key) { return t.first < key; });
  if (it != terms_.end() && it->first == k) return it->second;
  return C(0);
}

template <class C>
void Elem<C>::check_compatible(const Elem& o) const {
  if (A_ != o.A_) throw std::invalid_argument("elements over different coefficient algebras");
  if (n_ != o.n_) throw std::invalid_argument("tensor arity mismatch");
}

template <class C>
Elem<C> Elem<C>::operator-() const {
  Elem r = *this;
  for (auto& t : r.terms_) t.second = C(0) - t.second;
  return r;
}

template <class C>
Elem<C>& Elem<C>::operator+=(const Elem& o) {
  if (A_ == nullptr) return *this = o;
  if (o.A_ == nullptr) return *this;
  check_compatible(o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      out.push_back(o.terms_[j++]);
    } else {
      C s = terms_[i].second + o.terms_[j].second;
      if (!coef_zero(s)) out.emplace_back(terms_[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

template <class C>
Elem<C>& Elem<C>::operator-=(const Elem& o) {
  return *this += -o;
}

template <class C>
Elem<C>& Elem<C>::operator*=(const C& c) {
  if (coef_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

template <class C>
bool Elem<C>::operator==(const Elem& o) const {
  if (n_ != o.n_ || terms_.size() != o.terms_.size()) return false;
  for (size_t k = 0; k < terms_.size(); ++k)
    if (!(terms_[k].first == o.terms_[k].first) || !(terms_[k].second == o.terms_[k].second)) return false;
  return true;
}

namespace {

template <class C>
struct SlotTerm {
  Mono m;
  const C* s;
  int vexp;
};

// F^{a1}K^{b1}E^{c1} * F^{a2}K^{b2}E^{c2}
//   = sum_j s_j q^{-2 b1 (a2-j) - 2 b2 (c1-j)} F^{a1+a2-j} K^{b1+m_j+b2} E^{c1+c2-j}
template <class C>
void slot_product(const UAlg<C>& A, const Mono& x, const Mono& y, std::vector<SlotTerm<C>>& out) {
  out.clear();
  if (x.c == 0 || y.a == 0) {
    int vexp = -4 * (x.b * y.a + y.b * x.c);
    out.push_back({Mono{static_cast<int16_t>(x.a + y.a), static_cast<int16_t>(x.b + y.b),
                        static_cast<int16_t>(x.c + y.c)},
                   nullptr, vexp});
    return;
  }
  for (const STerm<C>& t : A.straighten(x.c, y.a)) {
    int vexp = -4 * (x.b * (y.a - t.j) + y.b * (x.c - t.j));
    out.push_back({Mono{static_cast<int16_t>(x.a + y.a - t.j), static_cast<int16_t>(x.b + t.m + y.b),
                        static_cast<int16_t>(x.c + y.c - t.j)},
                   &t.coef, vexp});
  }
}

}  // namespace

template <class C>
Elem<C> Elem<C>::multiply(const Elem& a, const Elem& b) {
  a.check_compatible(b);
  const UAlg<C>& A = *a.A_;
  const int n = a.n_;
  if (a.is_zero() || b.is_zero()) return Elem(A, n);
  std::unordered_map<Key, C, KeyHash> acc;
  acc.reserve(a.size() * b.size() / 2 + 8);
  std::array<std::vector<SlotTerm<C>>, kMaxSlots> lists;
  std::array<size_t, kMaxSlots> idx{};
  C coef, tmp;
  for (const Term& ta : a.terms_) {
    for (const Term& tb : b.terms_) {
      C base = ta.second * tb.second;
      for (int s = 0; s < n; ++s) slot_product(A, ta.first.m[s], tb.first.m[s], lists[s]);
      idx.fill(0);
      while (true) {
        Key k;
        int vexp = 0;
        coef = base;
        for (int s = 0; s < n; ++s) {
          const SlotTerm<C>& st = lists[s][idx[s]];
          k.m[s] = st.m;
          vexp += st.vexp;
          if (st.s != nullptr) coef *= *st.s;
        }
        if (vexp != 0) coef *= A.v(vexp);
        auto it = acc.find(k);
        if (it == acc.end()) {
          acc.emplace(k, coef);
        } else {
          it->second += coef;
        }
        int s = n - 1;
        while (s >= 0 && ++idx[s] == lists[s].size()) {
          idx[s] = 0;
          --s;
        }
        if (s < 0) break;
      }
    }
  }
  return from_map(A, n, std::move(acc));
}

template <class C>
Elem<C> Elem<C>::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power of an algebra element");
  Elem r = one(*A_, n_);
  Elem b = *this;
  while (k) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

std::string mono_str(const Mono& m) {
  return "F^" + std::to_string(m.a) + " K^" + std::to_string(m.b) + " E^" + std::to_string(m.c);
}

std::string key_str(const Key& k, int n) {
  std::string out;
  for (int s = 0; s < n; ++s) {
    if (s) out += " (x) ";
    out += mono_str(k.m[s]);
  }
  return out;
}

template <class C>
std::string Elem<C>::str(size_t max_terms) const {
  if (terms_.empty()) return "0";
  std::string out;
  size_t shown = 0;
  for (const Term& t : terms_) {
    if (max_terms && shown == max_terms) {
      out += " + ... (" + std::to_string(terms_.size() - shown) + " more terms)";
      break;
    }
    if (shown) out += " + ";
    out += coef_str(t.second) + " * " + key_str(t.first, n_);
    ++shown;
  }
  return out;
}

namespace {

std::string trim_ws(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\n\r");
  size_t b = s.find_last_not_of(" \t\n\r");
  return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

RatFunc parse_coef(const std::string& s, const UAlg<RatFunc>&) { return RatFunc::parse(s); }

Cyclotomic parse_coef(const std::string& s, const UAlg<Cyclotomic>& A) {
  std::string t = trim_ws(s);
  if (t.size() >= 2 && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  return Cyclotomic::parse(t, CycloField::get(A.root_order()));
}

mpq_class parse_coef(const std::string& s, const UAlg<mpq_class>&) {
  std::string t = trim_ws(s);
  if (t.size() >= 2 && t.front() == '(' && t.back() == ')') t = trim_ws(t.substr(1, t.size() - 2));
  mpq_class q(t);
  q.canonicalize();
  return q;
}

Mono parse_mono(const std::string& s) {
  Mono m;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 3 || tok[1] != '^') throw ParseError("bad monomial factor '" + tok + "'");
    long e = std::stol(tok.substr(2));
    switch (tok[0]) {
      case 'F':
        if (e < 0) throw ParseError("negative F exponent");
        m.a = static_cast<int16_t>(e);
        break;
      case 'K':
        m.b = static_cast<int16_t>(e);
        break;
      case 'E':
        if (e < 0) throw ParseError("negative E exponent");
        m.c = static_cast<int16_t>(e);
        break;
      default:
        throw ParseError("unknown generator '" + tok + "'");
    }
  }
  return m;
}

}  // namespace

template <class C>
Elem<C> Elem<C>::parse(const UAlg<C>& A, const std::string& text) {
  std::string s = trim_ws(text);
  if (s.empty()) throw ParseError("empty element");
  // split at top-level '+'
  std::vector<std::string> parts;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    else if (s[i] == ')') --depth;
    else if (s[i] == '+' && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(s.substr(start));
  if (parts.size() == 1 && trim_ws(parts[0]) == "0") throw ParseError("arity of '0' is ambiguous; use parse with arity");
  std::vector<Term> terms;
  int arity = -1;
  for (auto& raw : parts) {
    std::string p = trim_ws(raw);
    C coef(1);
    std::string monos = p;
    if (!p.empty() && p[0] == '(') {
      auto group_end = [&p](size_t from) {
        int d = 0;
        for (size_t i = from; i < p.size(); ++i) {
          if (p[i] == '(') ++d;
          else if (p[i] == ')' && --d == 0) return i;
        }
        throw ParseError("unbalanced parentheses in '" + p + "'");
      };
      size_t close = group_end(0);
      size_t next = p.find_first_not_of(" \t", close + 1);
      if (next != std::string::npos && p[next] == '/') close = group_end(p.find('(', next));
      size_t star = p.find_first_not_of(" \t", close + 1);
      if (star == std::string::npos || p[star] != '*')
        throw ParseError("expected '*' after coefficient in '" + p + "'");
      coef = parse_coef(p.substr(0, close + 1), A);
      monos = p.substr(star + 1);
    }
    Key k;
    int slot = 0;
    size_t pos = 0;
    while (true) {
      size_t sep = monos.find("(x)", pos);
      std::string piece = monos.substr(pos, sep == std::string::npos ? std::string::npos : sep - pos);
      if (slot >= kMaxSlots) throw ParseError("too many tensor factors");
      k.m[slot++] = parse_mono(piece);
      if (sep == std::string::npos) break;
      pos = sep + 3;
    }
    if (arity < 0) arity = slot;
    if (arity != slot) throw ParseError("inconsistent tensor arity");
    terms.emplace_back(k, coef);
  }
  return from_terms(A, arity, std::move(terms));
}

template class UAlg<RatFunc>;
template class UAlg<Cyclotomic>;
template class UAlg<mpq_class>;
template class Elem<RatFunc>;
template class Elem<Cyclotomic>;
template class Elem<mpq_class>;

// ------------------------------------------------------------- Hopf structure

template <class C>
Elem<C> embed(const Elem<C>& u, int n, const std::vector<int>& slots) {
  if (static_cast<int>(slots.size()) != u.arity()) throw std::invalid_argument("embed: slot list size");
  std::vector<typename Elem<C>::Term> out;
  out.reserve(u.size());
  for (const auto& [k, c] : u.terms()) {
    Key nk;
    for (int s = 0; s < u.arity(); ++s) nk.m[slots[s]] = k.m[s];
    out.emplace_back(nk, c);
  }
  return Elem<C>::from_terms(u.alg(), n, std::move(out));
}

template <class C>
Elem<C> apply_hom(const Elem<C>& u, int out_arity, const std::function<Elem<C>(int, Gen)>& images, bool anti) {
  const UAlg<C>& A = u.alg();
  std::map<std::tuple<int, int, int>, Elem<C>> cache;
  auto power = [&](int slot, Gen g, int p) -> const Elem<C>& {
    auto key = std::make_tuple(slot, static_cast<int>(g), p);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Elem<C> r = images(slot, g).pow(p);
    return cache.emplace(key, std::move(r)).first->second;
  };
  Elem<C> acc(A, out_arity);
  for (const auto& [k, c] : u.terms()) {
    Elem<C> t = Elem<C>::scalar(A, out_arity, c);
    auto mul = [&](const Elem<C>& x) { t = anti ? x * t : t * x; };
    for (int s = 0; s < u.arity(); ++s) {
      const Mono& m = k.m[s];
      if (m.a) mul(power(s, Gen::F, m.a));
      if (m.b > 0) mul(power(s, Gen::K, m.b));
      if (m.b < 0) mul(power(s, Gen::Kinv, -m.b));
      if (m.c) mul(power(s, Gen::E, m.c));
    }
    acc += t;
  }
  return acc;
}

template <class C>
Elem<C> coproduct_iter(const Elem<C>& u, int n) {
  if (u.arity() != 1) throw std::invalid_argument("coproduct expects a single-slot element");
  const UAlg<C>& A = u.alg();
  auto kall = [&](int p, int from, int to) {
    Key k;
    for (int s = from; s < to; ++s) k.m[s].b = static_cast<int16_t>(p);
    return k;
  };
  std::array<Elem<C>, 4> img;
  Elem<C> e(A, n), f(A, n);
  for (int i = 0; i < n; ++i) {
    Key ke = kall(1, i + 1, n);
    ke.m[i].c = 1;
    e += Elem<C>::from_key(A, n, ke, C(1));
    Key kf = kall(-1, 0, i);
    kf.m[i].a = 1;
    f += Elem<C>::from_key(A, n, kf, C(1));
  }
  img[0] = e;
  img[1] = f;
  img[2] = Elem<C>::from_key(A, n, kall(1, 0, n), C(1));
  img[3] = Elem<C>::from_key(A, n, kall(-1, 0, n), C(1));
  return apply_hom<C>(u, n, [&](int, Gen g) { return img[static_cast<int>(g)]; });
}

template <class C>
Elem<C> coproduct(const Elem<C>& u) {
  return coproduct_iter(u, 2);
}

template <class C>
Elem<C> antipode(const Elem<C>& u) {
  if (u.arity() != 1) throw std::invalid_argument("antipode expects a single-slot element");
  const UAlg<C>& A = u.alg();
  Elem<C> Kinv = Elem<C>::K(A, 1, 0, -1);
  Elem<C> K = Elem<C>::K(A, 1, 0, 1);
  Elem<C> SE = -(Elem<C>::E(A) * Kinv);
  Elem<C> SF = -(K * Elem<C>::F(A));
  return apply_hom<C>(
      u, 1,
      [&](int, Gen g) {
        switch (g) {
          case Gen::E: return SE;
          case Gen::F: return SF;
          case Gen::K: return Kinv;
          default: return K;
        }
      },
      true);
}

template <class C>
C counit(const Elem<C>& u) {
  C r(0);
  for (const auto& [k, c] : u.terms()) {
    bool ok = true;
    for (int s = 0; s < u.arity(); ++s)
      if (k.m[s].a || k.m[s].c) ok = false;
    if (ok) r += c;
  }
  return r;
}

template <class C>
Elem<C> casimir(const UAlg<C>& A) {
  C d = A.qdiff();
  Elem<C> r = Elem<C>::mono(A, 1, 0, {0, 1, 0}, A.q(1));
  r += Elem<C>::mono(A, 1, 0, {0, -1, 0}, A.q(-1));
  r += Elem<C>::mono(A, 1, 0, {1, 0, 1}, d * d);
  return r;
}

#define QG_INSTANTIATE(C)                                                                              \
  template Elem<C> embed(const Elem<C>&, int, const std::vector<int>&);                               \
  template Elem<C> apply_hom(const Elem<C>&, int, const std::function<Elem<C>(int, Gen)>&, bool);     \
  template Elem<C> coproduct_iter(const Elem<C>&, int);                                               \
  template Elem<C> coproduct(const Elem<C>&);                                                         \
  template Elem<C> antipode(const Elem<C>&);                                                          \
  template C counit(const Elem<C>&);                                                                  \
  template Elem<C> casimir(const UAlg<C>&);

QG_INSTANTIATE(RatFunc)
QG_INSTANTIATE(Cyclotomic)
QG_INSTANTIATE(mpq_class)
#undef QG_INSTANTIATE

// ------------------------------------------------------------- specialization

Elem<Cyclotomic> specialize_elem(const Elem<RatFunc>& u, int l) {
  const UAlg<Cyclotomic>& B = root_alg(l);
  std::vector<Elem<Cyclotomic>::Term> out;
  out.reserve(u.size());
  for (const auto& [k, c] : u.terms()) {
    try {
      Cyclotomic d = specialize_at_root(c, l);
      if (!d.is_zero()) out.emplace_back(k, std::move(d));
    } catch (const PoleAtSpecialization& e) {
      throw PoleAtSpecialization(std::string(e.what()) + " (monomial " + key_str(k, u.arity()) + ")");
    }
  }
  return Elem<Cyclotomic>::from_terms(B, u.arity(), std::move(out));
}

Elem<mpq_class> specialize_point(const Elem<RatFunc>& u, long v0) {
  const UAlg<mpq_class>& B = point_alg(v0);
  mpq_class p(v0);
  return map_coeffs<mpq_class, RatFunc>(u, B, [&](const RatFunc& c) { return specialize(c, p); });
}

// ---------------------------------------------------------------------- Verma

namespace {

WeightPoly wmul(const WeightPoly& a, const WeightPoly& b) {
  WeightPoly r;
  for (auto& [ea, ca] : a)
    for (auto& [eb, cb] : b) {
      RatFunc& t = r[ea + eb];
      t += ca * cb;
      if (t.is_zero()) r.erase(ea + eb);
    }
  return r;
}

void wadd(WeightPoly& a, const WeightPoly& b) {
  for (auto& [e, c] : b) {
    RatFunc& t = a[e];
    t += c;
    if (t.is_zero()) a.erase(e);
  }
}

}  // namespace

VermaVec verma_action(const Elem<RatFunc>& u, int m, int N) {
  if (u.arity() != 1) throw std::invalid_argument("verma_action expects a single-slot element");
  if (m < 0 || m > N) throw std::out_of_range("verma basis index out of range");
  const UAlg<RatFunc>& A = u.alg();
  VermaVec out(N + 1);
  for (const auto& [k, c] : u.terms()) {
    const Mono& mo = k.m[0];
    if (mo.c > m) continue;
    WeightPoly w{{0, c}};
    int idx = m;
    for (int t = 0; t < mo.c; ++t) {
      // E v_idx = [idx] (x q^{1-idx} - x^{-1} q^{idx-1})/(q-q^{-1}) v_{idx-1}
      RatFunc f = A.qint(idx) * A.inv_qdiff();
      WeightPoly e{{1, f * A.q(1 - idx)}, {-1, -(f * A.q(idx - 1))}};
      w = wmul(w, e);
      --idx;
    }
    if (mo.b != 0) {
      // K^b v_idx = x^b q^{-2 idx b} v_idx
      WeightPoly kk{{mo.b, A.q(-2 * idx * mo.b)}};
      w = wmul(w, kk);
    }
    idx += mo.a;
    if (idx > N) throw TruncationExceeded("F-degree pushes past truncation N = " + std::to_string(N));
    wadd(out[idx], w);
  }
  return out;
}

VermaVec verma_apply(const Elem<RatFunc>& u, const VermaVec& w) {
  int N = static_cast<int>(w.size()) - 1;
  VermaVec out(N + 1);
  for (int m = 0; m <= N; ++m) {
    if (w[m].empty()) continue;
    VermaVec img = verma_action(u, m, N);
    for (int j = 0; j <= N; ++j)
      if (!img[j].empty()) wadd(out[j], wmul(w[m], img[j]));
  }
  return out;
}

bool verma_equal(const VermaVec& a, const VermaVec& b) {
  if (a.size() != b.size()) return false;
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] != b[k]) return false;
  return true;
}

}  // namespace qgraph
