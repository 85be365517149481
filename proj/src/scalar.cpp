#include "qgraph/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace qgraph {

std::string to_string(const mpq_class& c) { return c.get_str(); }

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) c_.emplace_back(c);
}

LaurentPoly::LaurentPoly(const mpq_class& c) {
  if (c != 0) c_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const mpq_class& c, int exp) {
  LaurentPoly p;
  if (c != 0) {
    p.lo_ = exp;
    p.c_.push_back(c);
  }
  return p;
}

LaurentPoly LaurentPoly::qint(int n) {
  // [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}; [-n] = -[n].
  LaurentPoly p;
  int m = n < 0 ? -n : n;
  if (m == 0) return p;
  p.lo_ = 2 * (1 - m);
  p.c_.assign(4 * (m - 1) + 1, mpq_class(0));
  for (int k = 0; k < m; ++k) p.c_[4 * k] = (n < 0 ? -1 : 1);
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(std::vector<mpq_class> c, int low) {
  LaurentPoly p;
  p.lo_ = low;
  p.c_ = std::move(c);
  p.trim();
  return p;
}

void LaurentPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  size_t k = 0;
  while (k < c_.size() && c_[k] == 0) ++k;
  if (k == c_.size()) {
    c_.clear();
    lo_ = 0;
    return;
  }
  if (k > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(k));
    lo_ += static_cast<int>(k);
  }
}

mpq_class LaurentPoly::coeff(int exp) const {
  if (c_.empty() || exp < lo_ || exp > high()) return 0;
  return c_[exp - lo_];
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  if (!p.c_.empty()) p.lo_ += k;
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.c_.empty()) return *this;
  if (c_.empty()) return *this = o;
  int lo = std::min(lo_, o.lo_);
  int hi = std::max(high(), o.high());
  if (lo < lo_) {
    c_.insert(c_.begin(), static_cast<size_t>(lo_ - lo), mpq_class(0));
    lo_ = lo;
  }
  if (static_cast<int>(c_.size()) < hi - lo + 1) c_.resize(hi - lo + 1, mpq_class(0));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[o.lo_ - lo_ + k] += o.c_[k];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  if (a.c_.empty() || b.c_.empty()) return p;
  p.lo_ = a.lo_ + b.lo_;
  p.c_.assign(a.c_.size() + b.c_.size() - 1, mpq_class(0));
  mpq_class t;
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      t = a.c_[i] * b.c_[j];
      p.c_[i + j] += t;
    }
  }
  p.trim();
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const mpq_class& c) {
  if (c == 0) {
    c_.clear();
    lo_ = 0;
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
  LaurentPoly r;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) r += monomial(c_[i], (lo_ + static_cast<int>(i)) * k);
  return r;
}

std::string LaurentPoly::str(const char* var) const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) out += " + ";
    first = false;
    out += c_[i].get_str();
    out += "*";
    out += var;
    out += "^";
    out += std::to_string(lo_ + static_cast<int>(i));
  }
  return out;
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool at_end() {
    ws();
    return i >= s.size();
  }
  bool starts(const char* w) {
    ws();
    return s.compare(i, std::char_traits<char>::length(w), w) == 0;
  }
  long integer() {
    ws();
    size_t j = i;
    if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
    size_t d = j;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == d) throw ParseError("expected integer at offset " + std::to_string(i) + " in '" + s + "'");
    long v = std::stol(s.substr(i, j - i));
    i = j;
    return v;
  }
  mpq_class rational() {
    ws();
    size_t j = i;
    if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
    size_t d = j;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == d) throw ParseError("expected number at offset " + std::to_string(i) + " in '" + s + "'");
    if (j < s.size() && s[j] == '/') {
      ++j;
      size_t e = j;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == e) throw ParseError("bad rational in '" + s + "'");
    }
    std::string tok = s.substr(i, j - i);
    if (!tok.empty() && tok[0] == '+') tok.erase(0, 1);
    i = j;
    mpq_class q(tok);
    q.canonicalize();
    return q;
  }
};

// Parses "c*var^k + ..." (also "var^k", "c", "-c*var^k") into exponent -> coefficient.
std::map<long, mpq_class> parse_terms(const std::string& s, const char* var) {
  std::map<long, mpq_class> out;
  Cursor cur{s};
  if (cur.at_end()) throw ParseError("empty scalar");
  bool first = true;
  while (!cur.at_end()) {
    mpq_class sign = 1;
    if (!first) {
      if (cur.eat('+')) {
      } else if (cur.eat('-')) {
        sign = -1;
      } else {
        throw ParseError("expected '+' in '" + s + "'");
      }
    }
    first = false;
    mpq_class c = 1;
    long e = 0;
    cur.ws();
    if (cur.starts("-") && cur.i + 1 < s.size() && s.compare(cur.i + 1, std::strlen(var), var) == 0) {
      ++cur.i;
      sign = -sign;
    }
    if (cur.starts(var)) {
      cur.i += std::strlen(var);
      e = cur.eat('^') ? cur.integer() : 1;
    } else {
      c = cur.rational();
      if (cur.eat('*')) {
        if (!cur.starts(var)) throw ParseError(std::string("expected ") + var + " in '" + s + "'");
        cur.i += std::strlen(var);
        e = cur.eat('^') ? cur.integer() : 1;
      }
    }
    out[e] += sign * c;
  }
  return out;
}

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& s, const char* var) {
  LaurentPoly p;
  for (auto& [e, c] : parse_terms(s, var)) p += monomial(c, static_cast<int>(e));
  return p;
}

// ----------------------------------------------------------------------- poly

namespace poly {

std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) return {LaurentPoly(), LaurentPoly()};
  if (a.low() < 0 || b.low() < 0) throw std::domain_error("divmod expects ordinary polynomials");
  int db = b.high();
  std::vector<mpq_class> r(a.high() + 1, mpq_class(0));
  for (int k = a.low(); k <= a.high(); ++k) r[k] = a.coeff(k);
  std::vector<mpq_class> bc(db + 1);
  for (int k = 0; k <= db; ++k) bc[k] = b.coeff(k);
  int dr = a.high();
  std::vector<mpq_class> qc(dr >= db ? dr - db + 1 : 0, mpq_class(0));
  mpq_class t;
  for (int k = dr; k >= db; --k) {
    if (r[k] == 0) continue;
    mpq_class f = r[k] / bc[db];
    qc[k - db] = f;
    for (int j = 0; j <= db; ++j) {
      t = f * bc[j];
      r[k - db + j] -= t;
    }
  }
  return {LaurentPoly::from_coeffs(std::move(qc)), LaurentPoly::from_coeffs(std::move(r))};
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly x = a, y = b;
  while (!y.is_zero()) {
    LaurentPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  mpq_class inv = 1 / x.lead();
  x *= inv;
  return x;
}

bool try_divide(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly* out) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_zero()) {
    *out = LaurentPoly();
    return true;
  }
  LaurentPoly an = a.shifted(-a.low()), bn = b.shifted(-b.low());
  auto [qt, r] = divmod(an, bn);
  if (!r.is_zero()) return false;
  *out = qt.shifted(a.low() - b.low());
  return true;
}

LaurentPoly cyclotomic(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic order must be positive");
  LaurentPoly p = LaurentPoly::monomial(1, m) - LaurentPoly(1);
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    LaurentPoly f = cyclotomic(d);
    auto [qt, r] = divmod(p, f);
    if (!r.is_zero()) throw std::logic_error("cyclotomic division not exact");
    p = qt;
  }
  return p;
}

}  // namespace poly

// -------------------------------------------------------------------- RatFunc

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFunc with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  // Move the monomial part of the denominator into the numerator.
  int shift = den_.low();
  LaurentPoly d = den_.shifted(-shift);
  LaurentPoly n = num_.shifted(-shift);
  if (d.is_constant()) {
    n *= mpq_class(1 / d.trail());
    num_ = std::move(n);
    den_ = LaurentPoly(1);
    return;
  }
  int nshift = n.low();
  LaurentPoly nn = n.shifted(-nshift);
  LaurentPoly qt;
  if (poly::try_divide(nn, d, &qt)) {
    num_ = qt.shifted(nshift);
    den_ = LaurentPoly(1);
    return;
  }
  LaurentPoly g = poly::gcd(nn, d);
  if (!g.is_constant()) {
    nn = poly::divmod(nn, g).first;
    d = poly::divmod(d, g).first;
  }
  mpq_class inv = 1 / d.trail();
  nn *= inv;
  d *= inv;
  num_ = nn.shifted(nshift);
  den_ = std::move(d);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_constant()) normalize();
    else if (num_.is_zero()) den_ = LaurentPoly(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFunc();
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ *= o.num_;
    return *this;
  }
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("RatFunc inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

std::string RatFunc::str() const {
  if (den_.is_constant()) return "(" + num_.str() + ")";
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc RatFunc::parse(const std::string& s) {
  auto strip = [](std::string t) {
    size_t a = t.find_first_not_of(" \t\n");
    size_t b = t.find_last_not_of(" \t\n");
    return a == std::string::npos ? std::string() : t.substr(a, b - a + 1);
  };
  std::string t = strip(s);
  if (t.empty() || t[0] != '(') return RatFunc(LaurentPoly::parse(t));
  size_t close = t.find(')');
  if (close == std::string::npos) throw ParseError("unbalanced '(' in '" + s + "'");
  LaurentPoly n = LaurentPoly::parse(t.substr(1, close - 1));
  std::string rest = strip(t.substr(close + 1));
  if (rest.empty()) return RatFunc(n);
  if (rest.size() < 3 || rest[0] != '/' ) throw ParseError("expected '/' in '" + s + "'");
  rest = strip(rest.substr(1));
  if (rest.front() != '(' || rest.back() != ')') throw ParseError("bad denominator in '" + s + "'");
  LaurentPoly d = LaurentPoly::parse(rest.substr(1, rest.size() - 2));
  return RatFunc(n, d);
}

// ----------------------------------------------------------------- CycloField

const CycloField& CycloField::get(int l) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycloField>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(l);
  if (it != registry.end()) return *it->second;
  if (l < 3 || l % 2 == 0) throw std::invalid_argument("root order l must be odd and >= 3");
  auto* f = new CycloField(l);
  registry.emplace(l, std::unique_ptr<CycloField>(f));
  return *f;
}

CycloField::CycloField(int l) : l_(l), phi_(poly::cyclotomic(4 * l)) { deg_ = phi_.high(); }

void CycloField::reduce(std::vector<mpq_class>& c) const {
  mpq_class t;
  for (int k = static_cast<int>(c.size()) - 1; k >= deg_; --k) {
    if (c[k] == 0) continue;
    mpq_class lead = c[k];
    c[k] = 0;
    for (int j = 0; j < deg_; ++j) {
      const mpq_class pj = phi_.coeff(j);
      if (pj == 0) continue;
      t = lead * pj;
      c[k - deg_ + j] -= t;
    }
  }
  c.resize(deg_, mpq_class(0));
}

Cyclotomic CycloField::xpow(long k) const {
  long m = order();
  long e = ((k % m) + m) % m;
  std::vector<mpq_class> c(static_cast<size_t>(std::max<long>(e + 1, deg_)), mpq_class(0));
  c[e] = 1;
  reduce(c);
  return Cyclotomic(this, std::move(c));
}

Cyclotomic CycloField::epsilon() const { return xpow(4); }
Cyclotomic CycloField::sqrt_epsilon() const { return xpow(sqrt_eps_exponent()); }
Cyclotomic CycloField::imag() const { return xpow(l_); }
Cyclotomic CycloField::zeta() const { return xpow(l_ + sqrt_eps_exponent()); }

// ----------------------------------------------------------------- Cyclotomic

Cyclotomic::Cyclotomic(long c) {
  if (c != 0) c_.emplace_back(c);
}

Cyclotomic::Cyclotomic(const mpq_class& c) {
  if (c != 0) c_.push_back(c);
}

Cyclotomic::Cyclotomic(const CycloField* f, std::vector<mpq_class> c) : f_(f), c_(std::move(c)) {
  if (f_ == nullptr) throw std::invalid_argument("Cyclotomic needs a field");
  if (static_cast<int>(c_.size()) != f_->degree()) {
    if (static_cast<int>(c_.size()) < f_->degree()) c_.resize(f_->degree(), mpq_class(0));
    else f_->reduce(c_);
  }
}

void Cyclotomic::promote(const CycloField* f) {
  if (f_ != nullptr || f == nullptr) return;
  mpq_class v = c_.empty() ? mpq_class(0) : c_[0];
  c_.assign(f->degree(), mpq_class(0));
  c_[0] = v;
  f_ = f;
}

bool Cyclotomic::is_zero() const {
  for (auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t k = 1; k < c_.size(); ++k)
    if (c_[k] != 0) return false;
  return true;
}

mpq_class Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value is not rational: " + str());
  return c_.empty() ? mpq_class(0) : c_[0];
}

mpq_class Cyclotomic::coeff(int k) const {
  return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : mpq_class(0);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

static void check_fields(const CycloField* a, const CycloField* b) {
  if (a != nullptr && b != nullptr && a != b)
    throw std::invalid_argument("mixing cyclotomic fields of different order");
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  check_fields(f_, o.f_);
  if (f_ == nullptr && o.f_ == nullptr) {
    mpq_class v = rational_value() + o.rational_value();
    *this = Cyclotomic(v);
    return *this;
  }
  promote(o.f_);
  if (o.f_ == nullptr) {
    if (!o.c_.empty()) c_[0] += o.c_[0];
    return *this;
  }
  for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  check_fields(f_, o.f_);
  if (o.f_ == nullptr) {
    mpq_class v = o.c_.empty() ? mpq_class(0) : o.c_[0];
    if (f_ == nullptr) return *this = Cyclotomic(rational_value() * v);
    for (auto& x : c_) x *= v;
    return *this;
  }
  if (f_ == nullptr) {
    mpq_class v = c_.empty() ? mpq_class(0) : c_[0];
    *this = o;
    for (auto& x : c_) x *= v;
    return *this;
  }
  int d = f_->degree();
  std::vector<mpq_class> r(2 * d - 1, mpq_class(0));
  mpq_class t;
  for (int i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (o.c_[j] == 0) continue;
      t = c_[i] * o.c_[j];
      r[i + j] += t;
    }
  }
  f_->reduce(r);
  c_ = std::move(r);
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("cyclotomic inverse of zero");
  if (f_ == nullptr) return Cyclotomic(mpq_class(1 / c_[0]));
  // Extended Euclid: find s with s*a = 1 mod Phi.
  LaurentPoly a = LaurentPoly::from_coeffs(c_);
  LaurentPoly r0 = f_->modulus(), r1 = a;
  LaurentPoly s0, s1(1);
  while (!r1.is_zero()) {
    auto [qt, r] = poly::divmod(r0, r1);
    LaurentPoly s = s0 - qt * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (!r0.is_constant()) throw std::logic_error("cyclotomic modulus is reducible");
  mpq_class inv = 1 / r0.trail();
  std::vector<mpq_class> out(std::max(f_->degree(), s0.high() + 1), mpq_class(0));
  for (int k = s0.low(); k <= s0.high(); ++k) out[k] = s0.coeff(k) * inv;
  return Cyclotomic(f_, std::move(out));
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

Cyclotomic Cyclotomic::pow(long k) const {
  Cyclotomic base = k < 0 ? inverse() : *this;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  Cyclotomic r(1);
  while (e) {
    if (e & 1UL) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (f_ == o.f_) return c_ == o.c_ || (is_zero() && o.is_zero());
  return (*this - o).is_zero();
}

std::string Cyclotomic::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (!first) out += " + ";
    first = false;
    out += c_[k].get_str() + "*x^" + std::to_string(k);
  }
  return out;
}

Cyclotomic Cyclotomic::parse(const std::string& s, const CycloField& f) {
  Cyclotomic r(0);
  r.promote(&f);
  for (auto& [e, c] : parse_terms(s, "x")) r += f.xpow(e) * Cyclotomic(c);
  return r;
}

// ------------------------------------------------------------- specialization

Cyclotomic specialize(const LaurentPoly& f, const Cyclotomic& point) {
  if (f.is_zero()) return Cyclotomic(0);
  Cyclotomic acc(0);
  Cyclotomic pw = point.pow(f.low());
  for (size_t k = 0; k < f.coeffs().size(); ++k) {
    if (f.coeffs()[k] != 0) acc += pw * Cyclotomic(f.coeffs()[k]);
    pw *= point;
  }
  return acc;
}

Cyclotomic specialize(const RatFunc& f, const Cyclotomic& point) {
  Cyclotomic d = specialize(f.den(), point);
  if (d.is_zero()) throw PoleAtSpecialization("denominator " + f.den().str() + " vanishes at the point");
  return specialize(f.num(), point) / d;
}

namespace {
Cyclotomic eval_root(const LaurentPoly& p, const CycloField& F) {
  const long m = F.order();
  const long e = F.sqrt_eps_exponent();
  std::vector<mpq_class> acc(static_cast<size_t>(std::max<long>(m, F.degree())), mpq_class(0));
  for (size_t k = 0; k < p.coeffs().size(); ++k) {
    if (p.coeffs()[k] == 0) continue;
    long ex = ((static_cast<long>(p.low()) + static_cast<long>(k)) * e % m + m) % m;
    acc[ex] += p.coeffs()[k];
  }
  F.reduce(acc);
  return Cyclotomic(&F, std::move(acc));
}
}  // namespace

Cyclotomic specialize_at_root(const RatFunc& f, int l) {
  const CycloField& F = CycloField::get(l);
  Cyclotomic n = eval_root(f.num(), F);
  if (f.den().is_constant()) return n;
  Cyclotomic d = eval_root(f.den(), F);
  if (d.is_zero())
    throw PoleAtSpecialization("denominator " + f.den().str() + " vanishes at v = eps^{1/2}, l = " +
                               std::to_string(l));
  return n / d;
}

mpq_class specialize(const RatFunc& f, const mpq_class& v0) {
  auto ev = [&](const LaurentPoly& p) {
    mpq_class acc = 0;
    mpq_class pw = 1;
    int lo = p.low();
    mpq_class base = lo < 0 ? mpq_class(1 / v0) : v0;
    for (int k = 0; k < (lo < 0 ? -lo : lo); ++k) pw *= base;
    for (auto& c : p.coeffs()) {
      acc += c * pw;
      pw *= v0;
    }
    return acc;
  };
  mpq_class d = ev(f.den());
  if (d == 0) throw PoleAtSpecialization("denominator vanishes at v = " + v0.get_str());
  return ev(f.num()) / d;
}

// ------------------------------------------------------------------ Chebyshev

IntPoly chebyshev(int k) {
  if (k < 0) throw std::invalid_argument("chebyshev index must be nonnegative");
  IntPoly t0{2}, t1{0, 1};
  if (k == 0) return t0;
  for (int j = 2; j <= k; ++j) {
    IntPoly t(t1.size() + 1, 0);
    for (size_t i = 0; i < t1.size(); ++i) t[i + 1] += t1[i];
    for (size_t i = 0; i < t0.size(); ++i) t[i] -= t0[i];
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  return t1;
}

IntPoly compose(const IntPoly& outer, const IntPoly& inner) {
  IntPoly acc{0};
  for (size_t k = outer.size(); k-- > 0;) {
    IntPoly t(acc.size() + inner.size() - 1, 0);
    for (size_t i = 0; i < acc.size(); ++i)
      for (size_t j = 0; j < inner.size(); ++j) t[i + j] += acc[i] * inner[j];
    t[0] += outer[k];
    acc = std::move(t);
  }
  while (acc.size() > 1 && acc.back() == 0) acc.pop_back();
  return acc;
}

std::string to_string(const IntPoly& p) {
  std::string out;
  for (size_t k = 0; k < p.size(); ++k) {
    if (p[k] == 0) continue;
    if (!out.empty()) out += " + ";
    out += p[k].get_str() + "*x^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace qgraph
