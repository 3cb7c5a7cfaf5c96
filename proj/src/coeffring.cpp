#include "hall/coeffring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace hall {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: '" + s + "'");
  r.canonicalize();
  return r;
}

Integer ipow(long base, unsigned exp) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(std::labs(base)), exp);
  if (base < 0 && (exp & 1U)) r = -r;
  return r;
}

// ---------------------------------------------------------------------------
// PolyQ

PolyQ::PolyQ(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyQ PolyQ::constant(const Rational& c) { return PolyQ(std::vector<Rational>{c}); }

PolyQ PolyQ::monomial(int degree, const Rational& c) {
  std::vector<Rational> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return PolyQ(std::move(v));
}

void PolyQ::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational PolyQ::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<size_t>(i)];
}

const Rational& PolyQ::leading() const {
  if (coeffs_.empty()) throw ArithmeticError("leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rational PolyQ::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PolyQ PolyQ::monic() const {
  if (is_zero()) return *this;
  PolyQ r = *this;
  Rational inv = 1 / leading();
  for (auto& c : r.coeffs_) c *= inv;
  return r;
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator*=(const PolyQ& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

PolyQ& PolyQ::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

PolyQ PolyQ::operator-() const {
  PolyQ r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::pair<PolyQ, PolyQ> PolyQ::divmod(const PolyQ& a, const PolyQ& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  PolyQ rem = a;
  if (a.degree() < b.degree()) return {PolyQ(), rem};
  std::vector<Rational> quot(static_cast<size_t>(a.degree() - b.degree()) + 1);
  Rational inv = 1 / b.leading();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    Rational c = rem.coeff(k);
    if (sgn(c) == 0) continue;
    c *= inv;
    quot[static_cast<size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) rem.coeffs_[static_cast<size_t>(k - db + j)] -= c * b.coeffs_[static_cast<size_t>(j)];
  }
  rem.trim();
  return {PolyQ(std::move(quot)), rem};
}

PolyQ PolyQ::gcd(PolyQ a, PolyQ b) {
  while (!b.is_zero()) {
    PolyQ r = divmod(a, b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

std::string render_terms(const std::vector<std::pair<int, Rational>>& desc, const std::string& var) {
  if (desc.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : desc) {
    Rational mag = abs(c);
    if (sgn(c) < 0) out += "-";
    else if (!first) out += "+";
    first = false;
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string PolyQ::to_string(char var) const {
  std::vector<std::pair<int, Rational>> desc;
  for (int i = degree(); i >= 0; --i)
    if (sgn(coeffs_[static_cast<size_t>(i)]) != 0) desc.emplace_back(i, coeffs_[static_cast<size_t>(i)]);
  return render_terms(desc, std::string(1, var));
}

// ---------------------------------------------------------------------------
// LaurentPolyV

LaurentPolyV::LaurentPolyV(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(0, c);
}

LaurentPolyV LaurentPolyV::v_power(int k, const Rational& c) {
  LaurentPolyV r;
  if (sgn(c) != 0) r.terms_.emplace(k, c);
  return r;
}

LaurentPolyV LaurentPolyV::from_q_poly(const PolyQ& p) {
  LaurentPolyV r;
  for (int i = 0; i <= p.degree(); ++i) r.add_term(2 * i, p.coeff(i));
  return r;
}

int LaurentPolyV::min_exponent() const {
  if (terms_.empty()) throw ArithmeticError("exponent of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPolyV::max_exponent() const {
  if (terms_.empty()) throw ArithmeticError("exponent of zero polynomial");
  return terms_.rbegin()->first;
}

Rational LaurentPolyV::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPolyV::add_term(int e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

LaurentPolyV& LaurentPolyV::operator+=(const LaurentPolyV& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolyV& LaurentPolyV::operator-=(const LaurentPolyV& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolyV& LaurentPolyV::operator*=(const LaurentPolyV& o) {
  LaurentPolyV r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  *this = std::move(r);
  return *this;
}

LaurentPolyV LaurentPolyV::operator-() const {
  LaurentPolyV r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

std::string LaurentPolyV::to_string() const {
  std::vector<std::pair<int, Rational>> desc(terms_.rbegin(), terms_.rend());
  return render_terms(desc, "v");
}

LaurentPolyV quantum_integer(int s) {
  // v^{s-1} + v^{s-3} + ... + v^{1-s}
  if (s < 0) return -quantum_integer(-s);
  LaurentPolyV r;
  for (int k = 0; k < s; ++k) r += LaurentPolyV::v_power(s - 1 - 2 * k);
  return r;
}

LaurentPolyV quantum_factorial(int n) {
  if (n < 0) throw std::invalid_argument("quantum_factorial: negative argument");
  LaurentPolyV r(1);
  for (int s = 2; s <= n; ++s) r *= quantum_integer(s);
  return r;
}

// ---------------------------------------------------------------------------
// RationalFunctionV

namespace {

// p = v^shift * poly(v), poly(0) != 0
std::pair<int, PolyQ> split_laurent(const LaurentPolyV& p) {
  int lo = p.min_exponent();
  std::vector<Rational> c(static_cast<size_t>(p.max_exponent() - lo) + 1);
  for (const auto& [e, x] : p.terms()) c[static_cast<size_t>(e - lo)] = x;
  return {lo, PolyQ(std::move(c))};
}

int exponent_gcd(const PolyQ& p, int g) {
  for (int i = 1; i <= p.degree() && g != 1; ++i)
    if (sgn(p.coeff(i)) != 0) g = std::gcd(g, i);
  return g;
}

PolyQ compress(const PolyQ& p, int g) {
  if (g == 1) return p;
  std::vector<Rational> c(static_cast<size_t>(p.degree() / g) + 1);
  for (int i = 0; i <= p.degree(); i += g) c[static_cast<size_t>(i / g)] = p.coeff(i);
  return PolyQ(std::move(c));
}

LaurentPolyV expand(const PolyQ& p, int g, int shift) {
  LaurentPolyV r;
  for (int i = 0; i <= p.degree(); ++i)
    if (sgn(p.coeff(i)) != 0) r += LaurentPolyV::v_power(shift + g * i, p.coeff(i));
  return r;
}

}  // namespace

RationalFunctionV::RationalFunctionV(const LaurentPolyV& num, const LaurentPolyV& den) : num_(num), den_(den) {
  canonicalize();
}

void RationalFunctionV::canonicalize() {
  if (den_.is_zero()) throw ArithmeticError("division by zero");
  if (num_.is_zero()) {
    den_ = LaurentPolyV(1);
    return;
  }
  auto [ns, np] = split_laurent(num_);
  auto [ds, dp] = split_laurent(den_);
  if (dp.degree() == 0) {
    Rational inv = 1 / dp.coeff(0);
    np *= inv;
    num_ = expand(np, 1, ns - ds);
    den_ = LaurentPolyV(1);
    return;
  }
  // Both sides are polynomials in v^g; work in w = v^g, where the gcd is
  // the same computation on far smaller inputs.
  int g = exponent_gcd(dp, exponent_gcd(np, 0));
  if (g == 0) g = 1;
  PolyQ a = compress(np, g), b = compress(dp, g);
  PolyQ d = PolyQ::gcd(a, b);
  if (d.degree() > 0) {
    a = PolyQ::divmod(a, d).first;
    b = PolyQ::divmod(b, d).first;
  }
  Rational inv = 1 / b.leading();
  a *= inv;
  b *= inv;
  num_ = expand(a, g, ns - ds);
  den_ = expand(b, g, 0);
}

RationalFunctionV& RationalFunctionV::operator+=(const RationalFunctionV& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  canonicalize();
  return *this;
}

RationalFunctionV& RationalFunctionV::operator-=(const RationalFunctionV& o) { return *this += -o; }

RationalFunctionV& RationalFunctionV::operator*=(const RationalFunctionV& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

RationalFunctionV& RationalFunctionV::operator/=(const RationalFunctionV& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  canonicalize();
  return *this;
}

RationalFunctionV RationalFunctionV::operator-() const {
  RationalFunctionV r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunctionV RationalFunctionV::pow(int k) const {
  if (k < 0) return RationalFunctionV(1) / pow(-k);
  RationalFunctionV r(1), b = *this;
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

std::string RationalFunctionV::to_string() const {
  if (den_ == LaurentPolyV(1)) return num_.to_string();
  if (num_ == LaurentPolyV(1)) return "(" + den_.to_string() + ")^-1";
  std::string n = num_.to_string();
  bool bare = num_.terms().size() == 1 && sgn(num_.terms().begin()->second) > 0;
  return "(" + den_.to_string() + ")^-1 * " + (bare ? n : "(" + n + ")");
}

RationalFunctionV rf_arith(const RationalFunctionV& a, const RationalFunctionV& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw std::logic_error("rf_arith: bad op");
}

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  RationalFunctionV run() {
    RationalFunctionV r = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse '" + std::string(s_) + "' at " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  long integer() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }
  RationalFunctionV expr() {
    bool neg = eat('-');
    RationalFunctionV r = term();
    if (neg) r = -r;
    for (;;) {
      if (eat('+')) r += term();
      else if (eat('-')) r -= term();
      else return r;
    }
  }
  RationalFunctionV term() {
    RationalFunctionV r = power();
    for (;;) {
      if (eat('*')) r *= power();
      else if (eat('/')) r /= power();
      else return r;
    }
  }
  RationalFunctionV power() {
    RationalFunctionV b = primary();
    if (eat('^')) {
      bool neg = eat('-');
      long k = integer();
      b = b.pow(static_cast<int>(neg ? -k : k));
    }
    return b;
  }
  RationalFunctionV primary() {
    skip();
    if (eat('(')) {
      RationalFunctionV r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (eat('v')) return RationalFunctionV::v();
    if (eat('q')) return RationalFunctionV::q();
    if (eat('-')) return -primary();
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RationalFunctionV(Rational(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    fail("unexpected character");
  }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

RationalFunctionV RationalFunctionV::parse(std::string_view text) { return ExprParser(text).run(); }

// ---------------------------------------------------------------------------
// SqrtExt

namespace {

bool is_perfect_square(long n) { return n >= 0 && mpz_perfect_square_p(mpz_class(n).get_mpz_t()); }

long isqrt(long n) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), mpz_class(n).get_mpz_t());
  return r.get_si();
}

}  // namespace

SqrtExt::SqrtExt(long base, const Rational& a, const Rational& b) : base_(base), a_(a), b_(b) {
  if (base < 0 || base == 1) throw std::invalid_argument("SqrtExt: base must be 0 or >= 2");
  if (base == 0 && sgn(b) != 0) throw std::invalid_argument("SqrtExt: unbound value with irrational part");
  fold();
}

void SqrtExt::fold() {
  if (base_ > 0 && sgn(b_) != 0 && is_perfect_square(base_)) {
    a_ += b_ * isqrt(base_);
    b_ = 0;
  }
}

SqrtExt SqrtExt::v_power(long base, int k) {
  if (base < 2) throw std::invalid_argument("SqrtExt::v_power: base must be a prime power");
  int m = k >= 0 ? k / 2 : -((-k + 1) / 2);  // floor(k/2)
  int odd = k - 2 * m;
  Rational scale = m >= 0 ? Rational(ipow(base, static_cast<unsigned>(m)))
                          : Rational(Integer(1), ipow(base, static_cast<unsigned>(-m)));
  scale.canonicalize();
  return odd ? SqrtExt(base, 0, scale) : SqrtExt(base, scale, 0);
}

long SqrtExt::join_base(const SqrtExt& o) const {
  if (base_ == 0) return o.base_;
  if (o.base_ == 0 || o.base_ == base_) return base_;
  throw ArithmeticError("SqrtExt: mixing bases " + std::to_string(base_) + " and " + std::to_string(o.base_));
}

SqrtExt& SqrtExt::operator+=(const SqrtExt& o) {
  base_ = join_base(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

SqrtExt& SqrtExt::operator-=(const SqrtExt& o) {
  base_ = join_base(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

SqrtExt& SqrtExt::operator*=(const SqrtExt& o) {
  base_ = join_base(o);
  Rational a = a_ * o.a_ + b_ * o.b_ * base_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

SqrtExt SqrtExt::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  // (a + b s)^-1 = (a - b s)/(a^2 - b^2 q0); the norm is nonzero since q0 is not a square
  Rational norm = a_ * a_ - b_ * b_ * base_;
  SqrtExt r;
  r.base_ = base_;
  r.a_ = a_ / norm;
  r.b_ = -b_ / norm;
  return r;
}

SqrtExt& SqrtExt::operator/=(const SqrtExt& o) {
  join_base(o);
  return *this *= o.inverse();
}

SqrtExt SqrtExt::operator-() const {
  SqrtExt r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

bool operator==(const SqrtExt& x, const SqrtExt& y) {
  if (x.base_ != y.base_ && x.base_ != 0 && y.base_ != 0 && (sgn(x.b_) != 0 || sgn(y.b_) != 0)) return false;
  return x.a_ == y.a_ && x.b_ == y.b_;
}

std::string SqrtExt::to_string() const {
  if (sgn(b_) == 0) return a_.get_str();
  std::string root = "sqrt(" + std::to_string(base_) + ")";
  std::string bpart = b_ == 1 ? root : b_ == -1 ? "-" + root : b_.get_str() + "*" + root;
  if (sgn(a_) == 0) return bpart;
  return a_.get_str() + (sgn(b_) > 0 ? "+" : "") + bpart;
}

SqrtExt eval_v(const LaurentPolyV& f, long q0) {
  SqrtExt r(q0, 0);
  for (const auto& [e, c] : f.terms()) r += SqrtExt::v_power(q0, e) * SqrtExt(c);
  return r;
}

SqrtExt eval_v(const RationalFunctionV& f, long q0) {
  SqrtExt den = eval_v(f.denominator(), q0);
  if (den.is_zero()) throw ArithmeticError("pole at v = sqrt(" + std::to_string(q0) + ")");
  return eval_v(f.numerator(), q0) / den;
}

// ---------------------------------------------------------------------------
// CycloSqrt

namespace {

void check_prime(int p) {
  if (p != 2 && p != 3 && p != 5 && p != 7) throw ArithmeticError("unsupported scalar: cyclotomic prime must be 2, 3, 5 or 7");
}

}  // namespace

CycloSqrt::CycloSqrt(int p, long base) : p_(p), base_(base) {
  check_prime(p);
  coords_.assign(static_cast<size_t>(p - 1), SqrtExt(base, 0));
}

CycloSqrt::CycloSqrt(int p, long base, const SqrtExt& scalar) : CycloSqrt(p, base) {
  coords_[0] += scalar;
}

CycloSqrt CycloSqrt::zeta_power(int p, long base, long k) {
  CycloSqrt r(p, base);
  long e = ((k % p) + p) % p;
  if (e == p - 1) {
    for (auto& c : r.coords_) c = SqrtExt(base, -1);
  } else {
    r.coords_[static_cast<size_t>(e)] = SqrtExt(base, 1);
  }
  return r;
}

bool CycloSqrt::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const SqrtExt& c) { return c.is_zero(); });
}

void CycloSqrt::check_compatible(const CycloSqrt& o) const {
  if (p_ != o.p_ || base_ != o.base_) throw ArithmeticError("CycloSqrt: incompatible rings");
}

CycloSqrt& CycloSqrt::operator+=(const CycloSqrt& o) {
  check_compatible(o);
  for (size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

CycloSqrt& CycloSqrt::operator-=(const CycloSqrt& o) {
  check_compatible(o);
  for (size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

CycloSqrt& CycloSqrt::operator*=(const CycloSqrt& o) {
  check_compatible(o);
  const size_t p = static_cast<size_t>(p_);
  std::vector<SqrtExt> full(p, SqrtExt(base_, 0));
  for (size_t i = 0; i + 1 < p; ++i) {
    if (coords_[i].is_zero()) continue;
    for (size_t j = 0; j + 1 < p; ++j) full[(i + j) % p] += coords_[i] * o.coords_[j];
  }
  // zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))
  for (size_t i = 0; i + 1 < p; ++i) coords_[i] = full[i] - full[p - 1];
  return *this;
}

CycloSqrt& CycloSqrt::operator*=(const SqrtExt& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

CycloSqrt CycloSqrt::operator-() const {
  CycloSqrt r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

CycloSqrt CycloSqrt::conjugate() const {
  CycloSqrt r(p_, base_);
  for (size_t k = 0; k < coords_.size(); ++k) {
    if (coords_[k].is_zero()) continue;
    CycloSqrt z = zeta_power(p_, base_, -static_cast<long>(k));
    z *= coords_[k];
    r += z;
  }
  return r;
}

bool operator==(const CycloSqrt& x, const CycloSqrt& y) {
  return x.p_ == y.p_ && x.base_ == y.base_ && x.coords_ == y.coords_;
}

std::optional<SqrtExt> CycloSqrt::to_sqrt_ext() const {
  for (size_t i = 1; i < coords_.size(); ++i)
    if (!coords_[i].is_zero()) return std::nullopt;
  return coords_[0];
}

std::string CycloSqrt::to_string() const {
  if (auto s = to_sqrt_ext()) return s->to_string();
  std::string out;
  for (size_t k = 0; k < coords_.size(); ++k) {
    if (coords_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string z = k == 0 ? "" : k == 1 ? "z" + std::to_string(p_) : "z" + std::to_string(p_) + "^" + std::to_string(k);
    out += k == 0 ? coords_[k].to_string() : "(" + coords_[k].to_string() + ")*" + z;
  }
  return out;
}

// ---------------------------------------------------------------------------

PolyQ interpolate_q(const std::vector<std::pair<long, Rational>>& points, int degree_bound) {
  if (degree_bound < 0) throw std::invalid_argument("interpolate_q: negative degree bound");
  const size_t need = static_cast<size_t>(degree_bound) + 1;
  if (points.size() < need)
    throw std::invalid_argument("interpolate_q: need " + std::to_string(need) + " points, got " +
                                std::to_string(points.size()));
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      if (points[i].first == points[j].first)
        throw std::invalid_argument("interpolate_q: repeated sample q=" + std::to_string(points[i].first));
  PolyQ result;
  for (size_t i = 0; i < need; ++i) {
    PolyQ basis = PolyQ::constant(1);
    Rational denom = 1;
    for (size_t j = 0; j < need; ++j) {
      if (j == i) continue;
      basis *= PolyQ(std::vector<Rational>{Rational(-points[j].first), Rational(1)});
      denom *= Rational(points[i].first - points[j].first);
    }
    result += basis * (points[i].second / denom);
  }
  for (size_t i = need; i < points.size(); ++i) {
    Rational got = result(Rational(points[i].first));
    if (got != points[i].second)
      throw ArithmeticError("interpolate_q: inconsistent sample at q=" + std::to_string(points[i].first) + " (value " +
                            points[i].second.get_str() + ", interpolant gives " + got.get_str() + ")");
  }
  return result;
}

}  // namespace hall
