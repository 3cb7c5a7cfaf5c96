#pragma once

// Exact scalars for Hall-algebra coefficients.
//
// Three coefficient rings are supported:
//   * RationalFunctionV  -- Q(v), with q = v^2, for symbolic identities;
//   * SqrtExt            -- Q(sqrt(q0)) for a fixed prime power q0 (v = sqrt(q0));
//   * CycloSqrt          -- Q(zeta_p)(sqrt(q0)) for values of additive characters.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hall {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for division by zero, poles, base mismatches and unsupported scalars.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);
Integer ipow(long base, unsigned exp);

// ---------------------------------------------------------------------------
// PolyQ: dense polynomial with rational coefficients, stored low-to-high.
// Used both for polynomials in q (a_lambda, phi_s, interpolants) and
// internally for gcd computations in v.
class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(std::vector<Rational> coeffs);
  static PolyQ constant(const Rational& c);
  static PolyQ monomial(int degree, const Rational& c = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;
  PolyQ monic() const;

  PolyQ& operator+=(const PolyQ& o);
  PolyQ& operator-=(const PolyQ& o);
  PolyQ& operator*=(const PolyQ& o);
  PolyQ& operator*=(const Rational& c);
  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(PolyQ a, const PolyQ& b) { return a *= b; }
  friend PolyQ operator*(PolyQ a, const Rational& c) { return a *= c; }
  PolyQ operator-() const;
  friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; throws ArithmeticError when b is zero.
  static std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b);
  /// Monic gcd (zero only when both inputs are zero).
  static PolyQ gcd(PolyQ a, PolyQ b);

  std::string to_string(char var = 'q') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// ---------------------------------------------------------------------------
class LaurentPolyV {
 public:
  LaurentPolyV() = default;
  LaurentPolyV(const Rational& c);  // NOLINT: constants embed implicitly
  LaurentPolyV(long c) : LaurentPolyV(Rational(c)) {}  // NOLINT
  static LaurentPolyV v_power(int k, const Rational& c = 1);
  /// Substitutes q = v^2.
  static LaurentPolyV from_q_poly(const PolyQ& p);

  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int min_exponent() const;
  int max_exponent() const;
  Rational coeff(int e) const;

  LaurentPolyV& operator+=(const LaurentPolyV& o);
  LaurentPolyV& operator-=(const LaurentPolyV& o);
  LaurentPolyV& operator*=(const LaurentPolyV& o);
  friend LaurentPolyV operator+(LaurentPolyV a, const LaurentPolyV& b) { return a += b; }
  friend LaurentPolyV operator-(LaurentPolyV a, const LaurentPolyV& b) { return a -= b; }
  friend LaurentPolyV operator*(LaurentPolyV a, const LaurentPolyV& b) { return a *= b; }
  LaurentPolyV operator-() const;
  friend bool operator==(const LaurentPolyV& a, const LaurentPolyV& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  void add_term(int e, const Rational& c);
  std::map<int, Rational> terms_;
};

/// [s] = (v^s - v^-s) / (v - v^-1).
LaurentPolyV quantum_integer(int s);
/// [n]! = [1][2]...[n]; [0]! = 1.
LaurentPolyV quantum_factorial(int n);

// ---------------------------------------------------------------------------
// Element of Q(v). Canonical form: the denominator is a monic polynomial in v
// with nonzero constant term, coprime to the numerator; every power of v lives
// in the (Laurent) numerator. Equality of canonical forms is field equality.
class RationalFunctionV {
 public:
  RationalFunctionV() : den_(Rational(1)) {}
  RationalFunctionV(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  RationalFunctionV(long c) : RationalFunctionV(Rational(c)) {}         // NOLINT
  RationalFunctionV(const LaurentPolyV& p) : num_(p), den_(Rational(1)) {}  // NOLINT
  RationalFunctionV(const LaurentPolyV& num, const LaurentPolyV& den);

  static RationalFunctionV v() { return LaurentPolyV::v_power(1); }
  static RationalFunctionV q() { return LaurentPolyV::v_power(2); }
  static RationalFunctionV from_q_poly(const PolyQ& p) { return LaurentPolyV::from_q_poly(p); }
  /// Inverse of to_string (accepts the general +,-,*,/,^ grammar in v and q).
  static RationalFunctionV parse(std::string_view text);

  const LaurentPolyV& numerator() const { return num_; }
  const LaurentPolyV& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunctionV& operator+=(const RationalFunctionV& o);
  RationalFunctionV& operator-=(const RationalFunctionV& o);
  RationalFunctionV& operator*=(const RationalFunctionV& o);
  RationalFunctionV& operator/=(const RationalFunctionV& o);
  friend RationalFunctionV operator+(RationalFunctionV a, const RationalFunctionV& b) { return a += b; }
  friend RationalFunctionV operator-(RationalFunctionV a, const RationalFunctionV& b) { return a -= b; }
  friend RationalFunctionV operator*(RationalFunctionV a, const RationalFunctionV& b) { return a *= b; }
  friend RationalFunctionV operator/(RationalFunctionV a, const RationalFunctionV& b) { return a /= b; }
  RationalFunctionV operator-() const;
  RationalFunctionV pow(int k) const;
  friend bool operator==(const RationalFunctionV& a, const RationalFunctionV& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  void canonicalize();
  LaurentPolyV num_;
  LaurentPolyV den_;
};

enum class ArithOp { add, sub, mul, div };
RationalFunctionV rf_arith(const RationalFunctionV& a, const RationalFunctionV& b, ArithOp op);

// ---------------------------------------------------------------------------
// a + b*sqrt(q0). base 0 marks an unbound rational (b = 0) that combines with
// any base; combining two different nonzero bases is an error.
class SqrtExt {
 public:
  SqrtExt() = default;
  SqrtExt(const Rational& a) : a_(a) {}  // NOLINT
  SqrtExt(long a) : a_(a) {}             // NOLINT
  SqrtExt(long base, const Rational& a, const Rational& b = 0);

  static SqrtExt sqrt_of(long base) { return SqrtExt(base, 0, 1); }
  /// sqrt(q0)^k.
  static SqrtExt v_power(long base, int k);

  long base() const { return base_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  SqrtExt& operator+=(const SqrtExt& o);
  SqrtExt& operator-=(const SqrtExt& o);
  SqrtExt& operator*=(const SqrtExt& o);
  SqrtExt& operator/=(const SqrtExt& o);
  friend SqrtExt operator+(SqrtExt x, const SqrtExt& y) { return x += y; }
  friend SqrtExt operator-(SqrtExt x, const SqrtExt& y) { return x -= y; }
  friend SqrtExt operator*(SqrtExt x, const SqrtExt& y) { return x *= y; }
  friend SqrtExt operator/(SqrtExt x, const SqrtExt& y) { return x /= y; }
  SqrtExt operator-() const;
  SqrtExt inverse() const;
  friend bool operator==(const SqrtExt& x, const SqrtExt& y);
  friend bool operator!=(const SqrtExt& x, const SqrtExt& y) { return !(x == y); }

  std::string to_string() const;

 private:
  long join_base(const SqrtExt& o) const;
  void fold();
  long base_ = 0;
  Rational a_;
  Rational b_;
};

SqrtExt eval_v(const LaurentPolyV& f, long q0);
/// Specialises v to sqrt(q0); throws ArithmeticError at a pole.
SqrtExt eval_v(const RationalFunctionV& f, long q0);

// ---------------------------------------------------------------------------
// Element of Q(zeta_p)(sqrt(q0)) in the power basis 1, zeta, ..., zeta^(p-2).
class CycloSqrt {
 public:
  CycloSqrt(int p, long base);
  CycloSqrt(int p, long base, const SqrtExt& scalar);
  static CycloSqrt zeta_power(int p, long base, long k);

  int prime() const { return p_; }
  long base() const { return base_; }
  const std::vector<SqrtExt>& coords() const { return coords_; }
  bool is_zero() const;

  CycloSqrt& operator+=(const CycloSqrt& o);
  CycloSqrt& operator-=(const CycloSqrt& o);
  CycloSqrt& operator*=(const CycloSqrt& o);
  CycloSqrt& operator*=(const SqrtExt& s);
  friend CycloSqrt operator+(CycloSqrt x, const CycloSqrt& y) { return x += y; }
  friend CycloSqrt operator-(CycloSqrt x, const CycloSqrt& y) { return x -= y; }
  friend CycloSqrt operator*(CycloSqrt x, const CycloSqrt& y) { return x *= y; }
  friend CycloSqrt operator*(CycloSqrt x, const SqrtExt& s) { return x *= s; }
  CycloSqrt operator-() const;
  /// Complex conjugation zeta -> zeta^-1 (sqrt(q0) is real).
  CycloSqrt conjugate() const;
  friend bool operator==(const CycloSqrt& x, const CycloSqrt& y);

  /// The value as an element of Q(sqrt(q0)) when it lies there.
  std::optional<SqrtExt> to_sqrt_ext() const;
  std::string to_string() const;

 private:
  void check_compatible(const CycloSqrt& o) const;
  int p_;
  long base_;
  std::vector<SqrtExt> coords_;
};

// ---------------------------------------------------------------------------
/// Lagrange interpolation through (q_i, value_i). The first degree_bound+1
/// points determine the polynomial; any further points must agree with it.
PolyQ interpolate_q(const std::vector<std::pair<long, Rational>>& points, int degree_bound);

}  // namespace hall
