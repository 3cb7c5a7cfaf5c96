#pragma once

// Finite fields GF(p^e) with the lexicographically smallest monic irreducible
// modulus. Elements are coded as integers sum c_i p^i (c_0 = constant term),
// so the prime subfield consists of the codes 0..p-1.

#include <memory>
#include <string>
#include <vector>

#include "hall/coeffring.hpp"

namespace hall {

class FieldSpec {
 public:
  /// q must be a prime power.
  explicit FieldSpec(long q);

  int p() const { return p_; }
  int e() const { return e_; }
  long q() const { return q_; }
  /// Coefficients low-to-high, length e+1, leading 1.
  const std::vector<int>& modulus() const { return modulus_; }
  std::string name() const { return "GF(" + std::to_string(q_) + ")"; }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) { return a.q_ == b.q_; }

 private:
  int p_ = 0;
  int e_ = 0;
  long q_ = 0;
  std::vector<int> modulus_;
};

/// Splits q = p^e; throws std::invalid_argument if q is not a prime power.
std::pair<int, int> prime_power(long q);
bool is_prime_power(long q);

class FieldElem {
 public:
  FieldElem(std::shared_ptr<const FieldSpec> spec, std::vector<int> coeffs);

  const FieldSpec& spec() const { return *spec_; }
  const std::shared_ptr<const FieldSpec>& spec_ptr() const { return spec_; }
  const std::vector<int>& coeffs() const { return coeffs_; }
  long code() const;
  bool is_zero() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem inverse() const;
  FieldElem pow(long k) const;
  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.spec_->q() == b.spec_->q() && a.coeffs_ == b.coeffs_;
  }

  /// `GF(4):[1,1]`
  std::string to_string() const;

 private:
  void check_same(const FieldElem& o) const;
  std::shared_ptr<const FieldSpec> spec_;
  std::vector<int> coeffs_;
};

/// All p^e elements in base-p counting order (cap p^e <= 10^4).
std::vector<FieldElem> enumerate(const std::shared_ptr<const FieldSpec>& spec);
FieldElem elem_from_code(const std::shared_ptr<const FieldSpec>& spec, long code);

/// Tr(x) = x + x^p + ... + x^{p^{e-1}}, as a value in 0..p-1.
int trace_to_prime(const FieldElem& x);
/// psi(x) = zeta_p^{Tr x} inside Q(zeta_p)(sqrt(base)).
CycloSqrt additive_character(const FieldElem& x, long base);

/// Table-driven arithmetic on element codes, for the inner loops of the
/// representation engines. Supports q <= 256.
class Field {
 public:
  explicit Field(long q);
  /// Shared instance per q.
  static std::shared_ptr<const Field> get(long q);

  const std::shared_ptr<const FieldSpec>& spec() const { return spec_; }
  int q() const { return q_; }
  int p() const { return spec_->p(); }
  int e() const { return spec_->e(); }

  int add(int a, int b) const { return add_[static_cast<size_t>(a * q_ + b)]; }
  int mul(int a, int b) const { return mul_[static_cast<size_t>(a * q_ + b)]; }
  int neg(int a) const { return neg_[static_cast<size_t>(a)]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int inv(int a) const;
  int trace(int a) const { return trace_[static_cast<size_t>(a)]; }
  /// A generator of the multiplicative group.
  int primitive_element() const { return primitive_; }
  /// Codes of 1, x, ..., x^{e-1}: a basis of F_q over F_p.
  std::vector<int> prime_basis() const;

  FieldElem elem(int code) const { return elem_from_code(spec_, code); }

 private:
  std::shared_ptr<const FieldSpec> spec_;
  int q_;
  std::vector<int> add_, mul_, neg_, inv_, trace_;
  int primitive_ = 1;
};

}  // namespace hall
