#include "hall/gf.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace hall {

std::pair<int, int> prime_power(long q) {
  if (q < 2) throw std::invalid_argument("not a prime power: " + std::to_string(q));
  long p = 2;
  while (p * p <= q && q % p) ++p;
  if (q % p) p = q;
  int e = 0;
  long r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1) throw std::invalid_argument("not a prime power: " + std::to_string(q));
  return {static_cast<int>(p), e};
}

bool is_prime_power(long q) {
  try {
    prime_power(q);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

namespace {

using Poly = std::vector<int>;  // low-to-high over GF(p)

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int inv_mod(int a, int p) {
  for (int x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  throw std::domain_error("no inverse mod p");
}

Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  const int dm = static_cast<int>(m.size()) - 1;
  const int lead_inv = inv_mod(m.back(), p);
  while (static_cast<int>(a.size()) - 1 >= dm) {
    int shift = static_cast<int>(a.size()) - 1 - dm;
    int c = a.back() * lead_inv % p;
    for (int j = 0; j <= dm; ++j) a[static_cast<size_t>(shift + j)] = ((a[static_cast<size_t>(shift + j)] - c * m[static_cast<size_t>(j)]) % p + p) % p;
    trim(a);
  }
  return a;
}

Poly from_digits(long n, int p, int len) {
  Poly r(static_cast<size_t>(len));
  for (int i = 0; i < len; ++i) {
    r[static_cast<size_t>(i)] = static_cast<int>(n % p);
    n /= p;
  }
  return r;
}

bool irreducible(const Poly& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long n = 0; n < count; ++n) {
      Poly g = from_digits(n, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FieldSpec::FieldSpec(long q) {
  auto [p, e] = prime_power(q);
  p_ = p;
  e_ = e;
  q_ = q;
  // monic polynomials of degree e, in increasing order of sum c_i p^i
  for (long n = 0; n < q; ++n) {
    Poly f = from_digits(n, p, e);
    f.push_back(1);
    if (e == 1 || irreducible(f, p)) {
      if (e == 1) f = {0, 1};  // x itself; GF(p) needs no reduction
      modulus_ = f;
      return;
    }
  }
  throw std::logic_error("no irreducible polynomial found");
}

FieldElem::FieldElem(std::shared_ptr<const FieldSpec> spec, std::vector<int> coeffs)
    : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {
  const int p = spec_->p();
  coeffs_.resize(static_cast<size_t>(spec_->e()), 0);
  for (int& c : coeffs_) c = ((c % p) + p) % p;
}

long FieldElem::code() const {
  long c = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) c = c * spec_->p() + *it;
  return c;
}

bool FieldElem::is_zero() const {
  for (int c : coeffs_)
    if (c) return false;
  return true;
}

void FieldElem::check_same(const FieldElem& o) const {
  if (spec_->q() != o.spec_->q()) throw std::invalid_argument("field mismatch");
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check_same(o);
  std::vector<int> r(coeffs_);
  for (size_t i = 0; i < r.size(); ++i) r[i] += o.coeffs_[i];
  return FieldElem(spec_, r);
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator-() const {
  std::vector<int> r(coeffs_);
  for (int& c : r) c = -c;
  return FieldElem(spec_, r);
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  check_same(o);
  const int p = spec_->p();
  Poly prod(coeffs_.size() * 2, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) prod[i + j] = (prod[i + j] + coeffs_[i] * o.coeffs_[j]) % p;
  if (spec_->e() == 1) return FieldElem(spec_, {prod[0]});
  return FieldElem(spec_, poly_mod(prod, spec_->modulus(), p));
}

FieldElem FieldElem::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  FieldElem r = elem_from_code(spec_, 1), b = *this;
  while (k) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero field element");
  return pow(spec_->q() - 2);
}

std::string FieldElem::to_string() const {
  std::string s = spec_->name() + ":[";
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coeffs_[i]);
  }
  return s + "]";
}

FieldElem elem_from_code(const std::shared_ptr<const FieldSpec>& spec, long code) {
  if (code < 0 || code >= spec->q()) throw std::out_of_range("field element code out of range");
  return FieldElem(spec, from_digits(code, spec->p(), spec->e()));
}

std::vector<FieldElem> enumerate(const std::shared_ptr<const FieldSpec>& spec) {
  if (spec->q() > 10000) throw std::out_of_range("enumerate: field larger than 10^4 elements");
  std::vector<FieldElem> out;
  out.reserve(static_cast<size_t>(spec->q()));
  for (long c = 0; c < spec->q(); ++c) out.push_back(elem_from_code(spec, c));
  return out;
}

int trace_to_prime(const FieldElem& x) {
  FieldElem acc = x, term = x;
  for (int i = 1; i < x.spec().e(); ++i) {
    term = term.pow(x.spec().p());
    acc = acc + term;
  }
  for (size_t i = 1; i < acc.coeffs().size(); ++i)
    if (acc.coeffs()[i]) throw std::logic_error("trace left the prime field");
  return acc.coeffs()[0];
}

CycloSqrt additive_character(const FieldElem& x, long base) {
  if (base > 1 && prime_power(base).first != x.spec().p())
    throw std::invalid_argument("additive_character: characteristic mismatch");
  return CycloSqrt::zeta_power(x.spec().p(), base, trace_to_prime(x));
}

Field::Field(long q) : spec_(std::make_shared<const FieldSpec>(q)), q_(static_cast<int>(q)) {
  if (q > 256) throw std::out_of_range("Field tables support q <= 256");
  const size_t n = static_cast<size_t>(q);
  add_.resize(n * n);
  mul_.resize(n * n);
  neg_.resize(n);
  inv_.assign(n, -1);
  trace_.resize(n);
  auto elems = enumerate(spec_);
  for (size_t a = 0; a < n; ++a) {
    neg_[a] = static_cast<int>((-elems[a]).code());
    trace_[a] = trace_to_prime(elems[a]);
    for (size_t b = 0; b < n; ++b) {
      add_[a * n + b] = static_cast<int>((elems[a] + elems[b]).code());
      mul_[a * n + b] = static_cast<int>((elems[a] * elems[b]).code());
      if (mul_[a * n + b] == 1) inv_[a] = static_cast<int>(b);
    }
  }
  for (int g = 1; g < q_; ++g) {
    int x = g, order = 1;
    while (x != 1) {
      x = mul(x, g);
      ++order;
    }
    if (order == q_ - 1) {
      primitive_ = g;
      break;
    }
  }
}

int Field::inv(int a) const {
  if (a == 0) throw std::domain_error("inverse of zero field element");
  return inv_[static_cast<size_t>(a)];
}

std::vector<int> Field::prime_basis() const {
  std::vector<int> b;
  int c = 1;
  for (int i = 0; i < e(); ++i, c *= p()) b.push_back(c);
  return b;
}

std::shared_ptr<const Field> Field::get(long q) {
  static std::mutex mu;
  static std::map<long, std::shared_ptr<const Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[q];
  if (!slot) slot = std::make_shared<const Field>(q);
  return slot;
}

}  // namespace hall
