#pragma once

// The twisted Ringel-Hall bialgebra over an engine.
//
//   [M][N]  = sum_L v^<M,N> F^L_{M,N} [L]
//   D([M])  = sum v^<X,Y> a_X a_Y / a_M F^M_{X,Y} [X] (x) [Y]
//   {[M],[N]} = delta / a_M
//
// Elements are sparse maps IsoClass -> scalar. Numeric elements use SqrtExt
// (v = sqrt(q0)); Fourier images use CycloSqrt; symbolic RationalFunctionV
// elements are containers only and must be specialised before multiplying.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hall/coeffring.hpp"
#include "hall/report.hpp"
#include "hall/repengine.hpp"
#include "json.hpp"

namespace hall {

/// Predicate selecting the classes of a subcategory. The zero module is
/// always admitted.
using ClassPredicate = std::function<bool(const IsoClass&)>;

template <class S>
S lift(const Engine& e, const SqrtExt& x);

template <>
inline SqrtExt lift<SqrtExt>(const Engine&, const SqrtExt& x) {
  return x;
}

template <>
inline CycloSqrt lift<CycloSqrt>(const Engine& e, const SqrtExt& x) {
  return CycloSqrt(e.field().p(), e.q(), x);
}

template <>
inline RationalFunctionV lift<RationalFunctionV>(const Engine&, const SqrtExt& x) {
  if (!x.is_rational()) throw ArithmeticError("unsupported scalar: irrational value in a symbolic element");
  return RationalFunctionV(x.a());
}

std::string coeff_to_string(const SqrtExt& x);
std::string coeff_to_string(const CycloSqrt& x);
std::string coeff_to_string(const RationalFunctionV& x);
nlohmann::json coeff_to_json(const SqrtExt& x);
nlohmann::json coeff_to_json(const CycloSqrt& x);
nlohmann::json coeff_to_json(const RationalFunctionV& x);

template <class S>
class BasicHallElement {
 public:
  BasicHallElement() = default;
  explicit BasicHallElement(std::shared_ptr<const Engine> e) : engine_(std::move(e)) {}

  static BasicHallElement basis(std::shared_ptr<const Engine> e, const IsoClass& c) {
    BasicHallElement x(e);
    x.add_term(c, x.one());
    return x;
  }
  static BasicHallElement basis(std::shared_ptr<const Engine> e, const IsoClass& c, const S& coeff) {
    BasicHallElement x(std::move(e));
    x.add_term(c, coeff);
    return x;
  }

  const Engine& engine() const {
    if (!engine_) throw std::logic_error("Hall element has no engine");
    return *engine_;
  }
  const std::shared_ptr<const Engine>& engine_ptr() const { return engine_; }
  const std::map<IsoClass, S>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  S zero() const { return lift<S>(engine(), SqrtExt(0)); }
  S one() const { return lift<S>(engine(), SqrtExt(1)); }

  S coeff(const IsoClass& c) const {
    auto it = terms_.find(c);
    return it == terms_.end() ? zero() : it->second;
  }

  void add_term(const IsoClass& c, const S& x) {
    if (x.is_zero()) return;
    auto it = terms_.find(c);
    if (it == terms_.end()) {
      terms_.emplace(c, x);
      return;
    }
    it->second += x;
    if (it->second.is_zero()) terms_.erase(it);
  }

  /// Grade of a nonzero homogeneous element.
  std::optional<DimVector> grade() const {
    if (terms_.empty()) return std::nullopt;
    const DimVector& g = terms_.begin()->first.grade;
    for (const auto& [c, x] : terms_)
      if (c.grade != g) return std::nullopt;
    return g;
  }

  BasicHallElement& operator+=(const BasicHallElement& o) {
    check_engine(o);
    if (!engine_) engine_ = o.engine_;
    for (const auto& [c, x] : o.terms_) add_term(c, x);
    return *this;
  }
  BasicHallElement& operator-=(const BasicHallElement& o) {
    check_engine(o);
    if (!engine_) engine_ = o.engine_;
    for (const auto& [c, x] : o.terms_) add_term(c, -x);
    return *this;
  }
  BasicHallElement& operator*=(const S& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [c, x] : terms_) x *= s;
    return *this;
  }
  friend BasicHallElement operator+(BasicHallElement a, const BasicHallElement& b) { return a += b; }
  friend BasicHallElement operator-(BasicHallElement a, const BasicHallElement& b) { return a -= b; }
  friend BasicHallElement operator*(BasicHallElement a, const S& s) { return a *= s; }
  friend bool operator==(const BasicHallElement& a, const BasicHallElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BasicHallElement& a, const BasicHallElement& b) { return !(a == b); }

  void check_engine(const BasicHallElement& o) const {
    if (engine_ && o.engine_ && o.engine_ != engine_) throw std::invalid_argument("engine mismatch");
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    auto g = grade();
    j["grade"] = g ? nlohmann::json(*g) : nlohmann::json(nullptr);
    j["terms"] = nlohmann::json::array();
    for (const auto& [c, x] : terms_) j["terms"].push_back({{"class", engine().render(c)}, {"coeff", coeff_to_json(x)}});
    return j;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [c, x] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + coeff_to_string(x) + ")[" + engine().render(c) + "]";
    }
    return s;
  }

 private:
  std::shared_ptr<const Engine> engine_;
  std::map<IsoClass, S> terms_;
};

using HallElement = BasicHallElement<SqrtExt>;
using CycloHallElement = BasicHallElement<CycloSqrt>;
using SymbolicHallElement = BasicHallElement<RationalFunctionV>;

template <class S>
class BasicTensorElement {
 public:
  using Key = std::pair<IsoClass, IsoClass>;
  BasicTensorElement() = default;
  explicit BasicTensorElement(std::shared_ptr<const Engine> e) : engine_(std::move(e)) {}

  const Engine& engine() const { return *engine_; }
  const std::shared_ptr<const Engine>& engine_ptr() const { return engine_; }
  const std::map<Key, S>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Key& k, const S& x) {
    if (x.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, x);
      return;
    }
    it->second += x;
    if (it->second.is_zero()) terms_.erase(it);
  }
  BasicTensorElement& operator+=(const BasicTensorElement& o) {
    for (const auto& [k, x] : o.terms_) add_term(k, x);
    return *this;
  }
  BasicTensorElement& operator-=(const BasicTensorElement& o) {
    for (const auto& [k, x] : o.terms_) add_term(k, -x);
    return *this;
  }
  friend BasicTensorElement operator-(BasicTensorElement a, const BasicTensorElement& b) { return a -= b; }
  friend bool operator==(const BasicTensorElement& a, const BasicTensorElement& b) { return a.terms_ == b.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, x] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + coeff_to_string(x) + ")[" + engine().render(k.first) + "](x)[" + engine().render(k.second) + "]";
    }
    return s;
  }

 private:
  std::shared_ptr<const Engine> engine_;
  std::map<Key, S> terms_;
};

using TensorElement = BasicTensorElement<SqrtExt>;

// ---------------------------------------------------------------------------
// Structure constants as exact numbers in Q(sqrt q0).

inline SqrtExt v_power(const Engine& e, int k) { return SqrtExt::v_power(e.q(), k); }
inline Rational to_rational(const Integer& z) { return Rational(z); }

template <class S>
BasicHallElement<S> multiply(const BasicHallElement<S>& a, const BasicHallElement<S>& b) {
  a.check_engine(b);
  BasicHallElement<S> out(a.engine_ptr() ? a.engine_ptr() : b.engine_ptr());
  if (a.is_zero() || b.is_zero()) return out;
  const Engine& e = out.engine();
  for (const auto& [M, x] : a.terms())
    for (const auto& [N, y] : b.terms()) {
      S xy = x * y;
      SqrtExt twist = v_power(e, e.euler(M.grade, N.grade));
      for (const auto& [L, f] : e.product_support(M, N)) out.add_term(L, xy * lift<S>(e, twist * SqrtExt(f)));
    }
  return out;
}

template <class S>
BasicTensorElement<S> comultiply(const BasicHallElement<S>& x, const ClassPredicate& keep = nullptr) {
  BasicTensorElement<S> out(x.engine_ptr());
  if (x.is_zero()) return out;
  const Engine& e = x.engine();
  auto admitted = [&](const IsoClass& c) { return !keep || dim_total(c.grade) == 0 || keep(c); };
  for (const auto& [M, c] : x.terms()) {
    Rational aM = to_rational(e.aut_order(M));
    for (const auto& [key, f] : *e.hall_table(M)) {
      const auto& [X, Y] = key;
      if (!admitted(X) || !admitted(Y)) continue;
      Rational r = to_rational(e.aut_order(X)) * to_rational(e.aut_order(Y)) * f / aM;
      out.add_term(key, c * lift<S>(e, v_power(e, e.euler(X.grade, Y.grade)) * SqrtExt(r)));
    }
  }
  return out;
}

template <class S>
BasicTensorElement<S> comultiply_restricted(const BasicHallElement<S>& x, const ClassPredicate& keep) {
  return comultiply(x, keep);
}

template <class S>
BasicTensorElement<S> tensor(const BasicHallElement<S>& a, const BasicHallElement<S>& b) {
  BasicTensorElement<S> out(a.engine_ptr());
  for (const auto& [M, x] : a.terms())
    for (const auto& [N, y] : b.terms()) out.add_term({M, N}, x * y);
  return out;
}

template <class S>
S green_form(const BasicHallElement<S>& x, const BasicHallElement<S>& y) {
  x.check_engine(y);
  const Engine& e = x.engine_ptr() ? x.engine() : y.engine();
  S sum = lift<S>(e, SqrtExt(0));
  for (const auto& [M, a] : x.terms()) {
    auto it = y.terms().find(M);
    if (it == y.terms().end()) continue;
    sum += a * it->second * lift<S>(e, SqrtExt(Rational(1) / to_rational(e.aut_order(M))));
  }
  return sum;
}

template <class S>
S green_form(const BasicTensorElement<S>& x, const BasicTensorElement<S>& y) {
  const Engine& e = x.engine();
  S sum = lift<S>(e, SqrtExt(0));
  for (const auto& [k, a] : x.terms()) {
    auto it = y.terms().find(k);
    if (it == y.terms().end()) continue;
    Rational w = Rational(1) / (to_rational(e.aut_order(k.first)) * to_rational(e.aut_order(k.second)));
    sum += a * it->second * lift<S>(e, SqrtExt(w));
  }
  return sum;
}

/// D(x) - x(x)1 - 1(x)x, optionally under the restricted comultiplication.
template <class S>
BasicTensorElement<S> primitivity_defect(const BasicHallElement<S>& x, const ClassPredicate& keep = nullptr) {
  auto g = x.grade();
  if (!g) throw std::invalid_argument("primitivity is defined for nonzero homogeneous elements");
  if (dim_total(*g) == 0) throw std::invalid_argument("primitivity needs a nonzero grade");
  const Engine& e = x.engine();
  BasicHallElement<S> unit = BasicHallElement<S>::basis(x.engine_ptr(), e.zero_class());
  BasicTensorElement<S> d = comultiply(x, keep);
  d -= tensor(x, unit);
  d -= tensor(unit, x);
  return d;
}

template <class S>
bool is_primitive(const BasicHallElement<S>& x, const ClassPredicate& keep = nullptr) {
  return primitivity_defect(x, keep).is_zero();
}

HallElement one_d(std::shared_ptr<const Engine> e, const DimVector& d);
HallElement one_subset(std::shared_ptr<const Engine> e, const DimVector& d, const ClassPredicate& keep);
/// 1^reg_{n delta} on the Kronecker quiver.
HallElement one_reg(std::shared_ptr<const Engine> e, int n);
ClassPredicate regular_predicate(std::shared_ptr<const Engine> kronecker_engine);

/// Evaluates a symbolic element at v = sqrt(q0) of the target engine; class
/// keys are transported through their text rendering.
HallElement specialize(const SymbolicHallElement& x, std::shared_ptr<const Engine> numeric);

// ---------------------------------------------------------------------------
// Exact linear algebra over Q(sqrt q0).

using Vec = std::vector<SqrtExt>;

/// Reduced row echelon form (first-nonzero pivoting); returns the nonzero rows.
std::vector<Vec> rref(std::vector<Vec> rows, size_t ncols, std::vector<size_t>* pivots = nullptr);
/// Basis of {x : A x = 0}, reduced-echelon normalized.
std::vector<Vec> kernel_basis(const std::vector<Vec>& rows, size_t ncols);
size_t rank_of(const std::vector<Vec>& rows, size_t ncols);

/// Basis of the primitive elements at grade d. With a predicate the domain
/// is restricted to admitted classes and D is restricted accordingly.
std::vector<HallElement> primitive_subspace(std::shared_ptr<const Engine> e, const DimVector& d,
                                            const ClassPredicate& keep = nullptr);

/// Coordinates of elements on a common class list; used for rank and span tests.
std::vector<Vec> coordinates(const std::vector<HallElement>& xs, const std::vector<IsoClass>& basis);
/// true iff span(a) == span(b) (both given as coordinate rows).
bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b, size_t ncols);
bool contained_in_span(const std::vector<Vec>& a, const std::vector<Vec>& b, size_t ncols);

// ---------------------------------------------------------------------------
// Axiom checks on basis elements.

/// All dimension vectors with the given number of vertices and total <= bound.
std::vector<DimVector> grades_up_to(int vertices, int bound);

VerificationReport associativity_check(std::shared_ptr<const Engine> e, int bound);
VerificationReport coassociativity_check(std::shared_ptr<const Engine> e, int bound);
VerificationReport adjointness_check(std::shared_ptr<const Engine> e, int bound);

}  // namespace hall
