#include "hall/fourier.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hall/partitions.hpp"
#include "hall/primitives.hpp"

namespace hall {

ReversalSpec ReversalSpec::make(std::shared_ptr<const Quiver> source, std::vector<int> arrows, std::string target_name) {
  std::set<int> seen;
  for (int a : arrows) {
    if (a < 0 || a >= source->arrow_count()) throw std::invalid_argument("reversed arrow out of range");
    if (!seen.insert(a).second) throw std::invalid_argument("reversed arrow listed twice");
  }
  auto target = std::make_shared<const Quiver>(Quiver::reversed(*source, arrows, std::move(target_name)));
  return ReversalSpec{std::move(source), std::move(arrows), std::move(target)};
}

FourierTransform::FourierTransform(std::shared_ptr<const BruteForceEngine> source,
                                   std::shared_ptr<const BruteForceEngine> target, std::vector<int> arrows, Character chi)
    : source_(std::move(source)), target_(std::move(target)), chi_(chi) {
  if (!source_ || !target_) throw std::invalid_argument("Fourier transform needs two engines");
  if (source_->nilpotent_only() || target_->nilpotent_only())
    throw std::invalid_argument("Fourier transform needs engines over all of E_V");
  if (source_->q() != target_->q()) throw std::invalid_argument("engines over different fields");
  spec_ = ReversalSpec::make(source_->quiver_ptr(), std::move(arrows), target_->quiver().name());
  if (!(*spec_.target == target_->quiver())) throw std::invalid_argument("target quiver is not the reversed source quiver");
}

FourierTransform::Kernel FourierTransform::build_kernel(const DimVector& d) const {
  const Quiver& Q = source_->quiver();
  const Field& F = source_->field();
  const int p = F.p();
  std::vector<bool> reversed(static_cast<size_t>(Q.arrow_count()), false);
  for (int a : spec_.arrows) reversed[static_cast<size_t>(a)] = true;

  Kernel K;
  for (int a : spec_.arrows) K.dim_y += d[static_cast<size_t>(Q.tail(a))] * d[static_cast<size_t>(Q.head(a))];
  uint64_t ysize = 1;
  for (int i = 0; i < K.dim_y; ++i) ysize *= static_cast<uint64_t>(F.q());

  const auto& src_orbit = source_->orbit_index(d);
  const auto& tgt_orbit = target_->orbit_index(d);
  const uint64_t npts = target_->point_count(d);
  int32_t norbits = 0;
  for (int32_t o : tgt_orbit) norbits = std::max(norbits, o + 1);
  K.rows.assign(static_cast<size_t>(norbits), {});
  std::vector<int> evaluated(static_cast<size_t>(norbits), 0);
  const bool exhaustive = npts * ysize <= kExhaustiveWork;

  for (uint64_t code = 0; code < npts; ++code) {
    int32_t t = tgt_orbit[code];
    int& done = evaluated[static_cast<size_t>(t)];
    if (!exhaustive && done >= 2) continue;

    RepPoint yp = target_->decode(d, code);
    RepPoint x = RepPoint::zero(source_->quiver_ptr(), source_->field_ptr(), d);
    for (int a = 0; a < Q.arrow_count(); ++a)
      if (!reversed[static_cast<size_t>(a)]) x.maps[static_cast<size_t>(a)] = yp.maps[static_cast<size_t>(a)];

    std::map<int32_t, std::vector<long>> row;
    // odometer over the entries of the reversed arrows
    std::vector<std::pair<int, int>> cells;  // (arrow, flat entry)
    for (int a : spec_.arrows)
      for (size_t e = 0; e < x.maps[static_cast<size_t>(a)].a.size(); ++e) cells.emplace_back(a, static_cast<int>(e));
    for (uint64_t y = 0; y < ysize; ++y) {
      if (y > 0) {
        for (const auto& [a, e] : cells) {
          uint8_t& v = x.maps[static_cast<size_t>(a)].a[static_cast<size_t>(e)];
          v = static_cast<uint8_t>((v + 1) % F.q());
          if (v != 0) break;
        }
      }
      int pairing = 0;
      for (int a : spec_.arrows) {
        const Mat& C = x.maps[static_cast<size_t>(a)];   // head x tail
        const Mat& D = yp.maps[static_cast<size_t>(a)];  // tail x head
        for (int i = 0; i < C.rows; ++i)
          for (int j = 0; j < C.cols; ++j) pairing = F.add(pairing, F.mul(C.at(i, j), D.at(j, i)));
      }
      auto& counts = row[src_orbit[source_->encode(x)]];
      if (counts.empty()) counts.assign(static_cast<size_t>(p), 0);
      ++counts[static_cast<size_t>(F.trace(pairing))];
    }

    if (done == 0) {
      K.rows[static_cast<size_t>(t)] = std::move(row);
    } else if (K.rows[static_cast<size_t>(t)] != row) {
      throw std::logic_error("Fourier kernel is not constant on a target orbit at grade " + dim_to_string(d));
    }
    ++done;
  }
  return K;
}

const FourierTransform::Kernel& FourierTransform::kernel(const DimVector& d) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = kernels_.find(d);
    if (it != kernels_.end()) return *it->second;
  }
  auto k = std::make_unique<Kernel>(build_kernel(d));
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = kernels_.emplace(d, std::move(k));
  return *it->second;
}

namespace {

CycloSqrt as_cyclo(const Engine& e, const SqrtExt& x) { return lift<CycloSqrt>(e, x); }
CycloSqrt as_cyclo(const Engine&, const CycloSqrt& x) { return x; }

}  // namespace

template <class S>
InvariantFunction FourierTransform::apply(const BasicHallElement<S>& f) const {
  if (f.engine_ptr() && f.engine_ptr().get() != source_.get())
    throw std::invalid_argument("engine mismatch");
  InvariantFunction out(target_);
  const long q = source_->q();
  const int p = source_->field().p();

  std::map<DimVector, std::map<int32_t, CycloSqrt>> by_grade;
  for (const auto& [c, a] : f.terms()) {
    const auto& idx = source_->orbit_index(c.grade);
    int32_t o = idx[source_->encode(source_->realize(c))];
    by_grade[c.grade].emplace(o, as_cyclo(*source_, a));
  }
  for (const auto& [d, values] : by_grade) {
    const Kernel& K = kernel(d);
    const SqrtExt scale = SqrtExt::v_power(q, -K.dim_y);
    for (size_t t = 0; t < K.rows.size(); ++t) {
      std::vector<CycloSqrt> sums(static_cast<size_t>(p), CycloSqrt(p, q));
      bool any = false;
      for (const auto& [o, counts] : K.rows[t]) {
        auto it = values.find(o);
        if (it == values.end()) continue;
        any = true;
        for (int k = 0; k < p; ++k)
          if (counts[static_cast<size_t>(k)] != 0) sums[static_cast<size_t>(k)] += it->second * SqrtExt(counts[static_cast<size_t>(k)]);
      }
      if (!any) continue;
      CycloSqrt val(p, q);
      for (int k = 0; k < p; ++k)
        val += CycloSqrt::zeta_power(p, q, chi_ == Character::standard ? k : -k) * sums[static_cast<size_t>(k)];
      val *= scale;
      auto cls = target_->class_of_orbit(d, static_cast<int32_t>(t));
      if (!cls) throw std::logic_error("target orbit without a class");
      out.add_term(*cls, val);
    }
  }
  return out;
}

InvariantFunction FourierTransform::operator()(const HallElement& f) const { return apply(f); }
InvariantFunction FourierTransform::operator()(const InvariantFunction& f) const { return apply(f); }

InvariantFunction to_invariant_function(const HallElement& x) {
  InvariantFunction out(x.engine_ptr());
  for (const auto& [c, a] : x.terms()) out.add_term(c, lift<CycloSqrt>(x.engine(), a));
  return out;
}

std::shared_ptr<const BruteForceEngine> full_engine(const Quiver& q, long q0) {
  return std::make_shared<BruteForceEngine>(std::make_shared<const Quiver>(q), q0);
}

FourierTransform kronecker_to_cyclic(long q) {
  auto k2 = full_engine(Quiver::kronecker(), q);
  auto c2 = full_engine(Quiver::reversed(Quiver::kronecker(), {1}, "C2"), q);
  return FourierTransform(k2, c2, {1});
}

FourierTransform a2_reversal(long q) {
  auto a2 = full_engine(Quiver::a2(), q);
  auto a2op = full_engine(Quiver::reversed(Quiver::a2(), {0}, "A2op"), q);
  return FourierTransform(a2, a2op, {0});
}

std::vector<std::pair<DimVector, DimVector>> grade_pairs_up_to(const DimVector& bound) {
  std::vector<std::pair<DimVector, DimVector>> out;
  for (const DimVector& a : subgrades(bound))
    for (const DimVector& b : subgrades(bound)) out.emplace_back(a, b);
  return out;
}

VerificationReport check_homomorphism(const FourierTransform& phi,
                                      const std::vector<std::pair<DimVector, DimVector>>& pairs) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check = "fourier_homomorphism";
  rep.params = {{"source", phi.source()->id()}, {"target", phi.target()->id()}, {"q", phi.source()->q()}};
  auto src = std::static_pointer_cast<const Engine>(phi.source());
  std::map<IsoClass, InvariantFunction> image;
  auto phi_of = [&](const IsoClass& c) -> const InvariantFunction& {
    auto it = image.find(c);
    if (it == image.end()) it = image.emplace(c, phi(HallElement::basis(src, c))).first;
    return it->second;
  };
  long checked = 0;
  for (const auto& [d1, d2] : pairs)
    for (const IsoClass& a : src->classes(d1))
      for (const IsoClass& b : src->classes(d2)) {
        HallElement ab = multiply(HallElement::basis(src, a), HallElement::basis(src, b));
        InvariantFunction lhs(phi.target());
        for (const auto& [c, x] : ab.terms()) {
          InvariantFunction t = phi_of(c);
          t *= lift<CycloSqrt>(*src, x);
          lhs += t;
        }
        InvariantFunction rhs = multiply(phi_of(a), phi_of(b));
        ++checked;
        if (lhs != rhs)
          rep.fail("Phi([" + src->render(a) + "][" + src->render(b) + "]) differs from the product of images");
      }
  rep.lhs = std::to_string(checked) + " basis pairs";
  rep.rhs = "Phi(f*g) = Phi(f)*Phi(g)";
  rep.elapsed_ms = sw.ms();
  return rep;
}

VerificationReport double_transform_check(const FourierTransform& phi, const DimVector& bound) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check = "double_transform";
  rep.params = {{"source", phi.source()->id()}, {"bound", bound}, {"q", phi.source()->q()}};
  FourierTransform back(phi.target(), phi.source(), phi.spec().arrows, Character::conjugate);
  auto src = std::static_pointer_cast<const Engine>(phi.source());
  long checked = 0;
  for (const DimVector& d : subgrades(bound))
    for (const IsoClass& c : src->classes(d)) {
      InvariantFunction f = to_invariant_function(HallElement::basis(src, c));
      InvariantFunction g = back(phi(f));
      InvariantFunction neg = f;
      neg *= lift<CycloSqrt>(*src, SqrtExt(-1));
      ++checked;
      if (g != f && g != neg) rep.fail("double transform of [" + src->render(c) + "] is not +-itself");
    }
  rep.lhs = std::to_string(checked) + " basis functions";
  rep.rhs = "+-1 rescaling";
  rep.elapsed_ms = sw.ms();
  return rep;
}

CycloSqrt gl_character_sum(int n, long q) {
  auto F = Field::get(q);
  const int p = F->p();
  uint64_t total = 1;
  for (int i = 0; i < n * n; ++i) {
    total *= static_cast<uint64_t>(q);
    if (total > (uint64_t{1} << 24)) throw CapExceeded("GL_n enumeration cap exceeded, use smaller parameters");
  }
  std::vector<long> counts(static_cast<size_t>(p), 0);
  Mat X(n, n);
  for (uint64_t code = 0; code < total; ++code) {
    uint64_t c = code;
    for (auto& v : X.a) {
      v = static_cast<uint8_t>(c % static_cast<uint64_t>(q));
      c /= static_cast<uint64_t>(q);
    }
    if (rank(*F, X) != n) continue;
    int tr = 0;
    for (int i = 0; i < n; ++i) tr = F->add(tr, X.at(i, i));
    ++counts[static_cast<size_t>(F->trace(tr))];
  }
  CycloSqrt sum(p, q);
  for (int k = 0; k < p; ++k) sum += CycloSqrt::zeta_power(p, q, k) * SqrtExt(counts[static_cast<size_t>(k)]);
  return sum;
}

VerificationReport gl_character_check(int n, long q) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check = "gl_character_sum";
  rep.params = {{"n", n}, {"q", q}};
  CycloSqrt got = gl_character_sum(n, q);
  Integer want = ipow(q, static_cast<unsigned>(n * (n - 1) / 2));
  if (n % 2 == 1) want = -want;
  rep.lhs = got.to_string();
  rep.rhs = want.get_str();
  if (!(got == CycloSqrt(Field::get(q)->p(), q, SqrtExt(Rational(want))))) rep.fail("character sum differs");
  rep.elapsed_ms = sw.ms();
  return rep;
}

namespace {

RepPoint point(const std::shared_ptr<const BruteForceEngine>& e, const DimVector& d, const std::vector<Mat>& maps) {
  RepPoint x = RepPoint::zero(e->quiver_ptr(), e->field_ptr(), d);
  x.maps = maps;
  x.validate();
  return x;
}

Mat scalar_identity(int n) { return Mat::identity(n); }

}  // namespace

VerificationReport a2_image_check(long q, int max_n) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check = "fourier_a2";
  rep.params = {{"q", q}, {"max_n", max_n}};
  FourierTransform phi = a2_reversal(q);
  auto src = phi.source();
  auto tgt = phi.target();
  auto cls = [](const std::shared_ptr<const BruteForceEngine>& e, const RepPoint& x) { return e->classify(x); };
  auto bas = [](const std::shared_ptr<const BruteForceEngine>& e, const IsoClass& c) {
    return to_invariant_function(HallElement::basis(e, c));
  };
  SqrtExt v = SqrtExt::v_power(q, 1), vinv = SqrtExt::v_power(q, -1);

  IsoClass s1 = cls(src, point(src, {1, 0}, {Mat(0, 1)})), s2 = cls(src, point(src, {0, 1}, {Mat(1, 0)}));
  IsoClass s1p = cls(tgt, point(tgt, {1, 0}, {Mat(1, 0)})), s2p = cls(tgt, point(tgt, {0, 1}, {Mat(0, 1)}));
  if (phi(HallElement::basis(src, s1)) != bas(tgt, s1p)) rep.fail("Phi([S1]) != [S1']");
  if (phi(HallElement::basis(src, s2)) != bas(tgt, s2p)) rep.fail("Phi([S2]) != [S2']");

  IsoClass p1 = cls(src, point(src, {1, 1}, {scalar_identity(1)}));
  IsoClass p2p = cls(tgt, point(tgt, {1, 1}, {scalar_identity(1)}));
  IsoClass sump = cls(tgt, point(tgt, {1, 1}, {Mat(1, 1)}));
  InvariantFunction want = to_invariant_function(HallElement::basis(tgt, p2p, -vinv) + HallElement::basis(tgt, sump, v - vinv));
  InvariantFunction got = phi(HallElement::basis(src, p1));
  rep.lhs = got.to_string();
  rep.rhs = want.to_string();
  if (got != want) rep.fail("Phi([P1]) differs from -v^-1[P2'] + (v - v^-1)[S1'+S2']");

  for (int n = 1; n <= max_n; ++n) {
    IsoClass np1 = cls(src, point(src, {n, n}, {scalar_identity(n)}));
    IsoClass np2 = cls(tgt, point(tgt, {n, n}, {scalar_identity(n)}));
    CycloSqrt val = phi(HallElement::basis(src, np1)).coeff(np2);
    SqrtExt w = SqrtExt::v_power(q, -n) * SqrtExt(n % 2 == 0 ? 1 : -1);
    if (!(val == lift<CycloSqrt>(*src, w)))
      rep.fail("Phi([" + std::to_string(n) + "P1])([" + std::to_string(n) + "P2']) = " + val.to_string());
  }
  rep.elapsed_ms = sw.ms();
  return rep;
}

VerificationReport divided_power_check(int n, long q) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check = "divided_power";
  rep.params = {{"n", n}, {"q", q}};
  if (n < 1) throw std::invalid_argument("divided powers need n >= 1");
  FourierTransform phi = a2_reversal(q);
  for (const auto& e : {phi.source(), phi.target()}) {
    auto eng = std::static_pointer_cast<const Engine>(e);
    HallElement p1 = HallElement::basis(eng, e->classify(point(e, {1, 1}, {Mat::identity(1)})));
    HallElement np1 = HallElement::basis(eng, e->classify(point(e, {n, n}, {Mat::identity(n)})));
    HallElement power = p1;
    for (int i = 1; i < n; ++i) power = multiply(power, p1);
    SqrtExt factor = SqrtExt::v_power(q, -n * (n - 1)) / eval_v(quantum_factorial(n), q);
    HallElement lhs = power * factor;
    if (lhs != np1) rep.fail("divided power relation fails on " + e->id() + ": " + lhs.to_string());
    if (e == phi.source()) {
      rep.lhs = lhs.to_string();
      rep.rhs = np1.to_string();
    }
  }
  rep.elapsed_ms = sw.ms();
  return rep;
}

VerificationReport fourier_xi_route_check(int n, long q) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check = "fourier_xi_route";
  rep.params = {{"n", n}, {"q", q}};
  FourierTransform phi = kronecker_to_cyclic(q);
  auto k2 = std::static_pointer_cast<const Engine>(phi.source());
  auto c2 = phi.target();

  Mat I = Mat::identity(n), Z(n, n);
  IsoClass m1 = c2->classify(point(c2, {n, n}, {I, Z}));
  IsoClass m2 = c2->classify(point(c2, {n, n}, {Z, I}));
  const int p = c2->field().p();
  auto cy = [&](const SqrtExt& x) { return CycloSqrt(p, q, x); };

  SqrtExt scale = SqrtExt::v_power(q, -n * n);
  Rational gl(gl_order(n, q));
  for (const Partition& lambda : partitions_of(n)) {
    InvariantFunction f0 = phi(HallElement::basis(k2, kronecker_i0(*k2, lambda)));
    InvariantFunction finf = phi(HallElement::basis(k2, kronecker_iinf(*k2, lambda)));
    std::string tag = lambda.to_string();
    if (!finf.coeff(m1).is_zero()) rep.fail("Phi([I_" + tag + "(inf)]) is nonzero at M1");
    if (!(f0.coeff(m1) == cy(scale * SqrtExt(gl / Rational(a_lambda(lambda, q))))))
      rep.fail("Phi([I_" + tag + "(0)])(M1) differs from q^(-n^2/2)|GL_n|/a_lambda");
    if (!f0.coeff(m2).is_zero()) rep.fail("Phi([I_" + tag + "(0)]) is nonzero at M2");
    bool all_ones = lambda.length() == n;
    CycloSqrt at_m2 = finf.coeff(m2);
    if (all_ones) {
      if (!(at_m2 == gl_character_sum(n, q) * scale))
        rep.fail("Phi([I_(1^n)(inf)])(M2) differs from q^(-n^2/2) sum psi(tr X)");
    } else if (!at_m2.is_zero()) {
      rep.fail("Phi([I_" + tag + "(inf)]) is nonzero at M2");
    }
  }

  InvariantFunction F = phi(kron_pK2(k2, n));
  CycloSqrt at1 = F.coeff(m1), at2 = F.coeff(m2);
  Rational xi = 0;
  for (const Partition& lambda : partitions_of(n))
    xi += partition_weight_at(lambda, q) / Rational(a_lambda(lambda, q));
  Rational tail = 1;
  for (int i = 1; i < n; ++i) tail *= Rational(ipow(q, static_cast<unsigned>(n)) - ipow(q, static_cast<unsigned>(i)));
  CycloSqrt want1 = cy(scale * SqrtExt(Rational(gl * xi)));
  CycloSqrt want2 = cy(scale * SqrtExt(tail));
  rep.lhs = "Phi(p)(M1) = " + at1.to_string() + ", Phi(p)(M2) = " + at2.to_string();
  rep.rhs = want1.to_string() + ", " + want2.to_string();
  if (!(at1 == want1)) rep.fail("Phi(p_n^K2)(M1) differs from the product formula");
  if (!(at2 == want2)) rep.fail("Phi(p_n^K2)(M2) differs from the product formula");
  if (!(at1 == at2)) rep.fail("the two evaluations differ");
  rep.elapsed_ms = sw.ms();
  return rep;
}

VerificationReport kronecker_image_primitive(int n, long q) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check = "fourier_primitive";
  rep.params = {{"n", n}, {"q", q}};
  FourierTransform phi = kronecker_to_cyclic(q);
  auto k2 = std::static_pointer_cast<const Engine>(phi.source());
  auto c2 = std::static_pointer_cast<const Engine>(phi.target());
  InvariantFunction F = phi(kron_pK2(k2, n));
  if (F.is_zero()) rep.fail("image vanished");
  else if (!is_primitive(F)) rep.fail("Phi(p_n^K2) is not primitive in the full C2 algebra");
  // cross-check with the primitive solver when the image has real coefficients
  HallElement real(c2);
  bool is_real = true;
  for (const auto& [c, a] : F.terms()) {
    auto s = a.to_sqrt_ext();
    if (!s) {
      is_real = false;
      break;
    }
    real.add_term(c, *s);
  }
  if (is_real && !F.is_zero()) {
    auto P = primitive_subspace(c2, {n, n});
    auto basis = c2->classes({n, n});
    if (!contained_in_span(coordinates({real}, basis), coordinates(P, basis), basis.size()))
      rep.fail("image is outside the solver's primitive space");
    rep.rhs = "in span of " + std::to_string(P.size()) + " solver primitives";
  } else {
    rep.rhs = "primitive";
  }
  rep.lhs = F.to_string();
  rep.elapsed_ms = sw.ms();
  return rep;
}

}  // namespace hall
