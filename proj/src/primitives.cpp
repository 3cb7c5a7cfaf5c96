#include "hall/primitives.hpp"

#include <stdexcept>

namespace hall {

namespace {

std::shared_ptr<const Engine> kronecker_engine(long q) {
  return std::make_shared<BruteForceEngine>(std::make_shared<const Quiver>(Quiver::kronecker()), q);
}

DimVector n_delta(int r, int n) { return DimVector(static_cast<size_t>(r), n); }

RationalFunctionV q_pow(int k) { return RationalFunctionV::q().pow(k); }

Rational partition_sum_at(int n, long q) {
  Rational s = 0;
  for (const Partition& lambda : partitions_of(n)) s += partition_weight_at(lambda, q) / Rational(a_lambda(lambda, q));
  return s;
}

void require_cyclic(const NilEngine& e) {
  if (!e) throw std::invalid_argument("no engine");
  if (e->r() < 2) throw std::invalid_argument("c_n, x_n and p_n^(r) need r >= 2");
}

std::string span_summary(size_t p, size_t r) { return "dim P = " + std::to_string(p) + ", dim R = " + std::to_string(r); }

}  // namespace

Rational partition_weight_at(const Partition& lambda, long q, int e) { return partition_weight(lambda, e)(Rational(q)); }

RationalFunctionV partition_weight_symbolic(const Partition& lambda, int e) {
  return RationalFunctionV::from_q_poly(partition_weight(lambda, e));
}

HallElement p_jordan(const NilEngine& c1, int n) {
  if (c1->r() != 1) throw std::invalid_argument("p_n lives on the Jordan quiver");
  HallElement out(c1);
  for (const Partition& lambda : partitions_of(n))
    out.add_term(c1->class_of(partition_multisegment(lambda, 1)), SqrtExt(partition_weight_at(lambda, c1->q())));
  return out;
}

SymbolicHallElement p_jordan_symbolic(const NilEngine& c1, int n) {
  if (c1->r() != 1) throw std::invalid_argument("p_n lives on the Jordan quiver");
  SymbolicHallElement out(c1);
  for (const Partition& lambda : partitions_of(n))
    out.add_term(c1->class_of(partition_multisegment(lambda, 1)), partition_weight_symbolic(lambda));
  return out;
}

HallElement c_central(const NilEngine& e, int n) {
  require_cyclic(e);
  if (n == 0) return HallElement::basis(e, e->zero_class());
  const int r = e->r();
  const Rational scale = Rational(1) / Rational(ipow(e->q(), static_cast<unsigned>(r * n)));
  HallElement out(e);
  for (const IsoClass& M : e->classes(n_delta(r, n))) {
    DimVector soc = e->socle(M);
    bool square_free = true;
    for (int m : soc) square_free = square_free && m <= 1;
    if (!square_free) continue;
    int sign = (n + e->end_dim(M)) % 2 == 0 ? 1 : -1;
    out.add_term(M, SqrtExt(Rational(scale * Rational(e->aut_order(M)) * sign)));
  }
  return out;
}

HallElement x_element(const NilEngine& e, int n) {
  require_cyclic(e);
  if (n < 1) throw std::invalid_argument("x_n needs n >= 1");
  std::vector<HallElement> c{c_central(e, 0)}, x{HallElement(e)};
  for (int k = 1; k <= n; ++k) c.push_back(c_central(e, k));
  for (int k = 1; k <= n; ++k) {
    HallElement xk = c[static_cast<size_t>(k)] * SqrtExt(k);
    for (int s = 1; s < k; ++s) xk -= multiply(x[static_cast<size_t>(s)], c[static_cast<size_t>(k - s)]);
    x.push_back(xk);
  }
  return x[static_cast<size_t>(n)];
}

HallElement p_cyclic(const NilEngine& e, int n) {
  Rational qrn(ipow(e->q(), static_cast<unsigned>(e->r() * n)));
  Rational qn(ipow(e->q(), static_cast<unsigned>(n)));
  return x_element(e, n) * SqrtExt(Rational(qrn / (qn - 1)));
}

HallElement p_tube_homog(const EnginePtr& engine, int e, int m, const std::map<Partition, IsoClass>& classes) {
  HallElement out(engine);
  for (const Partition& lambda : partitions_of(m)) {
    auto it = classes.find(lambda);
    if (it == classes.end()) throw std::invalid_argument("no class given for partition " + lambda.to_string());
    out.add_term(it->second, SqrtExt(partition_weight_at(lambda, engine->q(), e)));
  }
  return out;
}

HallElement kron_p0(const EnginePtr& k2, int n) {
  HallElement out(k2);
  for (const Partition& lambda : partitions_of(n))
    out.add_term(kronecker_i0(*k2, lambda), SqrtExt(partition_weight_at(lambda, k2->q())));
  return out;
}

HallElement kron_pinf(const EnginePtr& k2, int n) {
  HallElement out(k2);
  for (const Partition& lambda : partitions_of(n))
    out.add_term(kronecker_iinf(*k2, lambda), SqrtExt(partition_weight_at(lambda, k2->q())));
  return out;
}

HallElement kron_pK2(const EnginePtr& k2, int n) { return kron_p0(k2, n) - kron_pinf(k2, n); }

std::vector<TubePrimitive> kronecker_tube_primitives(const EnginePtr& k2, int n) {
  std::vector<TubePrimitive> out;
  for (const Tube& t : kronecker_tubes(*k2, n)) {
    if (n % t.degree != 0) continue;
    int m = n / t.degree;
    out.push_back({t, m, p_tube_homog(k2, t.degree, m, kronecker_tube_classes(*k2, t, m))});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Symbolic identities.

RationalFunctionV xi_sum(int n) {
  RationalFunctionV s;
  for (const Partition& lambda : partitions_of(n))
    s += partition_weight_symbolic(lambda) / RationalFunctionV::from_q_poly(a_lambda(lambda));
  return s;
}

VerificationReport verify_xi_identity(int n) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check = "xi";
  rep.params = {{"n", n}};
  if (n < 1 || n > 12) throw std::invalid_argument("xi identity is checked for 1 <= n <= 12");
  RationalFunctionV lhs = xi_sum(n);
  RationalFunctionV rhs = RationalFunctionV(1) / (q_pow(n) - RationalFunctionV(1));
  rep.lhs = lhs.to_string();
  rep.rhs = rhs.to_string();
  if (!(lhs == rhs)) rep.fail("sum over partitions differs from 1/(q^n-1)");
  rep.elapsed_ms = sw.ms();
  return rep;
}

VerificationReport verify_partition_sum_identities(int n) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check = "partition_sums";
  rep.params = {{"n", n}};
  if (n < 1 || n > 10) throw std::invalid_argument("partition-sum identities are checked for 1 <= n <= 10");
  RationalFunctionV squares, inverses;
  for (const Partition& lambda : partitions_of(n)) {
    RationalFunctionV a = RationalFunctionV::from_q_poly(a_lambda(lambda));
    RationalFunctionV w = partition_weight_symbolic(lambda);
    squares += w * w / a;
    inverses += RationalFunctionV(1) / a;
  }
  RationalFunctionV want_sq = RationalFunctionV(n) / (q_pow(n) - RationalFunctionV(1));
  RationalFunctionV want_inv = q_pow(n * (n - 1) / 2);
  for (int i = 1; i <= n; ++i) want_inv /= q_pow(i) - RationalFunctionV(1);
  rep.lhs = squares.to_string() + " ; " + inverses.to_string();
  rep.rhs = want_sq.to_string() + " ; " + want_inv.to_string();
  if (!(squares == want_sq)) rep.fail("sum of squared weights over a_lambda differs from n/(q^n-1)");
  if (!(inverses == want_inv)) rep.fail("sum of 1/a_lambda differs from q^(n(n-1)/2)/prod(q^i-1)");
  rep.elapsed_ms = sw.ms();
  return rep;
}

// ---------------------------------------------------------------------------
// Numeric checks on the cyclic quivers.

VerificationReport verify_key_pairing(int r, int n, long q) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check = "key_pairing";
  rep.params = {{"r", r}, {"n", n}, {"q", q}};
  if (r < 1 || n < 1) throw std::invalid_argument("key pairing needs r >= 1 and n >= 1");
  auto e = std::make_shared<NilpotentCyclicEngine>(r, q);
  HallElement p = r == 1 ? p_jordan(e, n) : p_cyclic(e, n);
  SqrtExt pairing = green_form(p, one_d(e, n_delta(r, n)));
  Rational sum = partition_sum_at(n, q);
  Rational closed = Rational(1) / (Rational(ipow(q, static_cast<unsigned>(n))) - 1);
  rep.lhs = pairing.to_string();
  rep.rhs = to_string(sum) + " ; " + to_string(closed);
  if (pairing != SqrtExt(sum)) rep.fail("pairing differs from the partition sum");
  if (pairing != SqrtExt(closed)) rep.fail("pairing differs from 1/(q^n-1)");
  // numeric value against the symbolic identity
  if (eval_v(xi_sum(n), q) != SqrtExt(sum)) rep.fail("symbolic partition sum disagrees at q");
  rep.elapsed_ms = sw.ms();
  return rep;
}

VerificationReport verify_cyclic_coefficients(int r, int n, long q) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check = "cyclic_coefficients";
  rep.params = {{"r", r}, {"n", n}, {"q", q}};
  auto e = std::make_shared<NilpotentCyclicEngine>(r, q);
  HallElement x = x_element(e, n);
  HallElement p = p_cyclic(e, n);
  SqrtExt lead = SqrtExt::v_power(q, n - 2 * r * n) * (SqrtExt::v_power(q, n) - SqrtExt::v_power(q, -n));
  for (int i = 0; i < r; ++i) {
    IsoClass top = e->class_of(Multisegment{{Segment{i, r * n}, 1}});
    if (x.coeff(top) != lead)
      rep.fail("coefficient of " + e->render(top) + " in x_n is " + x.coeff(top).to_string());
    if (p.coeff(top) != SqrtExt(1))
      rep.fail("coefficient of " + e->render(top) + " in p_n is " + p.coeff(top).to_string());
  }
  for (const Partition& lambda : partitions_of(n)) {
    IsoClass c = e->class_of(partition_multisegment(lambda, r));
    SqrtExt want(partition_weight_at(lambda, q));
    if (p.coeff(c) != want)
      rep.fail("coefficient of " + e->render(c) + " is " + p.coeff(c).to_string() + ", want " + want.to_string());
  }
  rep.lhs = p.to_string();
  rep.rhs = "leading coefficients 1, partition coefficients prod(1-q^s)";
  rep.elapsed_ms = sw.ms();
  return rep;
}

VerificationReport central_elements_check(int r, int n, long q) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check = "central_elements";
  rep.params = {{"r", r}, {"n", n}, {"q", q}};
  auto e = std::make_shared<NilpotentCyclicEngine>(r, q);
  HallElement c = c_central(e, n);
  if (c.is_zero()) rep.fail("c_n vanished");
  for (int i = 0; i < r; ++i) {
    HallElement s = HallElement::basis(e, e->class_of(Multisegment{{Segment{i, 1}, 1}}));
    if (multiply(c, s) != multiply(s, c)) rep.fail("c_n does not commute with " + e->render(s.terms().begin()->first));
  }
  TensorElement want(e);
  for (int s = 0; s <= n; ++s) want += tensor(c_central(e, s), c_central(e, n - s));
  TensorElement got = comultiply(c);
  if (!(got == want)) rep.fail("D(c_n) differs from sum c_s (x) c_{n-s}");
  rep.lhs = std::to_string(got.terms().size()) + " tensor terms";
  rep.rhs = std::to_string(want.terms().size()) + " tensor terms";
  rep.elapsed_ms = sw.ms();
  return rep;
}

VerificationReport explicit_p1_check(long q) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check = "explicit_p1";
  rep.params = {{"r", 2}, {"q", q}};
  auto e = std::make_shared<NilpotentCyclicEngine>(2, q);
  HallElement want = HallElement::basis(e, e->parse_class("S1[2]")) + HallElement::basis(e, e->parse_class("S2[2]")) -
                     HallElement::basis(e, e->parse_class("S1+S2"), SqrtExt(q - 1));
  HallElement got = p_cyclic(e, 1);
  rep.lhs = got.to_string();
  rep.rhs = want.to_string();
  if (got != want) rep.fail("p_1 differs from the explicit element");
  if (!is_primitive(got)) rep.fail("p_1 is not primitive");
  rep.elapsed_ms = sw.ms();
  return rep;
}

VerificationReport primitivity_suite(const std::vector<long>& qs) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check = "primitivity";
  rep.params = {{"q", qs}};
  int checked = 0;
  auto expect = [&](const HallElement& x, const std::string& what, const ClassPredicate& keep = nullptr) {
    ++checked;
    if (!is_primitive(x, keep)) rep.fail(what + " is not primitive");
  };
  for (long q : qs) {
    std::string at = " at q=" + std::to_string(q);
    auto c1 = std::make_shared<NilpotentCyclicEngine>(1, q);
    for (int n = 1; n <= 4; ++n) expect(p_jordan(c1, n), "p_" + std::to_string(n) + at);
    for (int r : {2, 3}) {
      auto e = std::make_shared<NilpotentCyclicEngine>(r, q);
      for (int n = 1; n <= 2; ++n) {
        std::string tag = std::to_string(n) + " (r=" + std::to_string(r) + ")" + at;
        expect(x_element(e, n), "x_" + tag);
        expect(p_cyclic(e, n), "p_" + tag);
      }
    }
    auto k = kronecker_engine(q);
    for (int n = 1; n <= 2; ++n) expect(kron_pK2(k, n), "p_" + std::to_string(n) + "^K2" + at);
  }
  rep.lhs = std::to_string(checked) + " elements";
  rep.rhs = "all primitive";
  rep.elapsed_ms = sw.ms();
  return rep;
}

// ---------------------------------------------------------------------------
// Kronecker primitive spaces.

VerificationReport primitive_kernel_check(int n, long q) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check = "primitive_kernel";
  rep.params = {{"n", n}, {"q", q}};
  auto k = kronecker_engine(q);
  DimVector d{n, n};
  auto reg = regular_predicate(k);
  auto P = primitive_subspace(k, d);
  auto R = primitive_subspace(k, d, reg);
  HallElement one = one_reg(k, n);

  std::vector<Vec> pairing_row(1, Vec(R.size()));
  for (size_t i = 0; i < R.size(); ++i) pairing_row[0][i] = green_form(R[i], one);
  std::vector<HallElement> ker;
  for (const Vec& z : kernel_basis(pairing_row, R.size())) {
    HallElement y(k);
    for (size_t i = 0; i < R.size(); ++i) y += R[i] * z[i];
    ker.push_back(y);
  }

  auto basis = kronecker_regular_classes(*k, n);
  std::vector<Vec> cp, ck, cr;
  try {
    cp = coordinates(P, basis);
  } catch (const std::exception&) {
    rep.fail("a primitive element has a non-regular term");
  }
  ck = coordinates(ker, basis);
  cr = coordinates(R, basis);
  if (rep.pass) {
    if (!same_span(cp, ck, basis.size())) rep.fail("primitive space differs from the kernel of the regular pairing");
    if (!contained_in_span(cp, cr, basis.size())) rep.fail("primitive space is not inside the regular primitives");
  }
  if (R.size() != P.size() + 1) rep.fail("dim R != dim P + 1");
  Integer phi = 0;
  for (int s = 1; s <= n; ++s)
    if (n % s == 0) phi += phi_irreducible_count(s, q);
  if (Integer(static_cast<long>(P.size())) != phi) rep.fail("dim P != sum of phi_s over s | n");
  for (const HallElement& p : P)
    if (!green_form(p, one_d(k, d)).is_zero()) rep.fail("a primitive element pairs nontrivially with 1_d");
  rep.lhs = span_summary(P.size(), R.size()) + ", dim ker = " + std::to_string(ker.size());
  rep.rhs = "dim P = " + phi.get_str() + ", dim R = dim P + 1, P = ker";
  rep.elapsed_ms = sw.ms();
  return rep;
}

VerificationReport tube_basis_check(int n, long q, const std::string& anchor) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check = "tube_basis";
  rep.params = {{"n", n}, {"q", q}, {"anchor", anchor}};
  auto k = kronecker_engine(q);
  auto tps = kronecker_tube_primitives(k, n);
  const TubePrimitive* x = nullptr;
  for (const auto& t : tps)
    if (t.tube.label == anchor) x = &t;
  if (!x) throw std::invalid_argument("no tube labelled " + anchor + " with degree dividing " + std::to_string(n));

  std::vector<HallElement> diffs;
  for (const auto& y : tps) {
    if (&y == x) continue;
    HallElement z = x->element - y.element;
    if (!is_primitive(z)) rep.fail("p(" + x->tube.label + ") - p(" + y.tube.label + ") is not primitive");
    diffs.push_back(z);
  }
  for (const auto& t : tps) {
    auto in_tube = [&](const IsoClass& c) { return kronecker_in_tube(*k, t.tube, c); };
    if (!is_primitive(t.element, in_tube)) rep.fail("p(" + t.tube.label + ") is not primitive in its tube");
  }
  auto P = primitive_subspace(k, {n, n});
  auto basis = k->classes({n, n});
  auto cd = coordinates(diffs, basis);
  size_t rank = rank_of(cd, basis.size());
  if (rank != diffs.size()) rep.fail("differences are linearly dependent");
  if (diffs.size() != P.size()) rep.fail("number of differences differs from dim P");
  if (!same_span(cd, coordinates(P, basis), basis.size())) rep.fail("differences do not span the primitive space");
  rep.lhs = std::to_string(diffs.size()) + " differences, rank " + std::to_string(rank);
  rep.rhs = "dim P = " + std::to_string(P.size());
  rep.elapsed_ms = sw.ms();
  return rep;
}

}  // namespace hall
