#include "hall/suite.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "hall/fourier.hpp"
#include "hall/hallcore.hpp"
#include "hall/partitions.hpp"
#include "hall/primitives.hpp"
#include "hall/repengine.hpp"

namespace hall {

VerificationReport aut_order_check(int n, long q) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check = "aut_order";
  rep.params = {{"n", n}, {"q", q}};
  auto jordan = std::make_shared<const Quiver>(Quiver::cyclic(1));
  auto field = Field::get(q);
  NilpotentCyclicEngine c1(1, q);
  Integer gl = gl_order(n, q);
  int count = 0;
  for (const Partition& lambda : partitions_of(n)) {
    RepPoint x = RepPoint::zero(jordan, field, {n});
    x.maps[0] = jordan_matrix(lambda);
    Integer orbit(static_cast<unsigned long>(orbit_size_of(x)));
    Integer formula = a_lambda(lambda, q);
    if (gl % orbit != 0 || gl / orbit != formula)
      rep.fail("a" + lambda.to_string() + ": formula " + formula.get_str() + ", orbit-stabilizer " +
               Rational(Rational(gl) / Rational(orbit)).get_str());
    IsoClass c = c1.class_of(partition_multisegment(lambda, 1));
    if (c1.aut_order(c) != formula) rep.fail("a" + lambda.to_string() + ": structured engine gives " + c1.aut_order(c).get_str());
    ++count;
  }
  rep.lhs = std::to_string(count) + " partitions";
  rep.rhs = "a_lambda = |GL_n| / |orbit|";
  rep.elapsed_ms = sw.ms();
  return rep;
}

VerificationReport axioms_check(const std::string& engine, long q, int bound) {
  Stopwatch sw;
  std::shared_ptr<const Engine> e;
  if (engine == "c1") e = std::make_shared<NilpotentCyclicEngine>(1, q);
  else if (engine == "c2nil") e = std::make_shared<NilpotentCyclicEngine>(2, q);
  else if (engine == "k2") e = std::make_shared<BruteForceEngine>(std::make_shared<const Quiver>(Quiver::kronecker()), q);
  else throw std::invalid_argument("axioms: engine must be c1, c2nil or k2");
  VerificationReport rep;
  rep.check = "bialgebra_axioms";
  rep.params = {{"engine", engine}, {"q", q}, {"bound", bound}};
  auto a = associativity_check(e, bound);
  auto c = coassociativity_check(e, bound);
  auto g = adjointness_check(e, bound);
  rep.absorb(a);
  rep.absorb(c);
  rep.absorb(g);
  rep.lhs = a.lhs + "; " + c.lhs + "; " + g.lhs;
  rep.rhs = "associative, coassociative, adjoint";
  rep.elapsed_ms = sw.ms();
  return rep;
}

namespace {

std::string key(const char* name, std::initializer_list<long> xs) {
  std::string s = name;
  for (long x : xs) s += ":" + std::to_string(x);
  return s;
}

}  // namespace

std::vector<Criterion> acceptance_suite() {
  std::vector<Criterion> s;
  const std::vector<long> qs{2, 3};

  Criterion c1{1, "a_lambda against orbit-stabilizer counts", {}};
  for (long q : qs)
    for (int n = 1; n <= 4; ++n) c1.cells.push_back({key("aut", {n, q}), [=] { return aut_order_check(n, q); }});
  s.push_back(c1);

  Criterion c2{2, "partition sum equals 1/(q^n-1), n <= 12", {}};
  for (int n = 1; n <= 12; ++n) c2.cells.push_back({key("xi", {n}), [=] { return verify_xi_identity(n); }});
  s.push_back(c2);

  Criterion c3{3, "sums of 1/a_lambda and w_lambda^2/a_lambda, n <= 10", {}};
  for (int n = 1; n <= 10; ++n) c3.cells.push_back({key("partition_sums", {n}), [=] { return verify_partition_sum_identities(n); }});
  s.push_back(c3);

  Criterion c4{4, "primitivity of p_n, x_n, p_n^(r), p_n^K2", {}};
  for (long q : qs) c4.cells.push_back({key("primitivity", {q}), [=] { return primitivity_suite({q}); }});
  s.push_back(c4);

  Criterion c5{5, "c_n central and D(c_n) = sum c_s (x) c_{n-s}", {}};
  for (long q : qs)
    for (int r : {2, 3})
      for (int n : {1, 2}) c5.cells.push_back({key("central", {r, n, q}), [=] { return central_elements_check(r, n, q); }});
  s.push_back(c5);

  Criterion c6{6, "{p_n^(r), 1_{n delta}} = 1/(q^n-1)", {}};
  for (long q : qs)
    for (int r : {1, 2, 3})
      for (int n : {1, 2}) c6.cells.push_back({key("pairing", {r, n, q}), [=] { return verify_key_pairing(r, n, q); }});
  s.push_back(c6);

  Criterion c7{7, "p_1^(2) = [S1[2]] + [S2[2]] - (q-1)[S1+S2]", {}};
  for (long q : qs) c7.cells.push_back({key("explicit_p1", {q}), [=] { return explicit_p1_check(q); }});
  s.push_back(c7);

  Criterion c8{8, "sum over GL_n of psi(tr X) = (-1)^n q^(n(n-1)/2)", {}};
  for (auto [n, q] : std::vector<std::pair<int, long>>{{1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {3, 2}})
    c8.cells.push_back({key("glsum", {n, q}), [=] { return gl_character_check(n, q); }});
  s.push_back(c8);

  Criterion c9{9, "Fourier transform: A2 image, homomorphism, primitive image", {}};
  for (long q : qs) {
    c9.cells.push_back({key("fourier_a2", {q}), [=] { return a2_image_check(q); }});
    c9.cells.push_back({key("hom_a2", {q}), [=] { return check_homomorphism(a2_reversal(q), grade_pairs_up_to({1, 1})); }});
    c9.cells.push_back(
        {key("hom_k2", {q}), [=] { return check_homomorphism(kronecker_to_cyclic(q), grade_pairs_up_to({1, 1})); }});
    c9.cells.push_back({key("fourier_primitive", {1, q}), [=] { return kronecker_image_primitive(1, q); }});
  }
  s.push_back(c9);

  const std::vector<std::pair<int, long>> kron{{1, 2}, {1, 3}, {2, 2}};
  Criterion c10{10, "K2: primitive space = kernel of the regular pairing", {}};
  for (auto [n, q] : kron) c10.cells.push_back({key("primitive_kernel", {n, q}), [=] { return primitive_kernel_check(n, q); }});
  s.push_back(c10);

  Criterion c11{11, "K2: tube differences form a basis of primitives", {}};
  for (auto [n, q] : kron) c11.cells.push_back({key("tube_basis", {n, q}), [=] { return tube_basis_check(n, q); }});
  s.push_back(c11);

  Criterion c12{12, "bialgebra axioms up to total dimension 5 at q=2", {}};
  for (const char* e : {"c1", "c2nil", "k2"})
    c12.cells.push_back({std::string("axioms:") + e, [e] { return axioms_check(e, 2, 5); }});
  s.push_back(c12);
  return s;
}

std::vector<CriterionResult> run_suite(const std::vector<Criterion>& suite, int jobs) {
  struct Slot {
    size_t criterion;
    const SuiteCell* cell;
    VerificationReport report;
    bool internal = false;
  };
  std::vector<Slot> slots;
  for (size_t i = 0; i < suite.size(); ++i)
    for (const SuiteCell& c : suite[i].cells) slots.push_back({i, &c, {}, false});

  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t k = next++; k < slots.size(); k = next++) {
      Slot& s = slots[k];
      Stopwatch sw;
      try {
        s.report = s.cell->run();
      } catch (const std::exception& ex) {
        s.report = VerificationReport{};
        s.report.check = s.cell->key;
        s.report.fail(std::string("internal error: ") + ex.what());
        s.report.elapsed_ms = sw.ms();
        s.internal = true;
      }
    }
  };
  int n = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<CriterionResult> out;
  for (const Criterion& c : suite) out.push_back({c.id, c.title, true, false, 0, {}});
  for (Slot& s : slots) {
    CriterionResult& r = out[s.criterion];
    r.pass = r.pass && s.report.pass;
    r.internal_error = r.internal_error || s.internal;
    r.elapsed_ms += s.report.elapsed_ms;
    r.reports.push_back(std::move(s.report));
  }
  return out;
}

}  // namespace hall
