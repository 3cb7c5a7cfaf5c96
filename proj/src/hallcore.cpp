#include "hall/hallcore.hpp"

#include <algorithm>
#include <set>

namespace hall {

std::string coeff_to_string(const SqrtExt& x) { return x.to_string(); }
std::string coeff_to_string(const CycloSqrt& x) { return x.to_string(); }
std::string coeff_to_string(const RationalFunctionV& x) { return x.to_string(); }

nlohmann::json coeff_to_json(const SqrtExt& x) { return x.to_string(); }
nlohmann::json coeff_to_json(const RationalFunctionV& x) { return x.to_string(); }
nlohmann::json coeff_to_json(const CycloSqrt& x) {
  nlohmann::json a = nlohmann::json::array(), b = nlohmann::json::array();
  for (const SqrtExt& c : x.coords()) {
    a.push_back(to_string(c.a()));
    b.push_back(to_string(c.b()));
  }
  return {{"a", a}, {"b", b}};
}

HallElement one_d(std::shared_ptr<const Engine> e, const DimVector& d) { return one_subset(std::move(e), d, nullptr); }

HallElement one_subset(std::shared_ptr<const Engine> e, const DimVector& d, const ClassPredicate& keep) {
  HallElement x(e);
  for (const IsoClass& c : e->classes(d))
    if (!keep || dim_total(d) == 0 || keep(c)) x.add_term(c, SqrtExt(1));
  return x;
}

ClassPredicate regular_predicate(std::shared_ptr<const Engine> e) {
  return [e](const IsoClass& c) { return kronecker_is_regular(*e, c); };
}

HallElement one_reg(std::shared_ptr<const Engine> e, int n) {
  auto keep = regular_predicate(e);
  return one_subset(e, {n, n}, keep);
}

HallElement specialize(const SymbolicHallElement& x, std::shared_ptr<const Engine> numeric) {
  HallElement out(numeric);
  for (const auto& [c, f] : x.terms()) {
    IsoClass target = numeric->parse_class(x.engine().render(c));
    out.add_term(target, eval_v(f, numeric->q()));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Vec> rref(std::vector<Vec> rows, size_t ncols, std::vector<size_t>* pivots) {
  std::vector<size_t> piv;
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < rows.size(); ++c) {
    size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    SqrtExt inv = rows[r][c].inverse();
    for (size_t j = c; j < ncols; ++j) rows[r][j] *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      SqrtExt f = rows[i][c];
      for (size_t j = c; j < ncols; ++j)
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  rows.resize(r);
  if (pivots) *pivots = std::move(piv);
  return rows;
}

size_t rank_of(const std::vector<Vec>& rows, size_t ncols) { return rref(rows, ncols).size(); }

std::vector<Vec> kernel_basis(const std::vector<Vec>& rows, size_t ncols) {
  std::vector<size_t> piv;
  auto R = rref(rows, ncols, &piv);
  std::vector<bool> is_pivot(ncols, false);
  for (size_t p : piv) is_pivot[p] = true;
  std::vector<Vec> ker;
  for (size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(ncols, SqrtExt(0));
    v[f] = SqrtExt(1);
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -R[i][f];
    ker.push_back(std::move(v));
  }
  return rref(std::move(ker), ncols);
}

std::vector<Vec> coordinates(const std::vector<HallElement>& xs, const std::vector<IsoClass>& basis) {
  std::map<IsoClass, size_t> index;
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  std::vector<Vec> out;
  for (const HallElement& x : xs) {
    Vec v(basis.size(), SqrtExt(0));
    for (const auto& [c, a] : x.terms()) {
      auto it = index.find(c);
      if (it == index.end()) throw std::invalid_argument("element has support outside the coordinate basis");
      v[it->second] = a;
    }
    out.push_back(std::move(v));
  }
  return out;
}

bool contained_in_span(const std::vector<Vec>& a, const std::vector<Vec>& b, size_t ncols) {
  std::vector<Vec> both = b;
  both.insert(both.end(), a.begin(), a.end());
  return rank_of(both, ncols) == rank_of(b, ncols);
}

bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b, size_t ncols) {
  return contained_in_span(a, b, ncols) && contained_in_span(b, a, ncols);
}

std::vector<HallElement> primitive_subspace(std::shared_ptr<const Engine> e, const DimVector& d, const ClassPredicate& keep) {
  if (dim_total(d) == 0) throw std::invalid_argument("primitive_subspace needs a nonzero grade");
  std::vector<IsoClass> domain;
  for (const IsoClass& c : e->classes(d))
    if (!keep || keep(c)) domain.push_back(c);
  // column j: D([M_j]) with the two trivial terms removed
  std::map<TensorElement::Key, size_t> row_of;
  std::vector<std::vector<std::pair<size_t, SqrtExt>>> cols;
  for (const IsoClass& M : domain) {
    std::vector<std::pair<size_t, SqrtExt>> col;
    TensorElement dm = comultiply(HallElement::basis(e, M), keep);
    for (const auto& [k, x] : dm.terms()) {
      if (dim_total(k.first.grade) == 0 || dim_total(k.second.grade) == 0) continue;
      auto it = row_of.emplace(k, row_of.size()).first;
      col.emplace_back(it->second, x);
    }
    cols.push_back(std::move(col));
  }
  std::vector<Vec> rows(row_of.size(), Vec(domain.size(), SqrtExt(0)));
  for (size_t j = 0; j < cols.size(); ++j)
    for (const auto& [i, x] : cols[j]) rows[i][j] = x;
  std::vector<HallElement> out;
  for (const Vec& v : kernel_basis(rows, domain.size())) {
    HallElement x(e);
    for (size_t j = 0; j < v.size(); ++j) x.add_term(domain[j], v[j]);
    out.push_back(std::move(x));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<DimVector> grades_up_to(int vertices, int bound) {
  std::vector<DimVector> out;
  DimVector cur(static_cast<size_t>(vertices), 0);
  std::function<void(int, int)> rec = [&](int v, int left) {
    if (v == vertices) {
      out.push_back(cur);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      cur[static_cast<size_t>(v)] = k;
      rec(v + 1, left - k);
    }
  };
  rec(0, bound);
  return out;
}

namespace {

std::vector<IsoClass> classes_up_to(const Engine& e, int bound) {
  std::vector<IsoClass> out;
  for (const DimVector& d : grades_up_to(e.quiver().vertex_count(), bound))
    for (const IsoClass& c : e.classes(d)) out.push_back(c);
  return out;
}

using Triple = std::tuple<IsoClass, IsoClass, IsoClass>;

std::map<Triple, SqrtExt> left_coproduct_twice(const std::shared_ptr<const Engine>& e, const IsoClass& z) {
  std::map<Triple, SqrtExt> out;
  TensorElement dz = comultiply(HallElement::basis(e, z));
  for (const auto& [k, c] : dz.terms()) {
    TensorElement dk = comultiply(HallElement::basis(e, k.first));
    for (const auto& [k2, c2] : dk.terms()) {
      auto& slot = out[{k2.first, k2.second, k.second}];
      slot += c * c2;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

std::map<Triple, SqrtExt> right_coproduct_twice(const std::shared_ptr<const Engine>& e, const IsoClass& z) {
  std::map<Triple, SqrtExt> out;
  TensorElement dz = comultiply(HallElement::basis(e, z));
  for (const auto& [k, c] : dz.terms()) {
    TensorElement dk = comultiply(HallElement::basis(e, k.second));
    for (const auto& [k2, c2] : dk.terms()) {
      auto& slot = out[{k.first, k2.first, k2.second}];
      slot += c * c2;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

nlohmann::json engine_params(const Engine& e, int bound) {
  return {{"engine", e.id()}, {"q", e.q()}, {"bound", bound}};
}

}  // namespace

VerificationReport associativity_check(std::shared_ptr<const Engine> e, int bound) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check = "associativity";
  rep.params = engine_params(*e, bound);
  auto cls = classes_up_to(*e, bound);
  long triples = 0;
  for (const IsoClass& a : cls)
    for (const IsoClass& b : cls) {
      int ab = dim_total(a.grade) + dim_total(b.grade);
      if (ab > bound) continue;
      HallElement xa = HallElement::basis(e, a), xb = HallElement::basis(e, b);
      HallElement prod_ab = multiply(xa, xb);
      for (const IsoClass& c : cls) {
        if (ab + dim_total(c.grade) > bound) continue;
        HallElement xc = HallElement::basis(e, c);
        ++triples;
        if (multiply(prod_ab, xc) != multiply(xa, multiply(xb, xc)))
          rep.fail("(ab)c != a(bc) for " + e->render(a) + ", " + e->render(b) + ", " + e->render(c));
      }
    }
  rep.lhs = std::to_string(triples) + " triples";
  rep.rhs = rep.pass ? "all equal" : std::to_string(rep.failures.size()) + " mismatches";
  rep.elapsed_ms = sw.ms();
  return rep;
}

VerificationReport coassociativity_check(std::shared_ptr<const Engine> e, int bound) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check = "coassociativity";
  rep.params = engine_params(*e, bound);
  long count = 0;
  for (const IsoClass& z : classes_up_to(*e, bound)) {
    ++count;
    if (left_coproduct_twice(e, z) != right_coproduct_twice(e, z)) rep.fail("(D x 1)D != (1 x D)D on " + e->render(z));
  }
  rep.lhs = std::to_string(count) + " basis elements";
  rep.rhs = rep.pass ? "all equal" : std::to_string(rep.failures.size()) + " mismatches";
  rep.elapsed_ms = sw.ms();
  return rep;
}

VerificationReport adjointness_check(std::shared_ptr<const Engine> e, int bound) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check = "adjointness";
  rep.params = engine_params(*e, bound);
  auto cls = classes_up_to(*e, bound);
  std::map<IsoClass, TensorElement> delta;
  for (const IsoClass& z : cls) delta.emplace(z, comultiply(HallElement::basis(e, z)));
  long triples = 0;
  for (const IsoClass& a : cls)
    for (const IsoClass& b : cls) {
      DimVector g = dim_add(a.grade, b.grade);
      if (dim_total(g) > bound) continue;
      HallElement xa = HallElement::basis(e, a), xb = HallElement::basis(e, b);
      HallElement ab = multiply(xa, xb);
      TensorElement ta = tensor(xa, xb);
      for (const IsoClass& z : e->classes(g)) {
        ++triples;
        SqrtExt lhs = green_form(ab, HallElement::basis(e, z));
        SqrtExt rhs = green_form(ta, delta.at(z));
        if (lhs != rhs)
          rep.fail("{xy,z} = " + lhs.to_string() + " but {x(x)y, Dz} = " + rhs.to_string() + " for " + e->render(a) + ", " +
                   e->render(b) + ", " + e->render(z));
      }
    }
  rep.lhs = std::to_string(triples) + " triples";
  rep.rhs = rep.pass ? "all equal" : std::to_string(rep.failures.size()) + " mismatches";
  rep.elapsed_ms = sw.ms();
  return rep;
}

}  // namespace hall
