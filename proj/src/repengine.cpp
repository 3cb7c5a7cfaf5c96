#include "hall/repengine.hpp"

#include <algorithm>
#include <cmath>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace hall {

// ---------------------------------------------------------------------------
// Dimension vectors

std::string dim_to_string(const DimVector& d) {
  std::string s = "(";
  for (size_t i = 0; i < d.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d[i]);
  }
  return s + ")";
}

DimVector parse_dimvector(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')') s += c;
  DimVector d;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw std::invalid_argument("bad dimension vector '" + std::string(text) + "'");
    d.push_back(std::stoi(item));
  }
  if (d.empty()) throw std::invalid_argument("empty dimension vector");
  return d;
}

DimVector dim_add(const DimVector& a, const DimVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension vector length mismatch");
  DimVector r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

DimVector dim_sub(const DimVector& a, const DimVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension vector length mismatch");
  DimVector r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

bool dim_leq(const DimVector& a, const DimVector& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

int dim_total(const DimVector& d) { return std::accumulate(d.begin(), d.end(), 0); }

std::vector<DimVector> subgrades(const DimVector& d) {
  std::vector<DimVector> out;
  DimVector cur(d.size(), 0);
  for (;;) {
    out.push_back(cur);
    size_t i = cur.size();
    while (i > 0) {
      --i;
      if (cur[i] < d[i]) {
        ++cur[i];
        for (size_t j = i + 1; j < cur.size(); ++j) cur[j] = 0;
        break;
      }
      if (i == 0) return out;
    }
    if (cur.empty()) return out;
  }
}

// ---------------------------------------------------------------------------
// Quivers

Quiver::Quiver(std::string name, int vertices, std::vector<std::pair<int, int>> arrows)
    : name_(std::move(name)), n_(vertices), arrows_(std::move(arrows)) {
  if (n_ < 1) throw std::invalid_argument("quiver needs at least one vertex");
  for (const auto& [t, h] : arrows_)
    if (t < 0 || t >= n_ || h < 0 || h >= n_) throw std::invalid_argument("arrow endpoint out of range");
}

Quiver Quiver::cyclic(int r) {
  if (r < 1) throw std::invalid_argument("cyclic quiver needs r >= 1");
  std::vector<std::pair<int, int>> arrows;
  for (int i = 0; i < r; ++i) arrows.emplace_back(i, (i + 1) % r);
  return Quiver("C" + std::to_string(r), r, std::move(arrows));
}

Quiver Quiver::kronecker() { return Quiver("K2", 2, {{0, 1}, {0, 1}}); }

Quiver Quiver::a2() { return Quiver("A2", 2, {{0, 1}}); }

Quiver Quiver::reversed(const Quiver& q, const std::vector<int>& arrows, std::string name) {
  auto a = q.arrows();
  for (int i : arrows) {
    if (i < 0 || i >= q.arrow_count()) throw std::invalid_argument("reversal: arrow index out of range");
    std::swap(a[static_cast<size_t>(i)].first, a[static_cast<size_t>(i)].second);
  }
  return Quiver(std::move(name), q.vertex_count(), std::move(a));
}

int euler_form(const Quiver& q, const DimVector& x, const DimVector& y) {
  if (static_cast<int>(x.size()) != q.vertex_count() || static_cast<int>(y.size()) != q.vertex_count())
    throw std::invalid_argument("euler_form: dimension vector does not match quiver");
  int s = 0;
  for (int i = 0; i < q.vertex_count(); ++i) s += x[static_cast<size_t>(i)] * y[static_cast<size_t>(i)];
  for (const auto& [t, h] : q.arrows()) s -= x[static_cast<size_t>(t)] * y[static_cast<size_t>(h)];
  return s;
}

// ---------------------------------------------------------------------------
// Points

RepPoint RepPoint::zero(std::shared_ptr<const Quiver> q, std::shared_ptr<const Field> f, const DimVector& d) {
  RepPoint x{std::move(q), std::move(f), d, {}};
  for (const auto& [t, h] : x.quiver->arrows()) x.maps.emplace_back(d[static_cast<size_t>(h)], d[static_cast<size_t>(t)]);
  return x;
}

void RepPoint::validate() const {
  if (static_cast<int>(dims.size()) != quiver->vertex_count()) throw std::invalid_argument("point: dimension vector length");
  if (static_cast<int>(maps.size()) != quiver->arrow_count()) throw std::invalid_argument("point: arrow count");
  for (int a = 0; a < quiver->arrow_count(); ++a) {
    const Mat& m = maps[static_cast<size_t>(a)];
    if (m.rows != dims[static_cast<size_t>(quiver->head(a))] || m.cols != dims[static_cast<size_t>(quiver->tail(a))])
      throw std::invalid_argument("point: matrix shape does not match dimension vector");
    for (uint8_t v : m.a)
      if (v >= field->q()) throw std::invalid_argument("point: entry outside the field");
  }
}

RepPoint direct_sum(const RepPoint& x, const RepPoint& y) {
  RepPoint s = RepPoint::zero(x.quiver, x.field, dim_add(x.dims, y.dims));
  for (size_t a = 0; a < s.maps.size(); ++a) {
    const Mat& mx = x.maps[a];
    const Mat& my = y.maps[a];
    for (int i = 0; i < mx.rows; ++i)
      for (int j = 0; j < mx.cols; ++j) s.maps[a].at(i, j) = mx.at(i, j);
    for (int i = 0; i < my.rows; ++i)
      for (int j = 0; j < my.cols; ++j) s.maps[a].at(mx.rows + i, mx.cols + j) = my.at(i, j);
  }
  return s;
}

namespace {

// Block matrix of the whole representation on the direct sum of all V_i.
Mat total_matrix(const RepPoint& x) {
  std::vector<int> offset(x.dims.size() + 1, 0);
  for (size_t i = 0; i < x.dims.size(); ++i) offset[i + 1] = offset[i] + x.dims[i];
  const int n = offset.back();
  Mat big(n, n);
  const Field& F = *x.field;
  for (int a = 0; a < x.quiver->arrow_count(); ++a) {
    const Mat& m = x.maps[static_cast<size_t>(a)];
    int r0 = offset[static_cast<size_t>(x.quiver->head(a))], c0 = offset[static_cast<size_t>(x.quiver->tail(a))];
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j) big.at(r0 + i, c0 + j) = static_cast<uint8_t>(F.add(big.at(r0 + i, c0 + j), m.at(i, j)));
  }
  return big;
}

std::vector<uint8_t> apply(const Field& F, const Mat& m, const std::vector<uint8_t>& v) {
  std::vector<uint8_t> r(static_cast<size_t>(m.rows), 0);
  for (int i = 0; i < m.rows; ++i) {
    int acc = 0;
    for (int j = 0; j < m.cols; ++j) acc = F.add(acc, F.mul(m.at(i, j), v[static_cast<size_t>(j)]));
    r[static_cast<size_t>(i)] = static_cast<uint8_t>(acc);
  }
  return r;
}

std::vector<uint8_t> row_of(const Mat& m, int i) {
  return std::vector<uint8_t>(m.a.begin() + i * m.cols, m.a.begin() + (i + 1) * m.cols);
}

// Restriction of x to a stable family of subspaces, and the induced quotient.
std::pair<RepPoint, RepPoint> split_point(const RepPoint& x, const std::vector<const Subspace*>& U) {
  const Field& F = *x.field;
  const Quiver& Q = *x.quiver;
  DimVector sd, qd;
  for (size_t v = 0; v < U.size(); ++v) {
    sd.push_back(U[v]->dim());
    qd.push_back(x.dims[v] - U[v]->dim());
  }
  RepPoint sub = RepPoint::zero(x.quiver, x.field, sd);
  RepPoint quo = RepPoint::zero(x.quiver, x.field, qd);
  for (int a = 0; a < Q.arrow_count(); ++a) {
    const Subspace& Ut = *U[static_cast<size_t>(Q.tail(a))];
    const Subspace& Uh = *U[static_cast<size_t>(Q.head(a))];
    const Mat& m = x.maps[static_cast<size_t>(a)];
    for (int j = 0; j < Ut.dim(); ++j) {
      auto y = apply(F, m, row_of(Ut.basis.rref, j));
      for (int i = 0; i < Uh.dim(); ++i) sub.maps[static_cast<size_t>(a)].at(i, j) = y[static_cast<size_t>(Uh.basis.pivots[static_cast<size_t>(i)])];
    }
    auto ct = Ut.complement(), ch = Uh.complement();
    for (size_t j = 0; j < ct.size(); ++j) {
      std::vector<uint8_t> e(static_cast<size_t>(m.cols), 0);
      e[static_cast<size_t>(ct[j])] = 1;
      auto y = apply(F, m, e);
      Uh.reduce(F, y);
      for (size_t i = 0; i < ch.size(); ++i) quo.maps[static_cast<size_t>(a)].at(static_cast<int>(i), static_cast<int>(j)) = y[static_cast<size_t>(ch[i])];
    }
  }
  return {sub, quo};
}

Subspace column_space(const Field& F, const Mat& m) {
  Mat t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  Subspace s;
  s.n = m.rows;
  s.basis = row_reduce(F, t);
  return s;
}

Subspace null_space(const Field& F, const Mat& m) {
  Subspace s;
  s.n = m.cols;
  s.basis = row_reduce(F, kernel(F, m));
  return s;
}

}  // namespace

bool is_nilpotent(const RepPoint& x) {
  Mat big = total_matrix(x);
  const int n = big.rows;
  if (n == 0) return true;
  Mat p = big;
  for (int k = 1; k < n; ++k) p = mat_mul(*x.field, p, big);
  return p.is_zero();
}

void for_each_subrepresentation(const RepPoint& x, const std::function<void(const RepPoint&, const RepPoint&)>& fn,
                                const std::optional<DimVector>& only_dims) {
  const Field& F = *x.field;
  const Quiver& Q = *x.quiver;
  const int n = Q.vertex_count();
  std::vector<std::vector<const Subspace*>> options(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v)
    for (const auto& s : all_subspaces(F, x.dims[static_cast<size_t>(v)]))
      if (!only_dims || s.dim() == (*only_dims)[static_cast<size_t>(v)]) options[static_cast<size_t>(v)].push_back(&s);
  // arrows checked once both endpoints are chosen
  std::vector<std::vector<int>> closing(static_cast<size_t>(n));
  for (int a = 0; a < Q.arrow_count(); ++a) closing[static_cast<size_t>(std::max(Q.tail(a), Q.head(a)))].push_back(a);

  std::vector<const Subspace*> chosen(static_cast<size_t>(n), nullptr);
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      auto [sub, quo] = split_point(x, chosen);
      fn(sub, quo);
      return;
    }
    for (const Subspace* s : options[static_cast<size_t>(v)]) {
      chosen[static_cast<size_t>(v)] = s;
      bool ok = true;
      for (int a : closing[static_cast<size_t>(v)]) {
        const Subspace& Ut = *chosen[static_cast<size_t>(Q.tail(a))];
        const Subspace& Uh = *chosen[static_cast<size_t>(Q.head(a))];
        for (int j = 0; j < Ut.dim() && ok; ++j)
          ok = Uh.contains(F, apply(F, x.maps[static_cast<size_t>(a)], row_of(Ut.basis.rref, j)));
        if (!ok) break;
      }
      if (ok) rec(v + 1);
    }
  };
  rec(0);
}

std::vector<std::vector<Mat>> hom_basis(const RepPoint& m, const RepPoint& n) {
  const Field& F = *m.field;
  const Quiver& Q = *m.quiver;
  const int nv = Q.vertex_count();
  std::vector<int> offset(static_cast<size_t>(nv) + 1, 0);
  for (int v = 0; v < nv; ++v) offset[static_cast<size_t>(v) + 1] = offset[static_cast<size_t>(v)] + n.dims[static_cast<size_t>(v)] * m.dims[static_cast<size_t>(v)];
  const int unknowns = offset.back();
  auto var = [&](int v, int i, int j) { return offset[static_cast<size_t>(v)] + i * m.dims[static_cast<size_t>(v)] + j; };
  int eqs = 0;
  for (int a = 0; a < Q.arrow_count(); ++a) eqs += n.dims[static_cast<size_t>(Q.head(a))] * m.dims[static_cast<size_t>(Q.tail(a))];
  Mat sys(eqs, unknowns);
  int row = 0;
  for (int a = 0; a < Q.arrow_count(); ++a) {
    int t = Q.tail(a), h = Q.head(a);
    const Mat& xm = m.maps[static_cast<size_t>(a)];
    const Mat& xn = n.maps[static_cast<size_t>(a)];
    // (phi_h xm - xn phi_t)_{ij} = 0
    for (int i = 0; i < n.dims[static_cast<size_t>(h)]; ++i)
      for (int j = 0; j < m.dims[static_cast<size_t>(t)]; ++j, ++row) {
        for (int k = 0; k < m.dims[static_cast<size_t>(h)]; ++k) {
          int c = var(h, i, k);
          sys.at(row, c) = static_cast<uint8_t>(F.add(sys.at(row, c), xm.at(k, j)));
        }
        for (int k = 0; k < n.dims[static_cast<size_t>(t)]; ++k) {
          int c = var(t, k, j);
          sys.at(row, c) = static_cast<uint8_t>(F.sub(sys.at(row, c), xn.at(i, k)));
        }
      }
  }
  Mat ker = kernel(F, sys);
  std::vector<std::vector<Mat>> basis;
  for (int b = 0; b < ker.rows; ++b) {
    std::vector<Mat> phi;
    for (int v = 0; v < nv; ++v) {
      Mat p(n.dims[static_cast<size_t>(v)], m.dims[static_cast<size_t>(v)]);
      for (int i = 0; i < p.rows; ++i)
        for (int j = 0; j < p.cols; ++j) p.at(i, j) = ker.at(b, var(v, i, j));
      phi.push_back(std::move(p));
    }
    basis.push_back(std::move(phi));
  }
  return basis;
}

int hom_dim_linear(const RepPoint& m, const RepPoint& n) { return static_cast<int>(hom_basis(m, n).size()); }

DimVector socle_dims(const RepPoint& x) {
  const Quiver& Q = *x.quiver;
  DimVector s;
  for (int v = 0; v < Q.vertex_count(); ++v) {
    int rows = 0;
    for (int a = 0; a < Q.arrow_count(); ++a)
      if (Q.tail(a) == v) rows += x.dims[static_cast<size_t>(Q.head(a))];
    Mat stacked(rows, x.dims[static_cast<size_t>(v)]);
    int r = 0;
    for (int a = 0; a < Q.arrow_count(); ++a) {
      if (Q.tail(a) != v) continue;
      const Mat& m = x.maps[static_cast<size_t>(a)];
      for (int i = 0; i < m.rows; ++i, ++r)
        for (int j = 0; j < m.cols; ++j) stacked.at(r, j) = m.at(i, j);
    }
    s.push_back(x.dims[static_cast<size_t>(v)] - rank(*x.field, stacked));
  }
  return s;
}

// ---------------------------------------------------------------------------
// Engine

namespace {
std::mutex default_store_mu;
std::shared_ptr<HallTableStore> default_store;
}  // namespace

Engine::Engine(std::shared_ptr<const Quiver> quiver, long q) : quiver_(std::move(quiver)), field_(Field::get(q)) {
  std::lock_guard<std::mutex> lock(default_store_mu);
  store_ = default_store;
}

void Engine::check_grade(const DimVector& d) const {
  if (static_cast<int>(d.size()) != quiver_->vertex_count())
    throw std::invalid_argument("dimension vector " + dim_to_string(d) + " does not match quiver " + quiver_->name());
  for (int x : d)
    if (x < 0) throw std::invalid_argument("negative dimension");
}

IsoClass Engine::zero_class() const { return IsoClass{DimVector(static_cast<size_t>(quiver_->vertex_count()), 0), 0}; }

DimVector Engine::socle(const IsoClass& c) const { return socle_dims(realize(c)); }

int Engine::hom_dim(const IsoClass& m, const IsoClass& n) const { return hom_dim_linear(realize(m), realize(n)); }

namespace {

constexpr uint64_t kMaxEndSearch = uint64_t{1} << 16;

// A nontrivial idempotent of End(x), if one exists.
std::optional<std::vector<Mat>> find_idempotent(const RepPoint& x) {
  const Field& F = *x.field;
  auto basis = hom_basis(x, x);
  const size_t k = basis.size();
  uint64_t total = 1;
  for (size_t i = 0; i < k; ++i) {
    total *= static_cast<uint64_t>(F.q());
    if (total > kMaxEndSearch)
      throw CapExceeded("End(M) has more than 2^16 elements; search-space cap exceeded, use smaller parameters");
  }
  std::vector<int> digits(k, 0);
  for (uint64_t it = 0; it < total; ++it) {
    if (it) {
      size_t t = 0;
      while (++digits[t] == F.q()) digits[t++] = 0;
    }
    std::vector<Mat> e;
    bool zero = true, ident = true;
    for (size_t v = 0; v < x.dims.size(); ++v) {
      Mat m(x.dims[v], x.dims[v]);
      for (size_t b = 0; b < k; ++b) {
        if (!digits[b]) continue;
        const Mat& bv = basis[b][v];
        for (size_t i = 0; i < m.a.size(); ++i) m.a[i] = static_cast<uint8_t>(F.add(m.a[i], F.mul(digits[b], bv.a[i])));
      }
      zero = zero && m.is_zero();
      ident = ident && m == Mat::identity(x.dims[v]);
      e.push_back(std::move(m));
    }
    if (zero || ident) continue;
    bool idem = true;
    for (size_t v = 0; v < e.size() && idem; ++v) idem = mat_mul(F, e[v], e[v]) == e[v];
    if (idem) return e;
  }
  return std::nullopt;
}

}  // namespace

std::vector<IsoClass> Engine::decompose(const IsoClass& c) const {
  {
    std::lock_guard<std::mutex> lock(hall_mu_);
    auto it = decompose_cache_.find(c);
    if (it != decompose_cache_.end()) return it->second;
  }
  std::vector<IsoClass> out;
  if (dim_total(c.grade) > 0) {
    std::vector<RepPoint> work{realize(c)};
    while (!work.empty()) {
      RepPoint x = std::move(work.back());
      work.pop_back();
      auto e = find_idempotent(x);
      if (!e) {
        out.push_back(classify(x));
        continue;
      }
      // x = im(e) + ker(e), both subrepresentations
      std::vector<Subspace> im, ker;
      for (size_t v = 0; v < e->size(); ++v) {
        im.push_back(column_space(field(), (*e)[v]));
        ker.push_back(null_space(field(), (*e)[v]));
      }
      std::vector<const Subspace*> pi, pk;
      for (size_t v = 0; v < im.size(); ++v) {
        pi.push_back(&im[v]);
        pk.push_back(&ker[v]);
      }
      work.push_back(split_point(x, pi).first);
      work.push_back(split_point(x, pk).first);
    }
    std::sort(out.begin(), out.end());
  }
  std::lock_guard<std::mutex> lock(hall_mu_);
  decompose_cache_.emplace(c, out);
  return out;
}

bool Engine::is_indecomposable(const IsoClass& c) const { return decompose(c).size() == 1; }

void Engine::set_default_store(std::shared_ptr<HallTableStore> store) {
  std::lock_guard<std::mutex> lock(default_store_mu);
  default_store = std::move(store);
}

std::shared_ptr<const HallTable> Engine::compute_hall_table(const IsoClass& L) const {
  auto table = std::make_shared<HallTable>();
  for_each_subrepresentation(realize(L), [&](const RepPoint& sub, const RepPoint& quo) {
    ++(*table)[{classify(quo), classify(sub)}];
  });
  return table;
}

void Engine::fill_grade(const DimVector& d) const {
  std::optional<GradeTables> loaded = store_->load(*this, d);
  GradeTables tables;
  if (loaded) {
    tables = std::move(*loaded);
  } else {
    for (const IsoClass& L : classes(d)) tables.emplace(L, *compute_hall_table(L));
    store_->save(*this, d, tables);
  }
  std::lock_guard<std::mutex> lock(hall_mu_);
  for (auto& [L, t] : tables) hall_cache_.emplace(L, std::make_shared<const HallTable>(std::move(t)));
  grades_filled_[d] = true;
}

std::shared_ptr<const HallTable> Engine::hall_table(const IsoClass& L) const {
  bool filled = false;
  {
    std::lock_guard<std::mutex> lock(hall_mu_);
    auto it = hall_cache_.find(L);
    if (it != hall_cache_.end()) return it->second;
    filled = grades_filled_.count(L.grade) > 0;
  }
  if (store_ && !filled) {
    fill_grade(L.grade);
    std::lock_guard<std::mutex> lock(hall_mu_);
    auto it = hall_cache_.find(L);
    if (it != hall_cache_.end()) return it->second;
  }
  auto table = compute_hall_table(L);
  std::lock_guard<std::mutex> lock(hall_mu_);
  return hall_cache_.emplace(L, std::move(table)).first->second;
}

long Engine::hall_number(const IsoClass& L, const IsoClass& M, const IsoClass& N) const {
  if (L.grade.size() != M.grade.size() || L.grade != dim_add(M.grade, N.grade)) return 0;
  auto t = hall_table(L);
  auto it = t->find({M, N});
  return it == t->end() ? 0 : it->second;
}

std::vector<std::pair<IsoClass, long>> Engine::product_support(const IsoClass& M, const IsoClass& N) const {
  {
    std::lock_guard<std::mutex> lock(hall_mu_);
    auto it = product_cache_.find({M, N});
    if (it != product_cache_.end()) return it->second;
  }
  std::vector<std::pair<IsoClass, long>> out;
  for (const IsoClass& L : classes(dim_add(M.grade, N.grade))) {
    long f = hall_number(L, M, N);
    if (f) out.emplace_back(L, f);
  }
  std::lock_guard<std::mutex> lock(hall_mu_);
  return product_cache_.emplace(std::make_pair(M, N), std::move(out)).first->second;
}

// ---------------------------------------------------------------------------
// Multisegments

std::string multisegment_to_string(const Multisegment& m) {
  if (m.empty()) return "0";
  std::string s;
  for (const auto& [seg, mult] : m) {
    if (!s.empty()) s += "+";
    if (mult != 1) s += std::to_string(mult) + "*";
    s += "S" + std::to_string(seg.top + 1) + "[" + std::to_string(seg.length) + "]";
  }
  return s;
}

Multisegment parse_multisegment(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  Multisegment m;
  if (s == "0") return m;
  auto bad = [&]() { throw std::invalid_argument("bad multisegment '" + std::string(text) + "'"); };
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, '+')) {
    int mult = 1;
    size_t star = item.find('*');
    try {
      if (star != std::string::npos) {
        mult = std::stoi(item.substr(0, star));
        item = item.substr(star + 1);
      }
      if (item.size() < 2 || item[0] != 'S') bad();
      size_t lb = item.find('[');
      int top, len;
      if (lb == std::string::npos) {
        top = std::stoi(item.substr(1));
        len = 1;
      } else {
        if (item.back() != ']') bad();
        top = std::stoi(item.substr(1, lb - 1));
        len = std::stoi(item.substr(lb + 1, item.size() - lb - 2));
      }
      if (top < 1 || len < 1 || mult < 1) bad();
      m[Segment{top - 1, len}] += mult;
    } catch (const std::logic_error&) {
      bad();
    }
  }
  return m;
}

DimVector multisegment_dims(const Multisegment& m, int r) {
  DimVector d(static_cast<size_t>(r), 0);
  for (const auto& [seg, mult] : m)
    for (int k = 0; k < seg.length; ++k) d[static_cast<size_t>((seg.top + k) % r)] += mult;
  return d;
}

Multisegment partition_multisegment(const Partition& lambda, int r, int top) {
  Multisegment m;
  for (int p : lambda.parts()) ++m[Segment{top, p * r}];
  return m;
}

int segment_hom_dim(const Segment& a, const Segment& b, int r) {
  int target = ((b.top + b.length - a.top) % r + r) % r;
  int count = 0;
  for (int t = 1; t <= std::min(a.length, b.length); ++t)
    if (t % r == target) ++count;
  return count;
}

// ---------------------------------------------------------------------------
// NilpotentCyclicEngine

NilpotentCyclicEngine::NilpotentCyclicEngine(int r, long q)
    : Engine(std::make_shared<const Quiver>(Quiver::cyclic(r)), q), r_(r) {}

const std::vector<Multisegment>& NilpotentCyclicEngine::grade_list(const DimVector& d) const {
  check_grade(d);
  std::lock_guard<std::mutex> lock(mu_);
  auto& slot = lists_[d];
  if (slot) return *slot;
  slot = std::make_unique<std::vector<Multisegment>>();
  const int total = dim_total(d);
  std::vector<Segment> types;
  for (int i = 0; i < r_; ++i)
    for (int l = 1; l <= total; ++l) types.push_back(Segment{i, l});
  Multisegment cur;
  DimVector rem = d;
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == types.size()) {
      if (std::all_of(rem.begin(), rem.end(), [](int x) { return x == 0; })) slot->push_back(cur);
      return;
    }
    const Segment& s = types[k];
    rec(k + 1);
    int added = 0;
    for (;;) {
      bool fits = true;
      for (int j = 0; j < s.length; ++j)
        if (--rem[static_cast<size_t>((s.top + j) % r_)] < 0) fits = false;
      ++added;
      if (!fits) break;
      cur[s] = added;
      rec(k + 1);
    }
    for (int j = 0; j < s.length; ++j) rem[static_cast<size_t>((s.top + j) % r_)] += added;
    cur.erase(s);
  };
  rec(0);
  std::sort(slot->begin(), slot->end());
  return *slot;
}

std::vector<IsoClass> NilpotentCyclicEngine::classes(const DimVector& d) const {
  const auto& list = grade_list(d);
  std::vector<IsoClass> out;
  for (size_t i = 0; i < list.size(); ++i) out.push_back(IsoClass{d, static_cast<int>(i)});
  return out;
}

const Multisegment& NilpotentCyclicEngine::multisegment(const IsoClass& c) const {
  const auto& list = grade_list(c.grade);
  if (c.index < 0 || c.index >= static_cast<int>(list.size())) throw std::out_of_range("unknown isoclass");
  return list[static_cast<size_t>(c.index)];
}

IsoClass NilpotentCyclicEngine::class_of(const Multisegment& m) const {
  DimVector d = multisegment_dims(m, r_);
  const auto& list = grade_list(d);
  auto it = std::lower_bound(list.begin(), list.end(), m);
  if (it == list.end() || *it != m) throw std::logic_error("multisegment missing from enumeration");
  return IsoClass{d, static_cast<int>(it - list.begin())};
}

RepPoint NilpotentCyclicEngine::realize(const IsoClass& c) const {
  const Multisegment& m = multisegment(c);
  RepPoint x = RepPoint::zero(quiver_ptr(), field_ptr(), c.grade);
  DimVector next(static_cast<size_t>(r_), 0);
  for (const auto& [seg, mult] : m)
    for (int copy = 0; copy < mult; ++copy) {
      int prev = -1;
      for (int k = 0; k < seg.length; ++k) {
        int v = (seg.top + k) % r_;
        int idx = next[static_cast<size_t>(v)]++;
        if (prev >= 0) {
          int a = (v - 1 + r_) % r_;  // arrow a: a -> a+1
          x.maps[static_cast<size_t>(a)].at(idx, prev) = 1;
        }
        prev = idx;
      }
    }
  return x;
}

Multisegment NilpotentCyclicEngine::multisegment_of(const RepPoint& x) const {
  const Field& F = field();
  const int D = dim_total(x.dims);
  // rk[a][k] = rank of the path of length k starting at vertex a
  std::vector<std::vector<int>> rk(static_cast<size_t>(r_), std::vector<int>(static_cast<size_t>(D) + 2, 0));
  for (int a = 0; a < r_; ++a) {
    Mat p = Mat::identity(x.dims[static_cast<size_t>(a)]);
    rk[static_cast<size_t>(a)][0] = p.rows;
    for (int k = 1; k <= D + 1; ++k) {
      int arrow = (a + k - 1) % r_;
      p = mat_mul(F, x.maps[static_cast<size_t>(arrow)], p);
      rk[static_cast<size_t>(a)][static_cast<size_t>(k)] = rank(F, p);
    }
  }
  if (D > 0)
    for (int a = 0; a < r_; ++a)
      if (rk[static_cast<size_t>(a)][static_cast<size_t>(D) + 1] != 0) throw std::invalid_argument("point is not nilpotent");
  auto N = [&](int a, int k) {
    a = ((a % r_) + r_) % r_;
    return rk[static_cast<size_t>(a)][static_cast<size_t>(k)] - rk[static_cast<size_t>(a)][static_cast<size_t>(k) + 1];
  };
  Multisegment m;
  for (int s = 0; s < r_; ++s)
    for (int L = 1; L <= D; ++L) {
      int mult = N(s - L + 1, L - 1) - N(s - L, L);
      if (mult < 0) throw std::logic_error("negative segment multiplicity");
      if (mult > 0) m[Segment{((s - L + 1) % r_ + r_) % r_, L}] = mult;
    }
  return m;
}

IsoClass NilpotentCyclicEngine::classify(const RepPoint& x) const { return class_of(multisegment_of(x)); }

Integer NilpotentCyclicEngine::aut_order(const IsoClass& c) const {
  const Multisegment& m = multisegment(c);
  long end = 0, sq = 0;
  Integer gl = 1;
  for (const auto& [a, ma] : m) {
    sq += static_cast<long>(ma) * ma;
    gl *= gl_order(ma, q());
    for (const auto& [b, mb] : m) end += static_cast<long>(ma) * mb * segment_hom_dim(a, b, r_);
  }
  return ipow(q(), static_cast<unsigned>(end - sq)) * gl;
}

std::string NilpotentCyclicEngine::render(const IsoClass& c) const { return multisegment_to_string(multisegment(c)); }

IsoClass NilpotentCyclicEngine::parse_class(std::string_view text) const {
  Multisegment m = parse_multisegment(text);
  for (const auto& [seg, mult] : m)
    if (seg.top >= r_) throw std::invalid_argument("vertex out of range in '" + std::string(text) + "'");
  if (m.empty()) return zero_class();
  return class_of(m);
}

DimVector NilpotentCyclicEngine::socle(const IsoClass& c) const {
  DimVector s(static_cast<size_t>(r_), 0);
  for (const auto& [seg, mult] : multisegment(c)) s[static_cast<size_t>((seg.top + seg.length - 1) % r_)] += mult;
  return s;
}

int NilpotentCyclicEngine::hom_dim(const IsoClass& m, const IsoClass& n) const {
  int d = 0;
  for (const auto& [a, ma] : multisegment(m))
    for (const auto& [b, mb] : multisegment(n)) d += ma * mb * segment_hom_dim(a, b, r_);
  return d;
}

std::vector<IsoClass> NilpotentCyclicEngine::decompose(const IsoClass& c) const {
  std::vector<IsoClass> out;
  for (const auto& [seg, mult] : multisegment(c))
    for (int k = 0; k < mult; ++k) out.push_back(class_of(Multisegment{{seg, 1}}));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Orbit machinery

namespace {

// Encodes points of E_V as integers and applies generators of G_V.
class PointCodec {
 public:
  PointCodec(const Quiver& Q, const Field& F, const DimVector& d) : Q_(Q), F_(F), d_(d) {
    for (int a = 0; a < Q.arrow_count(); ++a) {
      offset_.push_back(entries_);
      entries_ += d[static_cast<size_t>(Q.head(a))] * d[static_cast<size_t>(Q.tail(a))];
    }
    double bits = entries_ * std::log2(static_cast<double>(F.q()));
    if (bits > 62) throw CapExceeded("E_V too large to encode");
    for (int v = 0; v < Q.vertex_count(); ++v) {
      int n = d[static_cast<size_t>(v)];
      if (n >= 1 && F.q() > 2) gens_.push_back(Gen{v, 1, 0, 0, F.primitive_element()});
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (j != k)
            for (int c : F.prime_basis()) gens_.push_back(Gen{v, 0, j, k, c});
    }
  }

  int entries() const { return entries_; }
  size_t generator_count() const { return gens_.size(); }

  uint64_t encode(const std::vector<uint8_t>& digits) const {
    uint64_t c = 0;
    for (int i = entries_ - 1; i >= 0; --i) c = c * static_cast<uint64_t>(F_.q()) + digits[static_cast<size_t>(i)];
    return c;
  }
  void decode(uint64_t code, std::vector<uint8_t>& digits) const {
    digits.resize(static_cast<size_t>(entries_));
    for (int i = 0; i < entries_; ++i) {
      digits[static_cast<size_t>(i)] = static_cast<uint8_t>(code % static_cast<uint64_t>(F_.q()));
      code /= static_cast<uint64_t>(F_.q());
    }
  }
  std::vector<uint8_t> digits_of(const RepPoint& x) const {
    std::vector<uint8_t> dg(static_cast<size_t>(entries_));
    for (int a = 0; a < Q_.arrow_count(); ++a) {
      const Mat& m = x.maps[static_cast<size_t>(a)];
      std::copy(m.a.begin(), m.a.end(), dg.begin() + offset_[static_cast<size_t>(a)]);
    }
    return dg;
  }
  RepPoint point_of(const std::vector<uint8_t>& dg, std::shared_ptr<const Quiver> q, std::shared_ptr<const Field> f) const {
    RepPoint x = RepPoint::zero(std::move(q), std::move(f), d_);
    for (int a = 0; a < Q_.arrow_count(); ++a) {
      Mat& m = x.maps[static_cast<size_t>(a)];
      std::copy(dg.begin() + offset_[static_cast<size_t>(a)], dg.begin() + offset_[static_cast<size_t>(a)] + static_cast<long>(m.a.size()), m.a.begin());
    }
    return x;
  }

  // x -> g x g^{-1} for generator g
  void act(size_t gi, std::vector<uint8_t>& dg) const {
    const Gen& g = gens_[gi];
    for (int a = 0; a < Q_.arrow_count(); ++a) {
      const int rows = d_[static_cast<size_t>(Q_.head(a))], cols = d_[static_cast<size_t>(Q_.tail(a))];
      uint8_t* m = dg.data() + offset_[static_cast<size_t>(a)];
      if (Q_.head(a) == g.vertex) {
        if (g.kind == 0) {  // row j += c row k
          for (int col = 0; col < cols; ++col)
            m[g.j * cols + col] = static_cast<uint8_t>(F_.add(m[g.j * cols + col], F_.mul(g.c, m[g.k * cols + col])));
        } else {
          for (int col = 0; col < cols; ++col) m[col] = static_cast<uint8_t>(F_.mul(g.c, m[col]));
        }
      }
      if (Q_.tail(a) == g.vertex) {
        if (g.kind == 0) {  // col k -= c col j
          int nc = F_.neg(g.c);
          for (int row = 0; row < rows; ++row)
            m[row * cols + g.k] = static_cast<uint8_t>(F_.add(m[row * cols + g.k], F_.mul(nc, m[row * cols + g.j])));
        } else {
          int ic = F_.inv(g.c);
          for (int row = 0; row < rows; ++row) m[row * cols] = static_cast<uint8_t>(F_.mul(ic, m[row * cols]));
        }
      }
    }
  }

 private:
  struct Gen {
    int vertex;
    int kind;  // 0 transvection I + c E_jk, 1 scaling of the first basis vector
    int j, k;
    int c;
  };
  const Quiver& Q_;
  const Field& F_;
  DimVector d_;
  std::vector<int> offset_;
  int entries_ = 0;
  std::vector<Gen> gens_;
};

template <class Visit>
uint64_t bfs_orbit(const PointCodec& codec, const std::vector<uint8_t>& start, uint64_t max_orbit, Visit&& visit) {
  std::unordered_set<uint64_t> seen;
  std::deque<uint64_t> queue;
  uint64_t c0 = codec.encode(start);
  seen.insert(c0);
  queue.push_back(c0);
  std::vector<uint8_t> cur, nxt;
  while (!queue.empty()) {
    uint64_t c = queue.front();
    queue.pop_front();
    if (visit(c)) return seen.size();
    codec.decode(c, cur);
    for (size_t g = 0; g < codec.generator_count(); ++g) {
      nxt = cur;
      codec.act(g, nxt);
      uint64_t n = codec.encode(nxt);
      if (seen.insert(n).second) {
        if (seen.size() > max_orbit) throw CapExceeded("orbit exceeds search cap");
        queue.push_back(n);
      }
    }
  }
  return seen.size();
}

}  // namespace

Integer group_order(const DimVector& d, long q) {
  Integer g = 1;
  for (int n : d) g *= gl_order(n, q);
  return g;
}

uint64_t orbit_size_of(const RepPoint& x, uint64_t max_orbit) {
  PointCodec codec(*x.quiver, *x.field, x.dims);
  return bfs_orbit(codec, codec.digits_of(x), max_orbit, [](uint64_t) { return false; });
}

bool same_orbit(const RepPoint& x, const RepPoint& y, uint64_t max_orbit) {
  if (x.dims != y.dims) return false;
  PointCodec codec(*x.quiver, *x.field, x.dims);
  uint64_t target = codec.encode(codec.digits_of(y));
  bool found = false;
  bfs_orbit(codec, codec.digits_of(x), max_orbit, [&](uint64_t c) { return found = (c == target); });
  return found;
}

// ---------------------------------------------------------------------------
// BruteForceEngine

BruteForceEngine::BruteForceEngine(std::shared_ptr<const Quiver> quiver, long q, bool nilpotent_only)
    : Engine(std::move(quiver), q), nilpotent_only_(nilpotent_only) {}

uint64_t BruteForceEngine::point_count(const DimVector& d) const {
  check_grade(d);
  uint64_t n = 1;
  for (const auto& [t, h] : quiver().arrows())
    for (int i = 0; i < d[static_cast<size_t>(t)] * d[static_cast<size_t>(h)]; ++i) {
      n *= static_cast<uint64_t>(q());
      if (n > kMaxPoints)
        throw CapExceeded("grade " + dim_to_string(d) + " has more than 2^22 points; cap exceeded, use smaller parameters");
    }
  return n;
}

uint64_t BruteForceEngine::encode(const RepPoint& x) const {
  PointCodec codec(quiver(), field(), x.dims);
  return codec.encode(codec.digits_of(x));
}

RepPoint BruteForceEngine::decode(const DimVector& d, uint64_t code) const {
  PointCodec codec(quiver(), field(), d);
  std::vector<uint8_t> dg;
  codec.decode(code, dg);
  return codec.point_of(dg, quiver_ptr(), field_ptr());
}

const BruteForceEngine::GradeData& BruteForceEngine::grade_data(const DimVector& d) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = grades_.find(d);
    if (it != grades_.end()) return *it->second;
  }
  const uint64_t total = point_count(d);
  auto g = std::make_unique<GradeData>();
  g->orbit_of.assign(total, -1);
  PointCodec codec(quiver(), field(), d);
  std::vector<uint64_t> queue;
  std::vector<uint8_t> cur, nxt;
  for (uint64_t start = 0; start < total; ++start) {
    if (g->orbit_of[start] >= 0) continue;
    const int32_t id = static_cast<int32_t>(g->orbit_min.size());
    g->orbit_min.push_back(start);
    uint64_t size = 1;
    g->orbit_of[start] = id;
    queue.assign(1, start);
    while (!queue.empty()) {
      uint64_t c = queue.back();
      queue.pop_back();
      codec.decode(c, cur);
      for (size_t gi = 0; gi < codec.generator_count(); ++gi) {
        nxt = cur;
        codec.act(gi, nxt);
        uint64_t n = codec.encode(nxt);
        if (g->orbit_of[n] < 0) {
          g->orbit_of[n] = id;
          ++size;
          queue.push_back(n);
        }
      }
    }
    g->orbit_size.push_back(size);
  }
  for (size_t o = 0; o < g->orbit_min.size(); ++o) {
    bool keep = !nilpotent_only_ || is_nilpotent(decode(d, g->orbit_min[o]));
    g->class_of_orbit.push_back(keep ? static_cast<int32_t>(g->orbit_of_class.size()) : -1);
    if (keep) g->orbit_of_class.push_back(static_cast<int32_t>(o));
  }
  std::lock_guard<std::mutex> lock(mu_);
  return *grades_.emplace(d, std::move(g)).first->second;
}

const std::vector<int32_t>& BruteForceEngine::orbit_index(const DimVector& d) const { return grade_data(d).orbit_of; }

std::optional<IsoClass> BruteForceEngine::class_of_orbit(const DimVector& d, int32_t orbit) const {
  const GradeData& g = grade_data(d);
  int32_t c = g.class_of_orbit.at(static_cast<size_t>(orbit));
  if (c < 0) return std::nullopt;
  return IsoClass{d, c};
}

std::vector<IsoClass> BruteForceEngine::classes(const DimVector& d) const {
  const GradeData& g = grade_data(d);
  std::vector<IsoClass> out;
  for (size_t i = 0; i < g.orbit_of_class.size(); ++i) out.push_back(IsoClass{d, static_cast<int>(i)});
  return out;
}

RepPoint BruteForceEngine::realize(const IsoClass& c) const {
  const GradeData& g = grade_data(c.grade);
  if (c.index < 0 || c.index >= static_cast<int>(g.orbit_of_class.size())) throw std::out_of_range("unknown isoclass");
  return decode(c.grade, g.orbit_min[static_cast<size_t>(g.orbit_of_class[static_cast<size_t>(c.index)])]);
}

IsoClass BruteForceEngine::classify(const RepPoint& x) const {
  const GradeData& g = grade_data(x.dims);
  int32_t orbit = g.orbit_of[encode(x)];
  int32_t c = g.class_of_orbit[static_cast<size_t>(orbit)];
  if (c < 0) throw std::invalid_argument("point lies outside this engine's category");
  return IsoClass{x.dims, c};
}

uint64_t BruteForceEngine::orbit_size(const IsoClass& c) const {
  const GradeData& g = grade_data(c.grade);
  return g.orbit_size.at(static_cast<size_t>(g.orbit_of_class.at(static_cast<size_t>(c.index))));
}

Integer BruteForceEngine::aut_order(const IsoClass& c) const {
  Integer g = group_order(c.grade, q());
  Integer o = Integer(static_cast<unsigned long>(orbit_size(c)));
  if (g % o != 0) throw std::logic_error("orbit size does not divide |G_V|");
  return g / o;
}

std::string BruteForceEngine::render(const IsoClass& c) const {
  return "Q:" + id() + "|q:" + std::to_string(q()) + "|d:" + dim_to_string(c.grade) + "|#" + std::to_string(c.index);
}

IsoClass BruteForceEngine::parse_class(std::string_view text) const {
  std::string s(text);
  auto bad = [&]() { throw std::invalid_argument("bad class key '" + s + "'"); };
  std::string prefix = "Q:" + id() + "|q:" + std::to_string(q()) + "|d:";
  if (s.rfind(prefix, 0) != 0) bad();
  size_t hash = s.find("|#", prefix.size());
  if (hash == std::string::npos) bad();
  DimVector d = parse_dimvector(s.substr(prefix.size(), hash - prefix.size()));
  int idx = 0;
  try {
    idx = std::stoi(s.substr(hash + 2));
  } catch (const std::logic_error&) {
    bad();
  }
  auto cls = classes(d);
  if (idx < 0 || idx >= static_cast<int>(cls.size())) bad();
  return cls[static_cast<size_t>(idx)];
}

// ---------------------------------------------------------------------------
// Hall polynomials for nilpotent C_r

PolyQ hall_polynomial(int r, const Multisegment& L, const Multisegment& M, const Multisegment& N,
                      uint64_t max_subspace_tuples) {
  DimVector dl = multisegment_dims(L, r), dm = multisegment_dims(M, r), dn = multisegment_dims(N, r);
  if (dl != dim_add(dm, dn)) return PolyQ();
  const int bound = dim_total(dm) * dim_total(dn);
  std::vector<std::pair<long, Rational>> samples;
  for (long q : {2L, 3L, 4L, 5L, 7L, 8L, 9L, 11L, 13L, 16L, 17L, 19L, 23L, 25L, 27L, 29L, 31L, 32L}) {
    if (static_cast<int>(samples.size()) >= bound + 2) break;
    // number of subspace tuples is a proxy for the enumeration cost
    double tuples = 1;
    for (int d : dl) {
      double grass = 0;
      for (int k = 0; k <= d; ++k) grass += std::pow(static_cast<double>(q), k * (d - k));
      tuples *= grass;
    }
    if (tuples > static_cast<double>(max_subspace_tuples)) break;
    NilpotentCyclicEngine e(r, q);
    IsoClass cl = e.class_of(L), cm = e.class_of(M), cn = e.class_of(N);
    long count = 0;
    for_each_subrepresentation(
        e.realize(cl),
        [&](const RepPoint& sub, const RepPoint& quo) {
          if (e.classify(sub) == cn && e.classify(quo) == cm) ++count;
        },
        dn);
    samples.emplace_back(q, Rational(count));
  }
  if (static_cast<int>(samples.size()) < bound + 1)
    throw CapExceeded("hall_polynomial: only " + std::to_string(samples.size()) + " sample fields fit under the cap, need " +
                             std::to_string(bound + 1));
  return interpolate_q(samples, bound);
}

// ---------------------------------------------------------------------------
// Kronecker helpers

Mat jordan_matrix(const Partition& lambda) {
  const int n = lambda.size();
  Mat j(n, n);
  int start = 0;
  for (int p : lambda.parts()) {
    for (int i = 0; i + 1 < p; ++i) j.at(start + i, start + i + 1) = 1;
    start += p;
  }
  return j;
}

namespace {

void require_kronecker(const Engine& e) {
  if (!(e.quiver() == Quiver::kronecker())) throw std::invalid_argument("engine is not over the Kronecker quiver");
}

}  // namespace

bool kronecker_is_regular(const Engine& e, const IsoClass& c) {
  require_kronecker(e);
  for (const IsoClass& s : e.decompose(c))
    if (s.grade[0] != s.grade[1]) return false;
  return true;
}

std::vector<IsoClass> kronecker_regular_classes(const Engine& e, int n) {
  require_kronecker(e);
  std::vector<IsoClass> out;
  for (const IsoClass& c : e.classes({n, n}))
    if (kronecker_is_regular(e, c)) out.push_back(c);
  return out;
}

IsoClass kronecker_i0(const Engine& e, const Partition& lambda) {
  require_kronecker(e);
  const int n = lambda.size();
  RepPoint x = RepPoint::zero(e.quiver_ptr(), e.field_ptr(), {n, n});
  x.maps[0] = Mat::identity(n);
  x.maps[1] = jordan_matrix(lambda);
  return e.classify(x);
}

IsoClass kronecker_iinf(const Engine& e, const Partition& lambda) {
  require_kronecker(e);
  const int n = lambda.size();
  RepPoint x = RepPoint::zero(e.quiver_ptr(), e.field_ptr(), {n, n});
  x.maps[0] = jordan_matrix(lambda);
  x.maps[1] = Mat::identity(n);
  return e.classify(x);
}

namespace {

std::string tube_label(const Engine& e, const RepPoint& x, int d) {
  const Field& F = e.field();
  if (d == 1) {
    int a = x.maps[0].at(0, 0), b = x.maps[1].at(0, 0);
    if (a == 0) return "inf";
    return std::to_string(F.mul(b, F.inv(a)));
  }
  // alpha is invertible away from infinity; the Krylov polynomial of
  // alpha^-1 beta on e_1 is its (irreducible) characteristic polynomial
  Mat A = mat_mul(F, inverse(F, x.maps[0]), x.maps[1]);
  Mat kry(d + 1, d);
  std::vector<uint8_t> v(static_cast<size_t>(d), 0);
  v[0] = 1;
  for (int k = 0; k <= d; ++k) {
    for (int i = 0; i < d; ++i) kry.at(k, i) = v[static_cast<size_t>(i)];
    v = apply(F, A, v);
  }
  // find c with sum_k c_k A^k e_1 = 0: kernel of the transpose
  Mat t(d, d + 1);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k <= d; ++k) t.at(i, k) = kry.at(k, i);
  Mat ker = kernel(F, t);
  std::vector<int> c(static_cast<size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) c[static_cast<size_t>(k)] = ker.at(ker.rows - 1, k);
  int lead = F.inv(c[static_cast<size_t>(d)]);
  std::string s = "[";
  for (int k = 0; k <= d; ++k) s += (k ? "," : "") + std::to_string(F.mul(lead, c[static_cast<size_t>(k)]));
  return s + "]";
}

}  // namespace

std::vector<Tube> kronecker_tubes(const Engine& e, int max_degree) {
  require_kronecker(e);
  std::vector<Tube> out;
  for (int d = 1; d <= max_degree; ++d)
    for (const IsoClass& c : e.classes({d, d})) {
      if (!e.is_indecomposable(c)) continue;
      bool simple = true;
      for (int k = 1; k < d && simple; ++k)
        for_each_subrepresentation(
            e.realize(c),
            [&](const RepPoint& sub, const RepPoint&) {
              if (simple && kronecker_is_regular(e, e.classify(sub))) simple = false;
            },
            DimVector{k, k});
      if (!simple) continue;
      out.push_back(Tube{c, d, tube_label(e, e.realize(c), d)});
    }
  return out;
}

namespace {

// E_x[1..m]
std::vector<IsoClass> tube_indecomposables(const Engine& e, const Tube& t, int m) {
  std::vector<IsoClass> ind{t.simple};
  for (int k = 2; k <= m; ++k) {
    std::optional<IsoClass> found;
    for (const IsoClass& L : e.classes({k * t.degree, k * t.degree})) {
      if (e.hall_number(L, ind.back(), t.simple) == 0) continue;
      if (!e.is_indecomposable(L)) continue;
      if (found) throw std::logic_error("tube extension is not unique");
      found = L;
    }
    if (!found) throw std::logic_error("no indecomposable extension found in tube " + t.label);
    ind.push_back(*found);
  }
  return ind;
}

}  // namespace

std::map<Partition, IsoClass> kronecker_tube_classes(const Engine& e, const Tube& t, int m) {
  require_kronecker(e);
  auto ind = tube_indecomposables(e, t, m);
  std::map<Partition, IsoClass> out;
  for (const Partition& lambda : partitions_of(m)) {
    RepPoint x = RepPoint::zero(e.quiver_ptr(), e.field_ptr(), {0, 0});
    for (int p : lambda.parts()) x = direct_sum(x, e.realize(ind[static_cast<size_t>(p - 1)]));
    out.emplace(lambda, e.classify(x));
  }
  return out;
}

bool kronecker_in_tube(const Engine& e, const Tube& t, const IsoClass& c) {
  require_kronecker(e);
  auto parts = e.decompose(c);
  int maxlen = 0;
  for (const IsoClass& s : parts) {
    if (s.grade[0] != s.grade[1] || s.grade[0] % t.degree != 0) return false;
    maxlen = std::max(maxlen, s.grade[0] / t.degree);
  }
  auto ind = tube_indecomposables(e, t, maxlen);
  for (const IsoClass& s : parts)
    if (s != ind[static_cast<size_t>(s.grade[0] / t.degree - 1)]) return false;
  return true;
}

}  // namespace hall
