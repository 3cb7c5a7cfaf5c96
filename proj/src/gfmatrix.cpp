#include "hall/gfmatrix.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace hall {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool Mat::is_zero() const {
  for (uint8_t x : a)
    if (x) return false;
  return true;
}

Mat mat_mul(const Field& F, const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape mismatch");
  Mat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      int c = x.at(i, k);
      if (!c) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) = static_cast<uint8_t>(F.add(r.at(i, j), F.mul(c, y.at(k, j))));
    }
  return r;
}

Mat mat_add(const Field& F, const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("mat_add: shape mismatch");
  Mat r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = static_cast<uint8_t>(F.add(r.a[i], y.a[i]));
  return r;
}

Mat mat_sub(const Field& F, const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("mat_sub: shape mismatch");
  Mat r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = static_cast<uint8_t>(F.sub(r.a[i], y.a[i]));
  return r;
}

Echelon row_reduce(const Field& F, Mat m) {
  Echelon e;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int piv = -1;
    for (int i = row; i < m.rows; ++i)
      if (m.at(i, col)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
    int inv = F.inv(m.at(row, col));
    for (int j = 0; j < m.cols; ++j) m.at(row, j) = static_cast<uint8_t>(F.mul(inv, m.at(row, j)));
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || !m.at(i, col)) continue;
      int f = F.neg(m.at(i, col));
      for (int j = 0; j < m.cols; ++j) m.at(i, j) = static_cast<uint8_t>(F.add(m.at(i, j), F.mul(f, m.at(row, j))));
    }
    e.pivots.push_back(col);
    ++row;
  }
  m.rows = row;
  m.a.resize(static_cast<size_t>(row * m.cols));
  e.rref = std::move(m);
  return e;
}

int rank(const Field& F, const Mat& m) { return row_reduce(F, m).rank(); }

Mat kernel(const Field& F, const Mat& m) {
  Echelon e = row_reduce(F, m);
  std::vector<bool> is_piv(static_cast<size_t>(m.cols), false);
  for (int p : e.pivots) is_piv[static_cast<size_t>(p)] = true;
  Mat k(m.cols - e.rank(), m.cols);
  int r = 0;
  for (int f = 0; f < m.cols; ++f) {
    if (is_piv[static_cast<size_t>(f)]) continue;
    k.at(r, f) = 1;
    for (int i = 0; i < e.rank(); ++i) k.at(r, e.pivots[static_cast<size_t>(i)]) = static_cast<uint8_t>(F.neg(e.rref.at(i, f)));
    ++r;
  }
  return k;
}

Mat inverse(const Field& F, const Mat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse: not square");
  const int n = m.rows;
  Mat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  Echelon e = row_reduce(F, aug);
  if (e.rank() < n || e.pivots[static_cast<size_t>(n - 1)] != n - 1) throw std::domain_error("inverse: singular matrix");
  Mat r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = e.rref.at(i, n + j);
  return r;
}

void Subspace::reduce(const Field& F, std::vector<uint8_t>& v) const {
  for (int i = 0; i < basis.rank(); ++i) {
    int c = v[static_cast<size_t>(basis.pivots[static_cast<size_t>(i)])];
    if (!c) continue;
    int f = F.neg(c);
    for (int j = 0; j < n; ++j) v[static_cast<size_t>(j)] = static_cast<uint8_t>(F.add(v[static_cast<size_t>(j)], F.mul(f, basis.rref.at(i, j))));
  }
}

bool Subspace::contains(const Field& F, std::vector<uint8_t> v) const {
  reduce(F, v);
  for (uint8_t x : v)
    if (x) return false;
  return true;
}

std::vector<int> Subspace::complement() const {
  std::vector<bool> is_piv(static_cast<size_t>(n), false);
  for (int p : basis.pivots) is_piv[static_cast<size_t>(p)] = true;
  std::vector<int> c;
  for (int j = 0; j < n; ++j)
    if (!is_piv[static_cast<size_t>(j)]) c.push_back(j);
  return c;
}

namespace {

// all k x n reduced echelon matrices with the given pivot set
void fill_free(const Field& F, int n, const std::vector<int>& pivots, std::vector<Subspace>& out) {
  const int k = static_cast<int>(pivots.size());
  std::vector<std::pair<int, int>> free;
  std::vector<bool> is_piv(static_cast<size_t>(n), false);
  for (int p : pivots) is_piv[static_cast<size_t>(p)] = true;
  for (int i = 0; i < k; ++i)
    for (int j = pivots[static_cast<size_t>(i)] + 1; j < n; ++j)
      if (!is_piv[static_cast<size_t>(j)]) free.emplace_back(i, j);
  std::vector<int> digits(free.size(), 0);
  for (;;) {
    Subspace s;
    s.n = n;
    s.basis.rref = Mat(k, n);
    s.basis.pivots = pivots;
    for (int i = 0; i < k; ++i) s.basis.rref.at(i, pivots[static_cast<size_t>(i)]) = 1;
    for (size_t t = 0; t < free.size(); ++t) s.basis.rref.at(free[t].first, free[t].second) = static_cast<uint8_t>(digits[t]);
    out.push_back(std::move(s));
    size_t t = 0;
    while (t < digits.size() && ++digits[t] == F.q()) digits[t++] = 0;
    if (t == digits.size()) break;
  }
}

}  // namespace

const std::vector<Subspace>& all_subspaces(const Field& F, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<std::vector<Subspace>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{F.q(), n}];
  if (!slot) {
    slot = std::make_unique<std::vector<Subspace>>();
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      std::vector<int> pivots;
      for (int j = 0; j < n; ++j)
        if (mask & (1U << j)) pivots.push_back(j);
      fill_free(F, n, pivots, *slot);
    }
  }
  return *slot;
}

}  // namespace hall
