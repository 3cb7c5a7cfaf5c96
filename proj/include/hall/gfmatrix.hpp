#pragma once

// Dense matrices over a table-driven finite field. Entries are element codes.

#include <cstdint>
#include <memory>
#include <vector>

#include "hall/gf.hpp"

namespace hall {

struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<uint8_t> a;  // row-major

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r * c), 0) {}
  static Mat identity(int n);

  uint8_t& at(int i, int j) { return a[static_cast<size_t>(i * cols + j)]; }
  uint8_t at(int i, int j) const { return a[static_cast<size_t>(i * cols + j)]; }
  bool is_zero() const;
  friend bool operator==(const Mat& x, const Mat& y) { return x.rows == y.rows && x.cols == y.cols && x.a == y.a; }
};

Mat mat_mul(const Field& F, const Mat& x, const Mat& y);
Mat mat_add(const Field& F, const Mat& x, const Mat& y);
Mat mat_sub(const Field& F, const Mat& x, const Mat& y);

/// Row echelon data: reduced rows and pivot columns.
struct Echelon {
  Mat rref;  // only the first rank rows are kept
  std::vector<int> pivots;
  int rank() const { return static_cast<int>(pivots.size()); }
};

Echelon row_reduce(const Field& F, Mat m);
int rank(const Field& F, const Mat& m);
/// Basis of {x : m x = 0}, one vector per row of the result.
Mat kernel(const Field& F, const Mat& m);
/// Inverse of a square matrix; throws std::domain_error if singular.
Mat inverse(const Field& F, const Mat& m);

/// A subspace of F^n given by a reduced row echelon basis.
struct Subspace {
  int n = 0;
  Echelon basis;
  int dim() const { return basis.rank(); }
  /// Reduces v modulo the subspace in place.
  void reduce(const Field& F, std::vector<uint8_t>& v) const;
  bool contains(const Field& F, std::vector<uint8_t> v) const;
  /// Standard basis indices complementing the pivots.
  std::vector<int> complement() const;
};

/// Every subspace of F_q^n (all dimensions), deterministic order. Cached.
const std::vector<Subspace>& all_subspaces(const Field& F, int n);

}  // namespace hall
