#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hall/coeffring.hpp"

namespace hall {

/// Integer partition with weakly decreasing parts; the empty partition is valid.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // |lambda|
  int length() const { return static_cast<int>(parts_.size()); }
  /// n(lambda) = sum (i-1) lambda_i
  int n_lambda() const;
  /// multiplicity of the part value i
  int multiplicity(int i) const;

  /// `(3,1,1)`; the empty partition is `()`.
  std::string to_string() const;
  /// Accepts `(3,1,1)` and the exponential form `(1^2,3^1)`.
  static Partition parse(std::string_view text);

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

 private:
  std::vector<int> parts_;
};

/// All partitions of n (0 <= n <= 30) in decreasing lexicographic order.
const std::vector<Partition>& partitions_of(int n);

/// |Aut(I_lambda)| over F_q as a polynomial in q; a of the empty partition is 1.
PolyQ a_lambda(const Partition& lambda);
Integer a_lambda(const Partition& lambda, long q0);

/// prod_{s=1}^{l(lambda)-1} (1 - q^{s e}), the coefficient pattern of the
/// primitive elements built from partitions.
PolyQ partition_weight(const Partition& lambda, int e = 1);

/// Number of monic irreducible polynomials of degree s over F_q.
PolyQ phi_irreducible_count(int s);
Integer phi_irreducible_count(int s, long q0);

/// |GL_n(F_q)| = prod_{i=0}^{n-1} (q^n - q^i).
Integer gl_order(int n, long q0);

}  // namespace hall
