#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hall/gf.hpp"
#include "hall/partitions.hpp"

using namespace hall;

namespace {

// p(n) via Euler's pentagonal recurrence
std::vector<long> pentagonal_counts(int nmax) {
  std::vector<long> p(static_cast<size_t>(nmax) + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= nmax; ++n) {
    long s = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      long sign = (k % 2) ? 1 : -1;
      s += sign * p[static_cast<size_t>(n - g1)];
      if (g2 <= n) s += sign * p[static_cast<size_t>(n - g2)];
    }
    p[static_cast<size_t>(n)] = s;
  }
  return p;
}

// exhaustive count of monic irreducibles of degree s over GF(p) by
// removing all products of lower-degree monics (sieve on coefficient codes)
long irreducible_count_brute(int p, int s) {
  long total = 1;
  for (int i = 0; i < s; ++i) total *= p;
  std::vector<bool> reducible(static_cast<size_t>(total), false);
  auto mulpoly = [p](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return r;
  };
  auto monics = [p](int d) {
    std::vector<std::vector<int>> out;
    long n = 1;
    for (int i = 0; i < d; ++i) n *= p;
    for (long c = 0; c < n; ++c) {
      std::vector<int> f;
      long x = c;
      for (int i = 0; i < d; ++i) {
        f.push_back(static_cast<int>(x % p));
        x /= p;
      }
      f.push_back(1);
      out.push_back(f);
    }
    return out;
  };
  for (int d = 1; d < s; ++d)
    for (const auto& a : monics(d))
      for (const auto& b : monics(s - d)) {
        auto f = mulpoly(a, b);
        long code = 0;
        for (int i = s - 1; i >= 0; --i) code = code * p + f[static_cast<size_t>(i)];
        reducible[static_cast<size_t>(code)] = true;
      }
  long c = 0;
  for (bool r : reducible) c += !r;
  return c;
}

}  // namespace

TEST_CASE("partitions_of") {
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(0)[0].length() == 0);
  CHECK(partitions_of(1).size() == 1);
  const auto& p4 = partitions_of(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4[0].to_string() == "(4)");
  CHECK(p4[1].to_string() == "(3,1)");
  CHECK(p4[2].to_string() == "(2,2)");
  CHECK(p4[3].to_string() == "(2,1,1)");
  CHECK(p4[4].to_string() == "(1,1,1,1)");
  auto counts = pentagonal_counts(30);
  for (int n = 0; n <= 30; ++n) CHECK(partitions_of(n).size() == static_cast<size_t>(counts[static_cast<size_t>(n)]));
  CHECK_THROWS(partitions_of(31));
  CHECK_THROWS(partitions_of(-1));
}

TEST_CASE("parsing") {
  CHECK(Partition::parse("(3,1,1)") == Partition({3, 1, 1}));
  CHECK(Partition::parse("(1^2,3^1)") == Partition({3, 1, 1}));
  CHECK(Partition::parse("()").length() == 0);
  CHECK(Partition::parse("2,2") == Partition({2, 2}));
  CHECK_THROWS(Partition::parse("(0)"));
  CHECK_THROWS(Partition::parse("(a)"));
  CHECK_THROWS(Partition::parse("(1,,2)"));
  CHECK(Partition({2, 1, 1}).n_lambda() == 3);
}

TEST_CASE("a_lambda") {
  CHECK(a_lambda(Partition({1})) == PolyQ(std::vector<Rational>{-1, 1}));
  CHECK(a_lambda(Partition({1}), 2) == 1);
  CHECK(a_lambda(Partition({1, 1}), 2) == 6);
  CHECK(a_lambda(Partition({1, 1}), 2) == gl_order(2, 2));
  CHECK(a_lambda(Partition({2})) == PolyQ(std::vector<Rational>{0, -1, 1}));
  CHECK(a_lambda(Partition({2}), 2) == 2);
  CHECK(a_lambda(Partition()) == PolyQ::constant(1));
  // I_(1^n) is semisimple: automorphism group GL_n
  for (int n = 1; n <= 5; ++n)
    for (long q : {2L, 3L, 4L}) CHECK(a_lambda(Partition(std::vector<int>(static_cast<size_t>(n), 1)), q) == gl_order(n, q));
}

TEST_CASE("phi_irreducible_count") {
  CHECK(phi_irreducible_count(1) == PolyQ::monomial(1));
  CHECK(phi_irreducible_count(2, 2) == 1);
  CHECK(phi_irreducible_count(3, 2) == 2);
  for (int p : {2, 3})
    for (int s = 1; s <= 4; ++s) CHECK(phi_irreducible_count(s, p) == irreducible_count_brute(p, s));
  // necklace identity
  for (int n = 1; n <= 6; ++n)
    for (long q : {2L, 3L, 4L, 5L}) {
      Integer sum = 0;
      for (int s = 1; s <= n; ++s)
        if (n % s == 0) sum += s * phi_irreducible_count(s, q);
      CHECK(sum == ipow(q, static_cast<unsigned>(n)));
    }
}
