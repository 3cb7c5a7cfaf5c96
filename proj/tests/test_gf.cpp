#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hall/gf.hpp"

using namespace hall;

namespace {

std::shared_ptr<const FieldSpec> spec(long q) { return std::make_shared<const FieldSpec>(q); }

// brute-force irreducibility over GF(p) for tiny degrees: no roots and, for
// degree 4, no monic quadratic factor, tested by expanding all products
bool has_root(const std::vector<int>& f, int p) {
  for (int x = 0; x < p; ++x) {
    long acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = (acc * x + *it) % p;
    if (acc == 0) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("moduli") {
  CHECK(spec(2)->modulus() == std::vector<int>{0, 1});
  CHECK(spec(4)->modulus() == std::vector<int>{1, 1, 1});
  CHECK(spec(8)->modulus() == std::vector<int>{1, 1, 0, 1});
  CHECK(spec(9)->modulus() == std::vector<int>{1, 0, 1});
  CHECK(spec(16)->modulus() == std::vector<int>{1, 1, 0, 0, 1});
  // the four monic quadratics over GF(2): only x^2+x+1 lacks a root
  int irreducible = 0;
  for (int c0 = 0; c0 < 2; ++c0)
    for (int c1 = 0; c1 < 2; ++c1) irreducible += !has_root({c0, c1, 1}, 2);
  CHECK(irreducible == 1);
  CHECK_THROWS(FieldSpec(6));
  CHECK_THROWS(FieldSpec(1));
  CHECK(prime_power(49) == std::pair<int, int>{7, 2});
}

TEST_CASE("enumerate") {
  auto f2 = enumerate(spec(2));
  REQUIRE(f2.size() == 2);
  CHECK(f2[0].is_zero());
  CHECK(f2[1].code() == 1);
  CHECK(enumerate(spec(9)).size() == 9);
  auto f4 = enumerate(spec(4));
  CHECK(f4.size() == 4);
  CHECK(f4[3].to_string() == "GF(4):[1,1]");
  CHECK_THROWS(enumerate(spec(16384)));
}

TEST_CASE("field axioms for small fields") {
  for (long q : {2L, 3L, 4L, 5L, 7L, 8L, 9L}) {
    auto s = spec(q);
    auto el = enumerate(s);
    FieldElem zero = el[0], one = el[1];
    for (const auto& a : el) {
      CHECK(a + zero == a);
      CHECK(a * one == a);
      CHECK(a + (-a) == zero);
      if (!a.is_zero()) CHECK(a * a.inverse() == one);
      for (const auto& b : el) {
        CHECK(a * b == b * a);
        for (const auto& c : el) {
          CHECK((a * b) * c == a * (b * c));
          CHECK((a + b) + c == a + (b + c));
          CHECK(a * (b + c) == a * b + a * c);
        }
      }
    }
  }
}

TEST_CASE("trace") {
  auto s2 = spec(2);
  CHECK(trace_to_prime(elem_from_code(s2, 1)) == 1);
  auto s4 = spec(4);
  FieldElem g = elem_from_code(s4, 2);  // the class of x, root of x^2+x+1
  CHECK(g * g == g + elem_from_code(s4, 1));
  CHECK(trace_to_prime(g) == 1);
  for (long q : {2L, 3L, 4L, 8L, 9L}) CHECK(trace_to_prime(elem_from_code(spec(q), 0)) == 0);
}

TEST_CASE("additive character") {
  auto s2 = spec(2);
  CHECK(additive_character(elem_from_code(s2, 1), 2) == CycloSqrt(2, 2, SqrtExt(-1)));
  auto s3 = spec(3);
  CycloSqrt sum(3, 3);
  for (long c = 1; c < 3; ++c) sum += additive_character(elem_from_code(s3, c), 3);
  CHECK(sum.to_sqrt_ext() == SqrtExt(-1));
  CHECK_THROWS(additive_character(elem_from_code(s3, 1), 2));

  for (long q : {2L, 3L, 4L, 5L, 7L, 8L, 9L}) {
    auto s = spec(q);
    auto el = enumerate(s);
    CHECK(additive_character(el[0], q) == CycloSqrt(s->p(), q, SqrtExt(1)));
    CycloSqrt total(s->p(), q);
    for (const auto& a : el) {
      total += additive_character(a, q);
      for (const auto& b : el) CHECK(additive_character(a + b, q) == additive_character(a, q) * additive_character(b, q));
    }
    CHECK(total.is_zero());
  }
}

TEST_CASE("code tables agree with polynomial arithmetic") {
  for (long q : {2L, 4L, 8L, 9L, 16L, 25L}) {
    auto F = Field::get(q);
    auto el = enumerate(F->spec());
    for (int a = 0; a < q; ++a) {
      CHECK(F->trace(a) == trace_to_prime(el[static_cast<size_t>(a)]));
      if (a) CHECK(F->mul(a, F->inv(a)) == 1);
      for (int b = 0; b < q; ++b) {
        CHECK(F->add(a, b) == (el[static_cast<size_t>(a)] + el[static_cast<size_t>(b)]).code());
        CHECK(F->mul(a, b) == (el[static_cast<size_t>(a)] * el[static_cast<size_t>(b)]).code());
      }
    }
    // primitive element generates the multiplicative group
    int x = 1, order = 0;
    do {
      x = F->mul(x, F->primitive_element());
      ++order;
    } while (x != 1);
    CHECK(order == q - 1);
  }
}
