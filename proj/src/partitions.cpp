#include "hall/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace hall {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw std::invalid_argument("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

int Partition::n_lambda() const {
  int s = 0;
  for (size_t i = 0; i < parts_.size(); ++i) s += static_cast<int>(i) * parts_[i];
  return s;
}

int Partition::multiplicity(int i) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), i)); }

std::string Partition::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

Partition Partition::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  std::vector<int> parts;
  if (s.empty()) return Partition();
  size_t pos = 0;
  auto bad = [&]() { throw std::invalid_argument("bad partition '" + std::string(text) + "'"); };
  while (pos <= s.size()) {
    size_t end = s.find(',', pos);
    if (end == std::string::npos) end = s.size();
    std::string item = s.substr(pos, end - pos);
    if (item.empty()) bad();
    size_t caret = item.find('^');
    try {
      size_t used = 0;
      int part = std::stoi(item.substr(0, caret), &used);
      if (used != (caret == std::string::npos ? item.size() : caret)) bad();
      int mult = 1;
      if (caret != std::string::npos) {
        mult = std::stoi(item.substr(caret + 1), &used);
        if (used != item.size() - caret - 1 || mult < 0) bad();
      }
      if (part < 1) bad();
      parts.insert(parts.end(), static_cast<size_t>(mult), part);
    } catch (const std::logic_error&) {
      bad();
    }
    pos = end + 1;
  }
  return Partition(std::move(parts));
}

namespace {

void gen(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
  if (n < 0 || n > 30) throw std::out_of_range("partitions_of: n must be in [0, 30]");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<std::vector<Partition>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    slot = std::make_unique<std::vector<Partition>>();
    std::vector<int> cur;
    gen(n, n, cur, *slot);
  }
  return *slot;
}

PolyQ a_lambda(const Partition& lambda) {
  // q^{|l|+2n(l)} prod_i prod_{j<=t_i} (1 - q^{-j})
  //   = q^{|l|+2n(l) - sum t_i(t_i+1)/2} prod_i prod_{j<=t_i} (q^j - 1)
  int shift = lambda.size() + 2 * lambda.n_lambda();
  PolyQ r = PolyQ::constant(1);
  std::map<int, int> mult;
  for (int p : lambda.parts()) ++mult[p];
  for (const auto& [part, t] : mult) {
    shift -= t * (t + 1) / 2;
    for (int j = 1; j <= t; ++j) r *= PolyQ::monomial(j) - PolyQ::constant(1);
  }
  if (shift < 0) throw std::logic_error("a_lambda: negative q-power");
  return r * PolyQ::monomial(shift);
}

Integer a_lambda(const Partition& lambda, long q0) {
  Rational v = a_lambda(lambda)(Rational(q0));
  return v.get_num();
}

PolyQ partition_weight(const Partition& lambda, int e) {
  PolyQ r = PolyQ::constant(1);
  for (int s = 1; s < lambda.length(); ++s) r *= PolyQ::constant(1) - PolyQ::monomial(s * e);
  return r;
}

namespace {

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace

PolyQ phi_irreducible_count(int s) {
  if (s < 1) throw std::invalid_argument("phi_irreducible_count: s must be positive");
  PolyQ r;
  for (int d = 1; d <= s; ++d)
    if (s % d == 0 && mobius(d) != 0) r += PolyQ::monomial(s / d, Rational(mobius(d), s));
  return r;
}

Integer phi_irreducible_count(int s, long q0) {
  Rational v = phi_irreducible_count(s)(Rational(q0));
  if (v.get_den() != 1) throw std::logic_error("phi_irreducible_count: non-integral value");
  return v.get_num();
}

Integer gl_order(int n, long q0) {
  Integer r = 1, qn = ipow(q0, static_cast<unsigned>(n));
  for (int i = 0; i < n; ++i) r *= qn - ipow(q0, static_cast<unsigned>(i));
  return r;
}

}  // namespace hall
