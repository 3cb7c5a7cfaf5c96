#pragma once

// Named primitive elements and the identities they satisfy.

#include <map>
#include <memory>
#include <string>

#include "hall/hallcore.hpp"
#include "hall/partitions.hpp"
#include "hall/report.hpp"
#include "hall/repengine.hpp"

namespace hall {

using NilEngine = std::shared_ptr<const NilpotentCyclicEngine>;
using EnginePtr = std::shared_ptr<const Engine>;

/// prod_{s=1}^{l(lambda)-1} (1 - q^{s e})
Rational partition_weight_at(const Partition& lambda, long q, int e = 1);
RationalFunctionV partition_weight_symbolic(const Partition& lambda, int e = 1);

/// p_n = sum_lambda prod(1-q^s) [I_lambda] over nilpotent C_1.
HallElement p_jordan(const NilEngine& c1, int n);
SymbolicHallElement p_jordan_symbolic(const NilEngine& c1, int n);

/// Central element c_n of the nilpotent C_r Hall algebra (c_0 = 1).
HallElement c_central(const NilEngine& e, int n);
/// x_n = n c_n - sum_{s<n} x_s c_{n-s}
HallElement x_element(const NilEngine& e, int n);
/// p_n^{(r)} = q^{rn}/(q^n-1) x_n
HallElement p_cyclic(const NilEngine& e, int n);

/// sum_{lambda |- m} prod_{s<l(lambda)} (1-q^{s e}) [I_lambda(x)].
HallElement p_tube_homog(const EnginePtr& engine, int e, int m, const std::map<Partition, IsoClass>& classes);

HallElement kron_p0(const EnginePtr& k2, int n);
HallElement kron_pinf(const EnginePtr& k2, int n);
HallElement kron_pK2(const EnginePtr& k2, int n);

// Symbolic identities in q.
RationalFunctionV xi_sum(int n);
VerificationReport verify_xi_identity(int n);
VerificationReport verify_partition_sum_identities(int n);

/// {p_n^{(r)}, 1_{n delta}} against the partition sum and 1/(q^n-1); r = 1 uses p_n.
VerificationReport verify_key_pairing(int r, int n, long q);

/// Coefficients of [S_i[rn]] in x_n and p_n^{(r)}, and of [I_lambda^{(r)}] in p_n^{(r)}.
VerificationReport verify_cyclic_coefficients(int r, int n, long q);
/// c_n central against the simples; D(c_n) = sum_s c_s (x) c_{n-s}.
VerificationReport central_elements_check(int r, int n, long q);
/// p_1^{(2)} = [S1[2]] + [S2[2]] - (q-1)[S1+S2].
VerificationReport explicit_p1_check(long q);

/// Primitivity of the named families over the given parameter ranges.
VerificationReport primitivity_suite(const std::vector<long>& qs);

VerificationReport primitive_kernel_check(int n, long q);
/// anchor is a tube label ("0", "inf", "1", "[1,1,1]", ...).
VerificationReport tube_basis_check(int n, long q, const std::string& anchor = "0");

/// Tube-level data on K2: p_t(y) for every tube of degree dividing n.
struct TubePrimitive {
  Tube tube;
  int m = 0;
  HallElement element;
};
std::vector<TubePrimitive> kronecker_tube_primitives(const EnginePtr& k2, int n);

}  // namespace hall
