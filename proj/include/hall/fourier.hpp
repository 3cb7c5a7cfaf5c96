#pragma once

// Fourier transforms between Hall algebras of quivers that differ by
// reversing a set of arrows. Elements are read as G_V-invariant functions
// on E_V ([M] is the characteristic function of its orbit):
//
//   f^(x, y') = q^{-dim Y/2} sum_{y in Y} f(x, y) psi(sum tr(y_rho y'_rho))
//
// with psi(a) = zeta_p^{Tr a}. Values live in Q(zeta_p)(sqrt q).

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "hall/hallcore.hpp"
#include "hall/report.hpp"
#include "hall/repengine.hpp"

namespace hall {

using InvariantFunction = CycloHallElement;

struct ReversalSpec {
  std::shared_ptr<const Quiver> source;
  std::vector<int> arrows;
  std::shared_ptr<const Quiver> target;

  static ReversalSpec make(std::shared_ptr<const Quiver> source, std::vector<int> arrows, std::string target_name);
};

enum class Character { standard, conjugate };

class FourierTransform {
 public:
  /// Both engines must carry full orbit data (not nilpotent-only) and the
  /// target quiver must be the source with `arrows` reversed.
  FourierTransform(std::shared_ptr<const BruteForceEngine> source, std::shared_ptr<const BruteForceEngine> target,
                   std::vector<int> arrows, Character chi = Character::standard);

  const ReversalSpec& spec() const { return spec_; }
  const std::shared_ptr<const BruteForceEngine>& source() const { return source_; }
  const std::shared_ptr<const BruteForceEngine>& target() const { return target_; }

  InvariantFunction operator()(const HallElement& f) const;
  InvariantFunction operator()(const InvariantFunction& f) const;

  /// Work bound (target points x |Y|) below which every target point is
  /// evaluated; above it two points per orbit are compared.
  static constexpr uint64_t kExhaustiveWork = uint64_t{1} << 22;

 private:
  struct Kernel {
    int dim_y = 0;
    // per target orbit: source orbit -> number of y with each trace value
    std::vector<std::map<int32_t, std::vector<long>>> rows;
  };
  const Kernel& kernel(const DimVector& d) const;
  Kernel build_kernel(const DimVector& d) const;
  template <class S>
  InvariantFunction apply(const BasicHallElement<S>& f) const;

  std::shared_ptr<const BruteForceEngine> source_, target_;
  ReversalSpec spec_;
  Character chi_;
  mutable std::mutex mu_;
  mutable std::map<DimVector, std::unique_ptr<Kernel>> kernels_;
};

InvariantFunction to_invariant_function(const HallElement& x);

std::shared_ptr<const BruteForceEngine> full_engine(const Quiver& q, long q0);
/// K2 -> C2 by reversing beta (arrow 1).
FourierTransform kronecker_to_cyclic(long q);
/// 1 -> 2 to 1 <- 2.
FourierTransform a2_reversal(long q);

/// All pairs (d1, d2) with d1, d2 <= bound componentwise.
std::vector<std::pair<DimVector, DimVector>> grade_pairs_up_to(const DimVector& bound);
/// Phi(f * g) = Phi(f) * Phi(g) on all basis pairs at the given grades.
VerificationReport check_homomorphism(const FourierTransform& phi, const std::vector<std::pair<DimVector, DimVector>>& pairs);
/// Transforming forward and back with the conjugate character returns +-f.
VerificationReport double_transform_check(const FourierTransform& phi, const DimVector& bound);

/// sum_{X in GL_n(F_q)} psi(tr X)
CycloSqrt gl_character_sum(int n, long q);
VerificationReport gl_character_check(int n, long q);

/// Phi([S_i]) = [S_i'], Phi([P1]) = -v^-1[P2'] + (v - v^-1)[S1'+S2'], Phi([nP1])([nP2']) = (-1)^n v^-n.
VerificationReport a2_image_check(long q, int max_n = 2);
/// [nP1] = v^{-n(n-1)}/[n]! [P1]^n in the A2 Hall algebra.
VerificationReport divided_power_check(int n, long q);
/// Evaluations of Phi(p_n^K2) at nS1[2] and nS2[2] and their product formulas.
VerificationReport fourier_xi_route_check(int n, long q);
/// Phi(p_n^K2) is primitive in the full Hall algebra of C2.
VerificationReport kronecker_image_primitive(int n, long q);

}  // namespace hall
