#pragma once

// Module categories of small quivers over finite fields: isoclass enumeration,
// automorphism orders, Hall numbers, Hom dimensions, socles, decompositions.
//
// Two engines share one interface:
//   NilpotentCyclicEngine  nilpotent representations of C_r, keyed by multisegments;
//   BruteForceEngine       any small quiver, keyed by G_V-orbits of E_V computed
//                          by breadth-first closure under generators of G_V.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hall/coeffring.hpp"
#include "hall/gf.hpp"
#include "hall/gfmatrix.hpp"
#include "hall/partitions.hpp"

namespace hall {

using DimVector = std::vector<int>;

/// An enumeration would exceed its configured search-space bound.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string dim_to_string(const DimVector& d);
/// Accepts `1,1` and `(1,1)`.
DimVector parse_dimvector(std::string_view text);
DimVector dim_add(const DimVector& a, const DimVector& b);
DimVector dim_sub(const DimVector& a, const DimVector& b);
bool dim_leq(const DimVector& a, const DimVector& b);
int dim_total(const DimVector& d);
/// All e with 0 <= e <= d componentwise, in lexicographic order.
std::vector<DimVector> subgrades(const DimVector& d);

class Quiver {
 public:
  Quiver(std::string name, int vertices, std::vector<std::pair<int, int>> arrows);

  /// C_r with arrows i -> i+1 mod r; C_1 is the Jordan quiver.
  static Quiver cyclic(int r);
  static Quiver kronecker();
  /// 0 -> 1
  static Quiver a2();
  /// Reverses the listed arrows, keeping arrow order.
  static Quiver reversed(const Quiver& q, const std::vector<int>& arrows, std::string name);

  const std::string& name() const { return name_; }
  int vertex_count() const { return n_; }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }
  int tail(int a) const { return arrows_[static_cast<size_t>(a)].first; }
  int head(int a) const { return arrows_[static_cast<size_t>(a)].second; }
  friend bool operator==(const Quiver& a, const Quiver& b) { return a.n_ == b.n_ && a.arrows_ == b.arrows_; }

 private:
  std::string name_;
  int n_;
  std::vector<std::pair<int, int>> arrows_;
};

/// <x,y> = sum x_i y_i - sum_arrows x_tail y_head
int euler_form(const Quiver& q, const DimVector& x, const DimVector& y);

/// One matrix per arrow, of shape dim(head) x dim(tail), acting on columns.
struct RepPoint {
  std::shared_ptr<const Quiver> quiver;
  std::shared_ptr<const Field> field;
  DimVector dims;
  std::vector<Mat> maps;

  static RepPoint zero(std::shared_ptr<const Quiver> q, std::shared_ptr<const Field> f, const DimVector& d);
  void validate() const;
};

RepPoint direct_sum(const RepPoint& x, const RepPoint& y);
/// True when the composite around every cycle is nilpotent (all paths of length
/// > total dimension vanish).
bool is_nilpotent(const RepPoint& x);

/// Calls fn(sub, quotient) for every subrepresentation of x (every dimension).
/// When only_dims is given, restricts to subrepresentations of that dimension.
void for_each_subrepresentation(const RepPoint& x, const std::function<void(const RepPoint&, const RepPoint&)>& fn,
                                const std::optional<DimVector>& only_dims = std::nullopt);

/// Hom space dimension by solving the intertwining equations.
int hom_dim_linear(const RepPoint& m, const RepPoint& n);
/// Basis of Hom(m, n) as tuples of per-vertex matrices.
std::vector<std::vector<Mat>> hom_basis(const RepPoint& m, const RepPoint& n);
/// Dimension vector of the joint kernel of all arrows leaving each vertex.
DimVector socle_dims(const RepPoint& x);

struct IsoClass {
  DimVector grade;
  int index = 0;

  friend bool operator==(const IsoClass& a, const IsoClass& b) { return a.index == b.index && a.grade == b.grade; }
  friend bool operator!=(const IsoClass& a, const IsoClass& b) { return !(a == b); }
  friend bool operator<(const IsoClass& a, const IsoClass& b) {
    return a.grade != b.grade ? a.grade < b.grade : a.index < b.index;
  }
};

/// F^L_{M,N} for fixed L keyed by (M, N) = (quotient class, submodule class).
using HallTable = std::map<std::pair<IsoClass, IsoClass>, long>;
using GradeTables = std::map<IsoClass, HallTable>;

class Engine;

/// Persistent Hall tables, one record per (engine, grade).
class HallTableStore {
 public:
  virtual ~HallTableStore() = default;
  /// Tables for every class of grade d, or nullopt if absent or unusable.
  virtual std::optional<GradeTables> load(const Engine& e, const DimVector& d) = 0;
  virtual void save(const Engine& e, const DimVector& d, const GradeTables& tables) = 0;
};

class Engine {
 public:
  Engine(std::shared_ptr<const Quiver> quiver, long q);
  virtual ~Engine() = default;
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  const Quiver& quiver() const { return *quiver_; }
  const std::shared_ptr<const Quiver>& quiver_ptr() const { return quiver_; }
  const Field& field() const { return *field_; }
  const std::shared_ptr<const Field>& field_ptr() const { return field_; }
  long q() const { return field_->q(); }

  /// Short engine identifier used in renderings and cache keys.
  virtual std::string id() const = 0;
  virtual std::vector<IsoClass> classes(const DimVector& d) const = 0;
  virtual RepPoint realize(const IsoClass& c) const = 0;
  virtual IsoClass classify(const RepPoint& x) const = 0;
  virtual Integer aut_order(const IsoClass& c) const = 0;
  virtual std::string render(const IsoClass& c) const = 0;
  /// Inverse of render.
  virtual IsoClass parse_class(std::string_view text) const = 0;
  /// Multiplicity vector of simples in the socle.
  virtual DimVector socle(const IsoClass& c) const;
  virtual int hom_dim(const IsoClass& m, const IsoClass& n) const;
  virtual std::vector<IsoClass> decompose(const IsoClass& c) const;

  IsoClass zero_class() const;
  int euler(const DimVector& x, const DimVector& y) const { return euler_form(*quiver_, x, y); }
  bool is_indecomposable(const IsoClass& c) const;
  int end_dim(const IsoClass& c) const { return hom_dim(c, c); }

  /// All Hall numbers with L fixed (memoized).
  std::shared_ptr<const HallTable> hall_table(const IsoClass& L) const;
  long hall_number(const IsoClass& L, const IsoClass& M, const IsoClass& N) const;
  /// sum_L F^L_{M,N} [L] as (L, count) pairs with nonzero counts, sorted.
  std::vector<std::pair<IsoClass, long>> product_support(const IsoClass& M, const IsoClass& N) const;

  /// With a store attached, Hall tables are filled a whole grade at a time:
  /// loaded if the store has them, otherwise computed and saved.
  void set_store(std::shared_ptr<HallTableStore> store) { store_ = std::move(store); }
  /// Store picked up by engines constructed afterwards.
  static void set_default_store(std::shared_ptr<HallTableStore> store);

 protected:
  void check_grade(const DimVector& d) const;

 private:
  std::shared_ptr<const Quiver> quiver_;
  std::shared_ptr<const Field> field_;
  mutable std::mutex hall_mu_;
  mutable std::map<IsoClass, std::shared_ptr<const HallTable>> hall_cache_;
  mutable std::map<std::pair<IsoClass, IsoClass>, std::vector<std::pair<IsoClass, long>>> product_cache_;
  mutable std::map<IsoClass, std::vector<IsoClass>> decompose_cache_;
  mutable std::map<DimVector, bool> grades_filled_;
  std::shared_ptr<HallTableStore> store_;

  std::shared_ptr<const HallTable> compute_hall_table(const IsoClass& L) const;
  void fill_grade(const DimVector& d) const;
};

// ---------------------------------------------------------------------------
// Nilpotent C_r.

/// Segment S_i[l]: top i (0-based), length l.
struct Segment {
  int top;
  int length;
  friend bool operator<(const Segment& a, const Segment& b) {
    return a.top != b.top ? a.top < b.top : a.length < b.length;
  }
  friend bool operator==(const Segment& a, const Segment& b) { return a.top == b.top && a.length == b.length; }
};

using Multisegment = std::map<Segment, int>;

/// `S1[2]+S2[1]`, `2*S1[3]`, `0` (vertices are printed 1-based).
std::string multisegment_to_string(const Multisegment& m);
Multisegment parse_multisegment(std::string_view text);
DimVector multisegment_dims(const Multisegment& m, int r);
/// I_lambda^{(r)} = sum_i S_i[r lambda_i] placed at top `top`, or I_lambda when r = 1.
Multisegment partition_multisegment(const Partition& lambda, int r, int top = 0);

/// dim Hom(S_i[l], S_j[m]) = #{1 <= t <= min(l,m) : t = j+m-i mod r}
int segment_hom_dim(const Segment& a, const Segment& b, int r);

class NilpotentCyclicEngine : public Engine {
 public:
  NilpotentCyclicEngine(int r, long q);

  int r() const { return r_; }
  std::string id() const override { return "C" + std::to_string(r_) + "nil"; }
  std::vector<IsoClass> classes(const DimVector& d) const override;
  RepPoint realize(const IsoClass& c) const override;
  IsoClass classify(const RepPoint& x) const override;
  Integer aut_order(const IsoClass& c) const override;
  std::string render(const IsoClass& c) const override;
  IsoClass parse_class(std::string_view text) const override;
  DimVector socle(const IsoClass& c) const override;
  int hom_dim(const IsoClass& m, const IsoClass& n) const override;
  std::vector<IsoClass> decompose(const IsoClass& c) const override;

  const Multisegment& multisegment(const IsoClass& c) const;
  IsoClass class_of(const Multisegment& m) const;
  /// Multisegment of a nilpotent point via rank invariants of path composites.
  Multisegment multisegment_of(const RepPoint& x) const;

 private:
  const std::vector<Multisegment>& grade_list(const DimVector& d) const;

  int r_;
  mutable std::mutex mu_;
  mutable std::map<DimVector, std::unique_ptr<std::vector<Multisegment>>> lists_;
};

// ---------------------------------------------------------------------------
// Brute force over E_V.

class BruteForceEngine : public Engine {
 public:
  /// nilpotent_only restricts classes to nilpotent representations (the
  /// orbit partition still covers all of E_V).
  BruteForceEngine(std::shared_ptr<const Quiver> quiver, long q, bool nilpotent_only = false);

  /// Cap on |E_V| for a full orbit partition.
  static constexpr uint64_t kMaxPoints = uint64_t{1} << 22;

  std::string id() const override { return quiver().name() + (nilpotent_only_ ? "nil" : ""); }
  std::vector<IsoClass> classes(const DimVector& d) const override;
  RepPoint realize(const IsoClass& c) const override;
  IsoClass classify(const RepPoint& x) const override;
  Integer aut_order(const IsoClass& c) const override;
  std::string render(const IsoClass& c) const override;
  IsoClass parse_class(std::string_view text) const override;

  uint64_t point_count(const DimVector& d) const;
  uint64_t encode(const RepPoint& x) const;
  RepPoint decode(const DimVector& d, uint64_t code) const;
  /// Orbit index (over all of E_V) of every point code; built once per grade.
  const std::vector<int32_t>& orbit_index(const DimVector& d) const;
  /// IsoClass of the orbit with the given orbit index, if it is a class of this engine.
  std::optional<IsoClass> class_of_orbit(const DimVector& d, int32_t orbit) const;
  uint64_t orbit_size(const IsoClass& c) const;
  bool nilpotent_only() const { return nilpotent_only_; }

 private:
  struct GradeData {
    std::vector<int32_t> orbit_of;
    std::vector<uint64_t> orbit_min;
    std::vector<uint64_t> orbit_size;
    std::vector<int32_t> class_of_orbit;  // -1 if filtered out
    std::vector<int32_t> orbit_of_class;
  };
  const GradeData& grade_data(const DimVector& d) const;

  bool nilpotent_only_;
  mutable std::mutex mu_;
  mutable std::map<DimVector, std::unique_ptr<GradeData>> grades_;
};

/// |G_V| = prod_i |GL_{d_i}(F_q)|.
Integer group_order(const DimVector& d, long q);
/// Size of the G_V-orbit of x, by breadth-first search from x (no caps on E_V,
/// only on the orbit itself).
uint64_t orbit_size_of(const RepPoint& x, uint64_t max_orbit = uint64_t{1} << 24);
/// Explicit orbit-membership test: searches G_V for g with g.x = y, by
/// breadth-first search over the orbit of x.
bool same_orbit(const RepPoint& x, const RepPoint& y, uint64_t max_orbit = uint64_t{1} << 24);

/// Hall polynomial F^L_{M,N}(q) for nilpotent C_r by sampling prime powers
/// and interpolating with degree bound dim(M) dim(N).
PolyQ hall_polynomial(int r, const Multisegment& L, const Multisegment& M, const Multisegment& N,
                      uint64_t max_subspace_tuples = 200000);

// ---------------------------------------------------------------------------
// Kronecker quiver helpers (arrows 0: alpha, 1: beta, both 1 -> 2).

/// Every indecomposable summand has dimension vector (k,k).
bool kronecker_is_regular(const Engine& e, const IsoClass& c);
std::vector<IsoClass> kronecker_regular_classes(const Engine& e, int n);
/// I_lambda(0) = (I_n, J_lambda)
IsoClass kronecker_i0(const Engine& e, const Partition& lambda);
/// I_lambda(inf) = (J_lambda, I_n)
IsoClass kronecker_iinf(const Engine& e, const Partition& lambda);
/// Nilpotent Jordan matrix J_lambda (blocks of sizes lambda_i, ones on the superdiagonal).
Mat jordan_matrix(const Partition& lambda);

/// A homogeneous tube of K_2 seen through its regular simple E_x.
struct Tube {
  IsoClass simple;   // E_x at (d,d)
  int degree = 0;    // d = deg x
  std::string label; // "0", "inf", "1", or the characteristic polynomial of alpha^-1 beta
};

/// All tubes whose regular simple has degree <= max_degree, ordered by
/// (degree, simple). A regular indecomposable at (d,d) is a regular simple iff
/// it has no proper nonzero regular submodule with square dimension vector.
std::vector<Tube> kronecker_tubes(const Engine& e, int max_degree);
/// I_lambda(x) for |lambda| * deg(x) within reach: classes indexed by partitions,
/// found by extension search inside the tube.
std::map<Partition, IsoClass> kronecker_tube_classes(const Engine& e, const Tube& t, int m);
/// Membership of c in add T_x.
bool kronecker_in_tube(const Engine& e, const Tube& t, const IsoClass& c);

}  // namespace hall
