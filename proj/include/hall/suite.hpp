#pragma once

// The acceptance suite: numbered criteria made of independent cells.

#include <functional>
#include <string>
#include <vector>

#include "hall/report.hpp"

namespace hall {

/// a_lambda(q) from the closed formula against |GL_n| / |orbit of J_lambda|
/// (breadth-first orbit search) and against the structured engine.
VerificationReport aut_order_check(int n, long q);

/// Associativity, coassociativity and adjointness on one engine.
/// engine is one of c1, c2nil, k2.
VerificationReport axioms_check(const std::string& engine, long q, int bound);

struct SuiteCell {
  std::string key;
  std::function<VerificationReport()> run;
};

struct Criterion {
  int id = 0;
  std::string title;
  std::vector<SuiteCell> cells;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = true;
  bool internal_error = false;
  double elapsed_ms = 0;  // sum over cells
  std::vector<VerificationReport> reports;
};

std::vector<Criterion> acceptance_suite();

/// Runs every cell with up to `jobs` threads; results keep suite order.
/// An exception inside a cell becomes a failed report flagged as internal.
std::vector<CriterionResult> run_suite(const std::vector<Criterion>& suite, int jobs);

}  // namespace hall
