#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "foldcat/structure.hpp"

namespace foldcat {

struct CertOptions {
  int trials = 1000;
  std::uint64_t seed = 42;
  SampleBounds bounds;
  int max_recorded_failures = 8;
};

struct CertFailure {
  std::string check;                  // "interchange(1,2)", "monotone(2)", ...
  std::vector<std::string> objects;   // sampled tuple, in input format
  std::string detail;                 // the sides of the violated relation
  std::string replay;                 // single-shot command reproducing it
};

struct CertReport {
  std::string structure;
  int trials = 0;
  std::uint64_t seed = 0;
  long long checks = 0;
  long long failure_count = 0;
  std::vector<CertFailure> failures;  // first few only

  bool passed() const { return failure_count == 0; }
};

/// Sample-based certification of the structure axioms: unit laws, strict
/// associativity, monotonicity of every product, interchange existence for
/// every i < j, internal and external unit conditions as object equalities,
/// the edges of both associativity diagrams, the hexagon edges for every
/// i < j < k, and the derived one-product-to-another inequalities. In a
/// posetal carrier a diagram commutes exactly when every edge exists, which
/// is what these checks decide. Deterministic per (seed, trial index).
CertReport certify_structure(const Structure& s, const CertOptions& options = {});

std::string format_report(const CertReport& report);

}  // namespace foldcat
