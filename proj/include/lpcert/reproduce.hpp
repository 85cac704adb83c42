#pragma once

// Built-in reference data for the 48-dimensional configuration and a
// checklist runner that recomputes every value from scratch.

#include "lpcert/ratpoly.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lpcert {

struct ReferenceTables {
  /// Published Gegenbauer coefficients g_{0,r}..g_{r,r} of the partial
  /// products PP_r, keyed by ("T1"|"T2", r) for r = 9, 10, 11, as "p/q".
  std::map<std::pair<std::string, int>, std::vector<std::string>> partial_products;
  std::int64_t cardinality = 0;
  std::map<Rational, std::int64_t> distribution;

  static ReferenceTables builtin();

  /// Test hook: perturbs one entry. Keys are "T1:9:0" (avoid set, r, index)
  /// for coefficients or "A:<t>" for distribution counts. Throws
  /// std::invalid_argument for unknown keys.
  void corrupt(const std::string& key);
};

struct ChecklistItem {
  std::string name;
  bool passed;
  std::string detail;
};

struct Checklist {
  std::vector<ChecklistItem> items;
  double seconds = 0;
  bool passed() const;
};

/// Runs coefficient reproduction, the distribution solve, moment and
/// quadrature checks and the bound sandwich for the built-in potential suite.
Checklist reproduce_reference(const ReferenceTables& tables, unsigned precision_digits);

/// Potential specifiers exercised by the sandwich stage.
std::vector<std::string> builtin_potential_suite();

}  // namespace lpcert
