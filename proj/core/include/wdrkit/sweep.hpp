#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wdrkit/families.hpp"

namespace wdrkit {

enum class Law { kGammaG, kGammaQsk };

std::string_view to_string(Law law);
/// Accepts "prop2.1" / "prop2.4". Throws Error(kParse).
Law parse_law(std::string_view text);

struct IntRange {
  int lo = 0;
  int hi = -1;

  bool empty() const { return hi < lo; }
  long long size() const { return empty() ? 0 : static_cast<long long>(hi) - lo + 1; }
  bool contains(int v) const { return lo <= v && v <= hi; }
};

/// Parses "7", "3..12" or "3-12". Throws Error(kParse).
IntRange parse_range(std::string_view text);

struct SweepSpec {
  Law law = Law::kGammaQsk;
  IntRange q{3, 5};
  IntRange s{3, 20};
  IntRange k{1, 1000000};  // clipped to the valid interval per (q,s)
  IntRange g{3, 12};
  unsigned jobs = 1;
  long long budget = 10000;
};

struct SweepRow {
  // Γ_{q,s,k} rows carry q,s,k; Γ_g rows carry g only.
  int q = 0, s = 0, k = 0, g = 0;
  Condition condition = Condition::kNone;
  bool is_wdr = false;
  bool expected_wdr = false;
  bool agree = false;
  std::string label;
};

struct SweepResult {
  std::vector<SweepRow> rows;

  std::optional<std::size_t> first_disagreement() const;
};

/// Expands the spec into parameter tuples in lexicographic order (q, s, k) or
/// by g. Throws Error(kInvalidParameters) when a range is empty or the q or s
/// lower bound is below 3, and Error(kLimitExceeded) when the raw box has more
/// than `budget` tuples.
std::vector<SweepRow> sweep_tuples(const SweepSpec& spec);

SweepResult run_sweep(const SweepSpec& spec);

}  // namespace wdrkit
