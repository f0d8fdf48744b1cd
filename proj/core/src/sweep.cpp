#include "wdrkit/sweep.hpp"

#include <algorithm>
#include <charconv>

#include "wdrkit/error.hpp"
#include "wdrkit/parallel.hpp"
#include "wdrkit/scheme.hpp"

namespace wdrkit {
namespace {

int parse_bound(std::string_view token, std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::kParse, "bad range '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::string_view to_string(Law law) { return law == Law::kGammaG ? "prop2.1" : "prop2.4"; }

Law parse_law(std::string_view text) {
  if (text == "prop2.1") return Law::kGammaG;
  if (text == "prop2.4") return Law::kGammaQsk;
  throw Error(ErrorCode::kParse, "unknown law '" + std::string(text) + "' (expected prop2.1 or prop2.4)");
}

IntRange parse_range(std::string_view text) {
  auto dots = text.find("..");
  if (dots != std::string_view::npos) {
    return {parse_bound(text.substr(0, dots), text), parse_bound(text.substr(dots + 2), text)};
  }
  // a leading '-' would be a sign, so only look for a separator after it
  auto dash = text.find('-', 1);
  if (dash != std::string_view::npos) {
    return {parse_bound(text.substr(0, dash), text), parse_bound(text.substr(dash + 1), text)};
  }
  const int v = parse_bound(text, text);
  return {v, v};
}

std::optional<std::size_t> SweepResult::first_disagreement() const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].agree) return i;
  }
  return std::nullopt;
}

std::vector<SweepRow> sweep_tuples(const SweepSpec& spec) {
  std::vector<SweepRow> rows;
  if (spec.law == Law::kGammaG) {
    if (spec.g.empty()) throw Error(ErrorCode::kInvalidParameters, "empty g range");
    if (spec.g.lo < 3) throw Error(ErrorCode::kInvalidParameters, "g range must start at 3 or above");
    if (spec.g.size() > spec.budget) {
      throw Error(ErrorCode::kLimitExceeded, "sweep of " + std::to_string(spec.g.size()) + " tuples exceeds budget " +
                                                 std::to_string(spec.budget));
    }
    for (int g = spec.g.lo; g <= spec.g.hi; ++g) {
      SweepRow row;
      row.g = g;
      row.expected_wdr = g != 4;
      row.label = "gamma-g:g=" + std::to_string(g);
      rows.push_back(row);
    }
    return rows;
  }
  if (spec.q.empty() || spec.s.empty() || spec.k.empty()) throw Error(ErrorCode::kInvalidParameters, "empty range");
  if (spec.q.lo < 3 || spec.s.lo < 3) {
    throw Error(ErrorCode::kInvalidParameters, "q and s ranges must start at 3 or above");
  }
  // k never exceeds q, so the raw box is bounded by q-values x s-values x q_max.
  const long long k_span = std::min<long long>(spec.k.size(), spec.q.hi);
  const long long box = spec.q.size() * spec.s.size() * k_span;
  if (box > spec.budget) {
    throw Error(ErrorCode::kLimitExceeded,
                "sweep of " + std::to_string(box) + " tuples exceeds budget " + std::to_string(spec.budget));
  }
  for (int q = spec.q.lo; q <= spec.q.hi; ++q) {
    for (int s = spec.s.lo; s <= spec.s.hi; ++s) {
      const int k_lo = std::max({spec.k.lo, 1, q - s + 2});
      const int k_hi = std::min(spec.k.hi, q);
      for (int k = k_lo; k <= k_hi; ++k) {
        if (!GammaQskParams::valid(q, s, k)) continue;
        const auto params = GammaQskParams::make(q, s, k);
        SweepRow row;
        row.q = q;
        row.s = s;
        row.k = k;
        row.condition = classify_c123(params);
        row.expected_wdr = row.condition != Condition::kNone;
        row.label = params.spec();
        rows.push_back(row);
      }
    }
  }
  return rows;
}

SweepResult run_sweep(const SweepSpec& spec) {
  SweepResult result{sweep_tuples(spec)};
  parallel_for(result.rows.size(), spec.jobs, [&](std::size_t idx) {
    SweepRow& row = result.rows[idx];
    const Digraph d = spec.law == Law::kGammaG ? gamma_g(row.g) : gamma_qsk(GammaQskParams::make(row.q, row.s, row.k));
    row.is_wdr = analyze(d).is_wdr;
    row.agree = row.is_wdr == row.expected_wdr;
  });
  return result;
}

}  // namespace wdrkit
