#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "upho/congruence.hpp"
#include "upho/presentation.hpp"

namespace upho {

// One greedy step at target length k: `measured` is |W_k| of the previous
// monoid, `added` the relations appended, `count` the recount afterwards.
struct GreedyStep {
  std::size_t k = 0;
  std::uint64_t measured = 0;
  std::vector<Relation> added;
  std::uint64_t count = 0;
};

struct GreedyZeroResult {
  bool success = true;
  std::vector<GreedyStep> steps;
  std::optional<std::size_t> failure_k;
  Presentation final_presentation;
};

enum class LchFailure { count_too_small, not_weakly_increasing, merge_anomaly };
std::string_view to_string(LchFailure f);

struct GreedyLchResult {
  bool success = true;
  std::vector<GreedyStep> steps;
  std::optional<std::size_t> failure_k;
  std::optional<LchFailure> failure_reason;
  Presentation final_presentation;
};

// Start from the free 0-monoid on b_1 letters; at each length k <= depth kill
// the |W_k| - b_k largest nonzero words. `b` needs depth + 1 terms.
GreedyZeroResult greedy_zero_series(const std::vector<std::uint64_t>& b,
                                    std::size_t depth,
                                    std::string_view prefix = "x",
                                    std::uint64_t budget = default_budget());

// Start from the free monoid on c_1 letters; at each length k <= depth add
// x_i W = x_{i-1} W for the |W_k| - c_k largest elements x_i W.
GreedyLchResult greedy_lch_series(const std::vector<std::uint64_t>& c,
                                  std::size_t depth,
                                  std::string_view prefix = "x",
                                  std::uint64_t budget = default_budget());

struct SplitCheck {
  Word largest;  // maximal nonzero word of length k
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  bool holds = false;
};

// lhs = |W_k|, rhs = sum_{i<s} (a_i - 1)|W_{k-i}| + a_s |W_{k-s}| with a_i the
// 1-based letters of the largest nonzero word. Holds means lhs <= rhs, and
// lhs == rhs when s == k.
SplitCheck split_bk_check(const Presentation& zp, std::size_t k, std::size_t s,
                          std::uint64_t budget = default_budget());

struct NextCount {
  std::uint64_t count = 0;
  std::size_t s_witness = 0;
};

// |W_{k+1}| by a direct factor scan, with the smallest s in [1, k] for which
// sum_{i<s} (a_i - 1)|W_{k+1-i}| + a_s |W_{k+1-s}| equals it. Throws Anomaly
// when no s matches.
NextCount count_next_from_current(const Presentation& zp, std::size_t k,
                                  std::uint64_t budget = default_budget());

// Nonzero word counts of a free 0-monoid by scanning for forbidden factors.
std::vector<std::uint64_t> factor_scan_counts(const Presentation& zp,
                                              std::size_t max_length,
                                              std::uint64_t budget = default_budget());

// Throws InvalidArgument unless b is log-concave.
bool is_certified_log_concave_pass(const std::vector<std::uint64_t>& b,
                                   std::size_t depth,
                                   std::uint64_t budget = default_budget());

// Free 0-monoid whose nonzero words are the minimal representatives of p up to
// length depth: its zero relations are the minimal non-canonical words.
Presentation treeify(const Presentation& p, std::size_t depth,
                     std::uint64_t budget = default_budget());

std::string greedy_zero_json(const GreedyZeroResult& r);
std::string greedy_lch_json(const GreedyLchResult& r);

}  // namespace upho
