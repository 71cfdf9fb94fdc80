#include "upho/greedy.hpp"

#include <algorithm>

#include "json.hpp"

#include "upho/error.hpp"
#include "upho/series.hpp"

namespace upho {

std::string_view to_string(LchFailure f) {
  switch (f) {
    case LchFailure::count_too_small: return "count_too_small";
    case LchFailure::not_weakly_increasing: return "not_weakly_increasing";
    case LchFailure::merge_anomaly: return "merge_anomaly";
  }
  return "?";
}

namespace {

void check_sequence(const std::vector<std::uint64_t>& b, std::size_t depth,
                    std::string_view what) {
  if (depth < 1) throw InvalidArgument(std::string(what) + ": depth must be at least 1");
  if (b.size() < depth + 1) {
    throw InvalidArgument(std::string(what) + ": need " + std::to_string(depth + 1) +
                          " coefficients for depth " + std::to_string(depth) +
                          ", got " + std::to_string(b.size()));
  }
  if (b[0] != 1) throw InvalidArgument(std::string(what) + ": constant term must be 1");
  if (b[1] < 1) throw InvalidArgument(std::string(what) + ": first coefficient must be positive");
}

}  // namespace

GreedyZeroResult greedy_zero_series(const std::vector<std::uint64_t>& b,
                                    std::size_t depth, std::string_view prefix,
                                    std::uint64_t budget) {
  check_sequence(b, depth, "greedy_zero_series");
  GradedMonoid monoid(free_zero_monoid(b[1], prefix), budget);
  GreedyZeroResult result;
  result.steps.push_back({1, b[1], {}, b[1]});

  for (std::size_t k = 2; k <= depth; ++k) {
    const std::uint64_t measured = monoid.count(k);
    if (measured < b[k]) {
      result.success = false;
      result.failure_k = k;
      result.steps.push_back({k, measured, {}, measured});
      break;
    }
    GreedyStep step{k, measured, {}, 0};
    const auto reps = monoid.representatives(k);
    for (std::uint64_t c = b[k]; c < measured; ++c) {
      step.added.push_back(Relation::zero(reps[static_cast<std::size_t>(c)]));
    }
    monoid.truncate(k - 1);
    for (const Relation& r : step.added) monoid.add_relation(r);
    step.count = monoid.count(k);
    if (step.count != b[k]) {
      throw Anomaly("greedy_zero_series: recount " + std::to_string(step.count) +
                    " != target " + std::to_string(b[k]) + " at length " +
                    std::to_string(k));
    }
    result.steps.push_back(std::move(step));
  }
  result.final_presentation = monoid.presentation();
  result.final_presentation.declared_class = PresentationClass::free_zero;
  return result;
}

GreedyLchResult greedy_lch_series(const std::vector<std::uint64_t>& c,
                                  std::size_t depth, std::string_view prefix,
                                  std::uint64_t budget) {
  check_sequence(c, depth, "greedy_lch_series");
  Presentation start = free_monoid(c[1], prefix);
  start.declared_class = PresentationClass::head_changing;
  GradedMonoid monoid(start, budget);
  GreedyLchResult result;
  result.steps.push_back({1, c[1], {}, c[1]});

  auto fail = [&](std::size_t k, LchFailure why, GreedyStep step) {
    result.success = false;
    result.failure_k = k;
    result.failure_reason = why;
    result.steps.push_back(std::move(step));
  };

  for (std::size_t k = 2; k <= depth; ++k) {
    const std::uint64_t measured = monoid.count(k);
    if (c[k - 1] > c[k]) {
      fail(k, LchFailure::not_weakly_increasing, {k, measured, {}, measured});
      break;
    }
    if (measured < c[k]) {
      fail(k, LchFailure::count_too_small, {k, measured, {}, measured});
      break;
    }
    GreedyStep step{k, measured, {}, 0};
    bool head_anomaly = false;
    for (std::uint64_t id = c[k]; id < measured; ++id) {
      const Word w = monoid.representative(k, static_cast<ClassId>(id));
      if (w.front() == 0) {
        head_anomaly = true;
        break;
      }
      std::vector<Letter> lower(w.begin(), w.end());
      --lower.front();
      step.added.push_back(Relation::equation(w, Word(std::move(lower))));
    }
    if (head_anomaly) {
      fail(k, LchFailure::merge_anomaly, std::move(step));
      break;
    }
    monoid.truncate(k - 1);
    for (const Relation& r : step.added) monoid.add_relation(r);
    step.count = monoid.count(k);
    if (step.count != c[k]) {
      fail(k, LchFailure::merge_anomaly, std::move(step));
      break;
    }
    result.steps.push_back(std::move(step));
  }
  result.final_presentation = monoid.presentation();
  return result;
}

namespace {

std::vector<std::uint64_t> one_based(const Word& w) {
  std::vector<std::uint64_t> a;
  for (Letter x : w) a.push_back(static_cast<std::uint64_t>(x) + 1);
  return a;
}

void require_free_zero(const Presentation& zp, std::string_view what) {
  for (const Relation& r : zp.relations) {
    if (!r.is_zero()) {
      throw InvalidArgument(std::string(what) + ": expected a free 0-monoid");
    }
  }
}

}  // namespace

SplitCheck split_bk_check(const Presentation& zp, std::size_t k, std::size_t s,
                          std::uint64_t budget) {
  require_free_zero(zp, "split_bk_check");
  if (s < 1 || s > k) throw InvalidArgument("split_bk_check: need 1 <= s <= k");
  GradedMonoid monoid(zp, budget);
  const auto counts = monoid.counts(k);
  if (counts[k] == 0) {
    throw InvalidArgument("split_bk_check: no nonzero word of length " + std::to_string(k));
  }
  SplitCheck out;
  out.largest = monoid.representative(k, static_cast<ClassId>(counts[k] - 1));
  const auto a = one_based(out.largest);
  out.lhs = counts[k];
  for (std::size_t i = 1; i < s; ++i) out.rhs += (a[i - 1] - 1) * counts[k - i];
  out.rhs += a[s - 1] * counts[k - s];
  out.holds = s == k ? out.lhs == out.rhs : out.lhs <= out.rhs;
  return out;
}

std::vector<std::uint64_t> factor_scan_counts(const Presentation& zp,
                                              std::size_t max_length,
                                              std::uint64_t budget) {
  require_free_zero(zp, "factor_scan_counts");
  const std::size_t m = zp.alphabet.size();
  std::vector<std::uint64_t> counts(max_length + 1, 0);
  std::uint64_t visited = 0;
  std::vector<Letter> word;
  // Extending a zero-free word only creates zero factors that end at the
  // new last letter.
  auto ends_with_zero = [&]() {
    for (const Relation& r : zp.relations) {
      const std::size_t len = r.lhs.size();
      if (len <= word.size() &&
          std::equal(r.lhs.begin(), r.lhs.end(), word.end() - static_cast<std::ptrdiff_t>(len))) {
        return true;
      }
    }
    return false;
  };
  std::vector<Letter> next_letter{0};
  counts[0] = 1;
  while (!next_letter.empty()) {
    if (word.size() == max_length || next_letter.back() == m) {
      next_letter.pop_back();
      if (!word.empty()) word.pop_back();
      continue;
    }
    word.push_back(next_letter.back()++);
    if (++visited > budget) throw BudgetExceeded("factor_scan_counts: budget exceeded");
    if (ends_with_zero()) {
      word.pop_back();
      continue;
    }
    ++counts[word.size()];
    next_letter.push_back(0);
  }
  return counts;
}

NextCount count_next_from_current(const Presentation& zp, std::size_t k,
                                  std::uint64_t budget) {
  if (k < 1) throw InvalidArgument("count_next_from_current: k must be at least 1");
  const auto counts = factor_scan_counts(zp, k + 1, budget);
  if (counts[k] == 0) {
    throw InvalidArgument("count_next_from_current: no nonzero word of length " +
                          std::to_string(k));
  }
  GradedMonoid monoid(zp, budget);
  monoid.extend_to(k);
  const auto a = one_based(monoid.representative(k, static_cast<ClassId>(monoid.count(k) - 1)));
  NextCount out;
  out.count = counts[k + 1];
  std::uint64_t running = 0;  // sum_{i<s} (a_i - 1) b_{k+1-i}
  for (std::size_t s = 1; s <= k; ++s) {
    if (running + a[s - 1] * counts[k + 1 - s] == out.count) {
      out.s_witness = s;
      return out;
    }
    running += (a[s - 1] - 1) * counts[k + 1 - s];
  }
  throw Anomaly("count_next_from_current: no s in [1, " + std::to_string(k) +
                "] reproduces |W_" + std::to_string(k + 1) + "| = " +
                std::to_string(out.count));
}

bool is_certified_log_concave_pass(const std::vector<std::uint64_t>& b,
                                   std::size_t depth, std::uint64_t budget) {
  std::vector<BigInt> big(b.begin(), b.end());
  if (!is_log_concave(big)) {
    throw InvalidArgument("is_certified_log_concave_pass: sequence is not log-concave");
  }
  return greedy_zero_series(b, depth, "x", budget).success;
}

Presentation treeify(const Presentation& p, std::size_t depth, std::uint64_t budget) {
  if (p.has_zero) throw InvalidArgument("treeify: presentation must not have a zero");
  GradedMonoid monoid(p, budget);
  const LcReport lc = check_left_cancellative(monoid, depth);
  if (!lc.pass) {
    throw InvalidArgument("treeify: presentation fails the left-cancellativity check");
  }
  Presentation out;
  out.alphabet = p.alphabet;
  out.has_zero = true;
  out.declared_class = PresentationClass::free_zero;
  const std::size_t m = p.alphabet.size();
  for (std::size_t k = 1; k <= depth; ++k) {
    const std::uint64_t prev = monoid.count(k - 1);
    for (ClassId q = 0; q < prev; ++q) {
      for (Letter x = 0; x < m; ++x) {
        const ClassId d = monoid.child(k, q, x);
        if (d != kZeroClass && monoid.parent(k, d) == q && monoid.last_letter(k, d) == x) {
          continue;
        }
        const Word w = monoid.representative(k - 1, q) + Word{x};
        if (monoid.is_canonical(w.subword(1, k - 1))) {
          out.relations.push_back(Relation::zero(w));
        }
      }
    }
  }
  GradedMonoid tree(out, budget);
  for (std::size_t k = 0; k <= depth; ++k) {
    if (tree.count(k) != monoid.count(k)) {
      throw Anomaly("treeify: layer " + std::to_string(k) + " has " +
                    std::to_string(tree.count(k)) + " elements, expected " +
                    std::to_string(monoid.count(k)));
    }
  }
  return out;
}

namespace {

nlohmann::ordered_json steps_json(const Presentation& p,
                                  const std::vector<GreedyStep>& steps, bool zero) {
  auto arr = nlohmann::ordered_json::array();
  for (const GreedyStep& s : steps) {
    nlohmann::ordered_json j;
    j["k"] = s.k;
    j["measured"] = s.measured;
    auto added = nlohmann::ordered_json::array();
    for (const Relation& r : s.added) {
      added.push_back(zero ? p.alphabet.format(r.lhs)
                           : p.alphabet.format(r.lhs) + " = " + p.alphabet.format(r.rhs));
    }
    j[zero ? "killed" : "relations"] = std::move(added);
    j["count"] = s.count;
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace

std::string greedy_zero_json(const GreedyZeroResult& r) {
  nlohmann::ordered_json j;
  j["verdict"] = r.success ? "success" : "failure";
  j["failure_k"] = r.failure_k ? nlohmann::ordered_json(*r.failure_k) : nullptr;
  j["steps"] = steps_json(r.final_presentation, r.steps, true);
  j["presentation"] = serialize_presentation(r.final_presentation);
  return j.dump(2) + "\n";
}

std::string greedy_lch_json(const GreedyLchResult& r) {
  nlohmann::ordered_json j;
  j["verdict"] = r.success ? "success" : "failure";
  j["failure_k"] = r.failure_k ? nlohmann::ordered_json(*r.failure_k) : nullptr;
  j["failure_reason"] = r.failure_reason
                            ? nlohmann::ordered_json(std::string(to_string(*r.failure_reason)))
                            : nullptr;
  j["steps"] = steps_json(r.final_presentation, r.steps, false);
  j["presentation"] = serialize_presentation(r.final_presentation);
  return j.dump(2) + "\n";
}

}  // namespace upho
