#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "upho/word.hpp"

namespace upho {

enum class RelationKind { equational, zero };

// lhs = rhs, or lhs = 0 for zero relations (rhs unused).
struct Relation {
  RelationKind kind = RelationKind::equational;
  Word lhs;
  Word rhs;

  static Relation equation(Word lhs, Word rhs) {
    return {RelationKind::equational, std::move(lhs), std::move(rhs)};
  }
  static Relation zero(Word lhs) {
    return {RelationKind::zero, std::move(lhs), {}};
  }

  bool is_zero() const noexcept { return kind == RelationKind::zero; }

  friend bool operator==(const Relation&, const Relation&) = default;
};

enum class PresentationClass { free, homogeneous, head_changing, free_zero };

std::string_view to_string(PresentationClass c);
std::optional<PresentationClass> presentation_class_from_string(
    std::string_view s);

// <X | R>, optionally with an absorbing zero. Generator order is the order of
// the alphabet and is part of the data: every greedy construction depends on
// it.
struct Presentation {
  Alphabet alphabet;
  bool has_zero = false;
  std::vector<Relation> relations;
  std::optional<PresentationClass> declared_class;

  std::size_t generator_count() const noexcept { return alphabet.size(); }

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

// Syntactic classification. Never throws.
struct ValidationReport {
  bool homogeneous = true;
  bool head_changing = true;
  bool free_zero = false;
  std::vector<std::string> issues;

  bool ok() const noexcept { return issues.empty(); }
};

ValidationReport validate(const Presentation& p);

// xW = yW with single letters x != y and a shared tail W.
bool is_head_changing(const Relation& r);

// Throws NonHomogeneousError unless every equational relation is
// length-preserving; every enumeration entry point calls this.
void require_homogeneous(const Presentation& p);

// Line-oriented v1 text format. Throws ParseError with the offending line.
Presentation parse_presentation(std::string_view text);
std::string serialize_presentation(const Presentation& p);

Presentation read_presentation_file(const std::string& path);

// Builders used throughout the pipelines.
Presentation free_monoid(std::vector<std::string> names);
Presentation free_monoid(std::size_t generators, std::string_view prefix = "x");
Presentation free_zero_monoid(std::size_t generators,
                              std::string_view prefix = "x");

// Copy of `p` whose generator identifiers all carry `prefix`.
Presentation with_prefixed_generators(const Presentation& p,
                                      std::string_view prefix);

}  // namespace upho
