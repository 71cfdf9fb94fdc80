#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "upho/congruence.hpp"
#include "upho/presentation.hpp"
#include "upho/series.hpp"

namespace upho {

// Covering relation from an element of rank k to one of rank k + 1.
struct PosetEdge {
  ClassId from;
  ClassId to;
  Letter color;

  friend bool operator==(const PosetEdge&, const PosetEdge&) = default;
};

// Ranks 0..max_rank of the colored poset attached to a homogeneous monoid.
// Elements of rank k are the nonzero classes of length k, in k-lex order of
// their minimal representatives.
struct ColoredPosetPrefix {
  Alphabet alphabet;
  std::size_t max_rank = 0;
  std::vector<std::vector<Word>> layers;
  // edges[k]: covers from rank k to rank k + 1, sorted by (from, color).
  std::vector<std::vector<PosetEdge>> edges;

  std::vector<std::uint64_t> layer_counts() const;
  std::size_t edge_count() const;
  std::string element_name(std::size_t rank, ClassId c) const;
};

ColoredPosetPrefix build_poset_prefix(const Presentation& p, std::size_t max_rank,
                                      std::uint64_t budget = default_budget());
ColoredPosetPrefix build_poset_prefix(GradedMonoid& monoid, std::size_t max_rank);

IntSeries rank_generating_prefix(const ColoredPosetPrefix& poset);

enum class HasseFormat { dot, json };

// Elements in (rank, k-lex) order, edges by (rank, from, color).
std::string export_hasse(const ColoredPosetPrefix& poset, HasseFormat format);

struct RoundTripDiscrepancy {
  Word s;
  Word t;
  std::optional<Word> expected;  // nullopt: zero / no element
  std::optional<Word> got;
};

struct RoundTripReport {
  bool pass = true;
  std::size_t depth = 0;
  std::uint64_t pairs_checked = 0;
  std::optional<RoundTripDiscrepancy> first_discrepancy;
};

// For all elements s, t with rank(s) + rank(t) <= depth, compares the product
// computed by the engine with the element reached from s by following the
// colors of t's representative along the poset's edges.
RoundTripReport roundtrip_multiplication_check(const ColoredPosetPrefix& poset,
                                               const Presentation& p,
                                               std::size_t depth,
                                               std::uint64_t budget = default_budget());

}  // namespace upho
