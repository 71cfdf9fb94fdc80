#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "upho/presentation.hpp"
#include "upho/word.hpp"

namespace upho {

using ClassId = std::uint32_t;
inline constexpr ClassId kZeroClass = std::numeric_limits<ClassId>::max();

inline constexpr std::uint64_t kDefaultBudget = 50'000'000;

// kDefaultBudget, or the value of UPHO_BUDGET when set to a positive integer.
std::uint64_t default_budget();

// Union-find whose root is always the smallest index of its set. Since word
// indices follow the k-lex order, roots are the minimal representatives.
class MinUnionFind {
 public:
  explicit MinUnionFind(std::size_t n);

  std::size_t find(std::size_t x);
  void unite(std::size_t a, std::size_t b);
  std::size_t size() const noexcept { return parent_.size(); }

 private:
  std::vector<std::uint32_t> parent_;
};

// Incremental, length-stratified word problem solver for homogeneous
// presentations.
//
// Layer k is computed from layer k-1 alone: the candidates are the words
// rep(C)x for every nonzero class C of length k-1 and letter x. Every minimal
// representative has a minimal prefix, so this candidate set meets every
// class. An elementary transition that does not touch the last letter acts
// inside the prefix and is already accounted for; the remaining transitions
// are a*lhs <-> a*rhs with `a` ranging over canonical words of length k-|lhs|.
//
// Class ids at each length are dense and ordered like their minimal
// representatives under the k-lexicographic order.
class GradedMonoid {
 public:
  explicit GradedMonoid(Presentation p,
                        std::uint64_t budget = default_budget());

  const Presentation& presentation() const noexcept { return presentation_; }
  std::size_t alphabet_size() const noexcept { return m_; }
  std::uint64_t budget() const noexcept { return budget_; }

  // Highest length computed so far.
  std::size_t computed_length() const noexcept { return layers_.size() - 1; }
  void extend_to(std::size_t length);

  // Drops every layer above `length`.
  void truncate(std::size_t length);
  // Only allowed for relations longer than computed_length(): shorter layers
  // are never revisited.
  void add_relation(Relation r);

  // |W_k|: number of nonzero elements of length k.
  std::uint64_t count(std::size_t k);
  std::vector<std::uint64_t> counts(std::size_t max_length);

  // Class of the word, or kZeroClass.
  ClassId class_of(const Word& w);
  ClassId child(std::size_t k, ClassId parent, Letter x) const;
  ClassId parent(std::size_t k, ClassId c) const { return layers_[k].parent[c]; }
  Letter last_letter(std::size_t k, ClassId c) const { return layers_[k].last[c]; }

  Word representative(std::size_t k, ClassId c) const;
  std::vector<Word> representatives(std::size_t k);
  // k-lex least word of length k equal to zero, if any.
  std::optional<Word> zero_representative(std::size_t k);

  // Nonzero and equal to its own minimal representative.
  bool is_canonical(const Word& w);
  std::optional<Word> canonical_form(const Word& w);

 private:
  struct Layer {
    std::vector<ClassId> parent;
    std::vector<Letter> last;
    // child[p * m + x] = class of rep(p) x at this length, or kZeroClass.
    std::vector<ClassId> child;
    std::optional<Word> zero_rep;

    std::size_t count() const noexcept { return parent.size(); }
  };

  void compute_next_layer();
  std::size_t project(std::size_t start, ClassId a, const Word& w,
                      std::size_t sentinel) const;

  Presentation presentation_;
  std::size_t m_;
  std::uint64_t budget_;
  std::vector<Layer> layers_;
};

// Partition of F_k(X) into congruence classes.
class LengthClasses {
 public:
  LengthClasses(std::size_t length, std::size_t alphabet_size,
                std::vector<ClassId> class_of_index, std::vector<Word> reps,
                std::optional<ClassId> zero_class);

  std::size_t length() const noexcept { return length_; }
  std::size_t alphabet_size() const noexcept { return m_; }
  std::uint64_t nonzero_count() const noexcept { return nonzero_count_; }
  std::size_t class_count() const noexcept { return reps_.size(); }
  std::optional<ClassId> zero_class() const noexcept { return zero_class_; }

  ClassId class_of(const Word& w) const;
  ClassId class_of_index(std::uint64_t index) const { return class_of_[index]; }
  const std::vector<ClassId>& table() const noexcept { return class_of_; }
  const Word& rep(ClassId c) const { return reps_.at(c); }
  bool is_zero(ClassId c) const noexcept { return zero_class_ && *zero_class_ == c; }

  friend bool operator==(const LengthClasses&, const LengthClasses&) = default;

 private:
  std::size_t length_;
  std::size_t m_;
  std::vector<ClassId> class_of_;
  std::vector<Word> reps_;
  std::optional<ClassId> zero_class_;
  std::uint64_t nonzero_count_;
};

enum class ClosureEngine { pruned, full };

// Nonzero classes get ids 0..n-1 in order of their minimal member; the zero
// class, when present, is id n. Both engines produce identical tables.
LengthClasses length_classes(const Presentation& p, std::size_t k,
                             ClosureEngine engine = ClosureEngine::pruned,
                             std::uint64_t budget = default_budget());

std::uint64_t count_nonzero(const Presentation& p, std::size_t k,
                            std::uint64_t budget = default_budget());

Word canonical_rep(const LengthClasses& classes, const Word& w);

struct LcWitness {
  Letter generator;
  Word first;
  Word second;
};

struct LcReport {
  bool pass = true;
  std::optional<LcWitness> witness;
  std::size_t depth_checked = 0;
};

// Injectivity of left multiplication by each generator from length k to k+1
// for every k < depth. A bounded certificate only.
LcReport check_left_cancellative(const Presentation& p, std::size_t depth,
                                 std::uint64_t budget = default_budget());
LcReport check_left_cancellative(GradedMonoid& monoid, std::size_t depth);

// Flat binary stratum cache: "UPHO-STRATUM v1\n", then little-endian u32
// alphabet size, length, nonzero count, zero class (0xffffffff if none), u64
// word count, and one u32 class id per word in base-|X| order.
void write_stratum(std::ostream& out, const LengthClasses& classes);
LengthClasses read_stratum(std::istream& in);

}  // namespace upho
