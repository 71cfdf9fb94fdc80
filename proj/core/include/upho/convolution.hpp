#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "upho/congruence.hpp"
#include "upho/presentation.hpp"

namespace upho {

// m1: homogeneous, no zero. m2: only zero relations. xmap[i] is the m1
// generator assigned to m2's generator i.
struct ConvolutionSpec {
  Presentation m1;
  Presentation m2;
  std::vector<Letter> xmap;
};

// Builds a spec from generator names; an empty map sends every m2 generator
// to m1's least generator. Throws InvalidArgument on any violated invariant.
ConvolutionSpec make_convolution_spec(Presentation m1, Presentation m2,
                                      const std::map<std::string, std::string>& xmap = {});
void validate_spec(const ConvolutionSpec& spec);

// Output of convolve: the presentation plus what standard_word needs.
struct Convolution {
  Presentation presentation;
  std::size_t m1_size = 0;
  std::vector<Letter> xmap;        // indexed by m2 letter
  std::vector<Word> m2_zero_words;  // in m2 letters

  bool is_m1_letter(Letter x) const noexcept { return x < m1_size; }
};

// Alphabet: m1's generators then m2's. Relations: m1's relations; y_i Y =
// x(y_i) Y for each zero relation y_i Y of m2; y_i x_j = x(y_i) x_j.
Convolution convolve(const ConvolutionSpec& spec);

struct StandardWordView {
  Word x_part;  // m1 letters
  Word y_part;  // m2 letters
  std::size_t depth() const noexcept { return y_part.size(); }
};

// Separate form X Y of w (a word over the convolution's alphabet) with the
// shortest possible Y.
StandardWordView standard_word(const Convolution& conv, const Word& w);

struct ConvolutionCountReport {
  bool pass = true;
  std::vector<std::uint64_t> enumerated;
  std::vector<std::uint64_t> expected;  // sum_i |W_{k-i}^{m1}| |W_i^{m2}|
  std::optional<std::size_t> first_mismatch;
};

ConvolutionCountReport verify_convolution_counts(const ConvolutionSpec& spec,
                                                 std::size_t n,
                                                 std::uint64_t budget = default_budget());

}  // namespace upho
