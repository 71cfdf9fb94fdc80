#include "upho/convolution.hpp"

#include <algorithm>

#include "upho/error.hpp"

namespace upho {

void validate_spec(const ConvolutionSpec& spec) {
  require_homogeneous(spec.m1);
  if (spec.m1.has_zero) throw InvalidArgument("convolution: m1 must not have a zero");
  if (spec.m1.alphabet.empty()) throw InvalidArgument("convolution: m1 has no generators");
  for (const Relation& r : spec.m2.relations) {
    if (!r.is_zero()) {
      throw InvalidArgument("convolution: m2 must be a free 0-monoid (found an "
                            "equational relation)");
    }
  }
  if (spec.xmap.size() != spec.m2.alphabet.size()) {
    throw InvalidArgument("convolution: xmap must cover every m2 generator");
  }
  for (Letter x : spec.xmap) {
    if (x >= spec.m1.alphabet.size()) {
      throw InvalidArgument("convolution: xmap image is not an m1 generator");
    }
  }
  for (const auto& name : spec.m2.alphabet.names()) {
    if (spec.m1.alphabet.index_of(name)) {
      throw InvalidArgument("convolution: generator '" + name +
                            "' occurs in both m1 and m2");
    }
  }
}

ConvolutionSpec make_convolution_spec(Presentation m1, Presentation m2,
                                      const std::map<std::string, std::string>& xmap) {
  ConvolutionSpec spec;
  spec.xmap.assign(m2.alphabet.size(), 0);
  for (const auto& [from, to] : xmap) {
    auto y = m2.alphabet.index_of(from);
    if (!y) throw InvalidArgument("xmap: '" + from + "' is not an m2 generator");
    auto x = m1.alphabet.index_of(to);
    if (!x) throw InvalidArgument("xmap: image '" + to + "' is not an m1 generator");
    spec.xmap[*y] = *x;
  }
  spec.m1 = std::move(m1);
  spec.m2 = std::move(m2);
  validate_spec(spec);
  return spec;
}

Convolution convolve(const ConvolutionSpec& spec) {
  validate_spec(spec);
  const std::size_t m1 = spec.m1.alphabet.size();
  const std::size_t m2 = spec.m2.alphabet.size();
  auto lift = [&](const Word& y) {
    std::vector<Letter> out;
    for (Letter l : y) out.push_back(static_cast<Letter>(l + m1));
    return Word(std::move(out));
  };

  Convolution conv;
  conv.m1_size = m1;
  conv.xmap = spec.xmap;
  std::vector<std::string> names = spec.m1.alphabet.names();
  names.insert(names.end(), spec.m2.alphabet.names().begin(),
               spec.m2.alphabet.names().end());
  conv.presentation.alphabet = Alphabet(std::move(names));
  if (validate(spec.m1).head_changing) {
    conv.presentation.declared_class = PresentationClass::head_changing;
  } else {
    conv.presentation.declared_class = PresentationClass::homogeneous;
  }

  conv.presentation.relations = spec.m1.relations;
  for (const Relation& r : spec.m2.relations) {
    conv.m2_zero_words.push_back(r.lhs);
    Word lhs = lift(r.lhs);
    std::vector<Letter> rhs(lhs.begin(), lhs.end());
    rhs.front() = spec.xmap[r.lhs.front()];
    conv.presentation.relations.push_back(Relation::equation(lhs, Word(std::move(rhs))));
  }
  for (Letter y = 0; y < m2; ++y) {
    for (Letter x = 0; x < m1; ++x) {
      conv.presentation.relations.push_back(Relation::equation(
          Word{static_cast<Letter>(y + m1), x}, Word{spec.xmap[y], x}));
    }
  }
  return conv;
}

StandardWordView standard_word(const Convolution& conv, const Word& w) {
  const std::size_t n = w.size();
  for (Letter l : w) {
    if (l >= conv.presentation.alphabet.size()) {
      throw InvalidArgument("standard_word: letter outside the alphabet");
    }
  }
  // Trailing run of m2 letters.
  std::size_t run_start = n;
  while (run_start > 0 && !conv.is_m1_letter(w[run_start - 1])) --run_start;
  std::vector<Letter> run;
  for (std::size_t i = run_start; i < n; ++i) {
    run.push_back(static_cast<Letter>(w[i] - conv.m1_size));
  }
  // Rewriting at the rightmost start of a zero factor turns everything up to
  // it into m1 letters and leaves a zero-free tail.
  std::size_t keep_from = 0;
  for (std::size_t p = run.size(); p-- > 0;) {
    bool hit = false;
    for (const Word& z : conv.m2_zero_words) {
      if (p + z.size() <= run.size() &&
          std::equal(z.begin(), z.end(), run.begin() + static_cast<std::ptrdiff_t>(p))) {
        hit = true;
        break;
      }
    }
    if (hit) {
      keep_from = p + 1;
      break;
    }
  }
  const std::size_t y_start = run_start + keep_from;
  StandardWordView view;
  std::vector<Letter> xs, ys;
  for (std::size_t i = 0; i < y_start; ++i) {
    xs.push_back(conv.is_m1_letter(w[i]) ? w[i]
                                         : conv.xmap[w[i] - conv.m1_size]);
  }
  for (std::size_t i = y_start; i < n; ++i) {
    ys.push_back(static_cast<Letter>(w[i] - conv.m1_size));
  }
  view.x_part = Word(std::move(xs));
  view.y_part = Word(std::move(ys));
  return view;
}

ConvolutionCountReport verify_convolution_counts(const ConvolutionSpec& spec,
                                                 std::size_t n,
                                                 std::uint64_t budget) {
  const Convolution conv = convolve(spec);
  GradedMonoid whole(conv.presentation, budget);
  GradedMonoid left(spec.m1, budget);
  GradedMonoid right(spec.m2, budget);
  ConvolutionCountReport report;
  for (std::size_t k = 0; k <= n; ++k) {
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i <= k; ++i) sum += left.count(k - i) * right.count(i);
    report.expected.push_back(sum);
    report.enumerated.push_back(whole.count(k));
    if (report.pass && report.enumerated.back() != sum) {
      report.pass = false;
      report.first_mismatch = k;
    }
  }
  return report;
}

}  // namespace upho
