#include "upho/congruence.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <cstring>
#include <istream>
#include <ostream>

#include "upho/error.hpp"

namespace upho {

std::uint64_t default_budget() {
  if (const char* env = std::getenv("UPHO_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultBudget;
}

MinUnionFind::MinUnionFind(std::size_t n) : parent_(n) {
  for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<std::uint32_t>(i);
}

std::size_t MinUnionFind::find(std::size_t x) {
  std::size_t root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) {
    std::size_t next = parent_[x];
    parent_[x] = static_cast<std::uint32_t>(root);
    x = next;
  }
  return root;
}

void MinUnionFind::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return;
  if (a < b) {
    parent_[b] = static_cast<std::uint32_t>(a);
  } else {
    parent_[a] = static_cast<std::uint32_t>(b);
  }
}

// ---------------------------------------------------------------------------
// GradedMonoid

GradedMonoid::GradedMonoid(Presentation p, std::uint64_t budget)
    : presentation_(std::move(p)), m_(presentation_.alphabet.size()),
      budget_(budget) {
  require_homogeneous(presentation_);
  if (budget_ > std::numeric_limits<std::uint32_t>::max() - 1) {
    budget_ = std::numeric_limits<std::uint32_t>::max() - 1;
  }
  Layer empty;
  empty.parent.push_back(kZeroClass);
  empty.last.push_back(0);
  layers_.push_back(std::move(empty));
}

void GradedMonoid::truncate(std::size_t length) {
  if (layers_.size() > length + 1) layers_.resize(length + 1);
}

void GradedMonoid::add_relation(Relation r) {
  const std::size_t len = r.lhs.size();
  if (len <= computed_length()) {
    throw InvalidArgument("add_relation: relation of length " +
                          std::to_string(len) +
                          " would change an already computed layer");
  }
  if (!r.is_zero() && r.lhs.size() != r.rhs.size()) {
    throw NonHomogeneousError("add_relation: relation changes length");
  }
  if (r.is_zero()) presentation_.has_zero = true;
  presentation_.relations.push_back(std::move(r));
}

void GradedMonoid::extend_to(std::size_t length) {
  while (computed_length() < length) compute_next_layer();
}

std::size_t GradedMonoid::project(std::size_t start, ClassId a, const Word& w,
                                  std::size_t sentinel) const {
  ClassId q = a;
  const std::size_t r = w.size();
  for (std::size_t i = 0; i + 1 < r; ++i) {
    q = layers_[start + 1 + i].child[static_cast<std::size_t>(q) * m_ + w[i]];
    if (q == kZeroClass) return sentinel;
  }
  return static_cast<std::size_t>(q) * m_ + w[r - 1];
}

void GradedMonoid::compute_next_layer() {
  const std::size_t k = layers_.size();
  const Layer& prev = layers_.back();
  const std::uint64_t candidates = static_cast<std::uint64_t>(prev.count()) * m_;
  if (candidates > budget_) {
    throw BudgetExceeded("length " + std::to_string(k) + " needs " +
                         std::to_string(candidates) +
                         " candidate words, over the budget of " +
                         std::to_string(budget_));
  }
  const std::size_t n = static_cast<std::size_t>(candidates);
  const std::size_t sentinel = n;
  MinUnionFind uf(n + 1);

  for (const Relation& rel : presentation_.relations) {
    const std::size_t r = rel.lhs.size();
    if (r == 0 || r > k) continue;
    const std::size_t start = k - r;
    const std::size_t prefixes = layers_[start].count();
    for (ClassId a = 0; a < prefixes; ++a) {
      const std::size_t u = project(start, a, rel.lhs, sentinel);
      const std::size_t v =
          rel.is_zero() ? sentinel : project(start, a, rel.rhs, sentinel);
      uf.unite(u, v);
    }
  }

  Layer layer;
  layer.child.assign(n, kZeroClass);
  const std::size_t zero_root = uf.find(sentinel);
  std::optional<std::size_t> first_zero;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = uf.find(i);
    if (root == zero_root) {
      if (!first_zero) first_zero = i;
      continue;
    }
    if (root == i) {
      layer.child[i] = static_cast<ClassId>(layer.parent.size());
      layer.parent.push_back(static_cast<ClassId>(i / m_));
      layer.last.push_back(static_cast<Letter>(i % m_));
    } else {
      layer.child[i] = layer.child[root];
    }
  }

  std::optional<Word> zero_rep;
  if (prev.zero_rep && m_ > 0) zero_rep = *prev.zero_rep + Word{0};
  layers_.push_back(std::move(layer));
  if (first_zero) {
    Word w = representative(k - 1, static_cast<ClassId>(*first_zero / m_)) +
             Word{static_cast<Letter>(*first_zero % m_)};
    if (!zero_rep || w < *zero_rep) zero_rep = std::move(w);
  }
  layers_.back().zero_rep = std::move(zero_rep);
}

std::uint64_t GradedMonoid::count(std::size_t k) {
  extend_to(k);
  return layers_[k].count();
}

std::vector<std::uint64_t> GradedMonoid::counts(std::size_t max_length) {
  std::vector<std::uint64_t> out;
  for (std::size_t k = 0; k <= max_length; ++k) out.push_back(count(k));
  return out;
}

ClassId GradedMonoid::child(std::size_t k, ClassId parent, Letter x) const {
  return layers_[k].child[static_cast<std::size_t>(parent) * m_ + x];
}

ClassId GradedMonoid::class_of(const Word& w) {
  extend_to(w.size());
  ClassId q = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] >= m_) throw InvalidArgument("class_of: letter outside alphabet");
    q = child(i + 1, q, w[i]);
    if (q == kZeroClass) return kZeroClass;
  }
  return q;
}

Word GradedMonoid::representative(std::size_t k, ClassId c) const {
  std::vector<Letter> letters(k);
  for (std::size_t j = k; j > 0; --j) {
    letters[j - 1] = layers_[j].last[c];
    c = layers_[j].parent[c];
  }
  return Word(std::move(letters));
}

std::vector<Word> GradedMonoid::representatives(std::size_t k) {
  extend_to(k);
  std::vector<Word> out;
  if (k == 0) {
    out.emplace_back();
    return out;
  }
  const std::vector<Word> prev = representatives(k - 1);
  out.reserve(layers_[k].count());
  for (ClassId c = 0; c < layers_[k].count(); ++c) {
    out.push_back(prev[layers_[k].parent[c]] + Word{layers_[k].last[c]});
  }
  return out;
}

std::optional<Word> GradedMonoid::zero_representative(std::size_t k) {
  extend_to(k);
  return layers_[k].zero_rep;
}

bool GradedMonoid::is_canonical(const Word& w) {
  const ClassId c = class_of(w);
  if (c == kZeroClass) return false;
  ClassId q = c;
  for (std::size_t j = w.size(); j > 0; --j) {
    if (layers_[j].last[q] != w[j - 1]) return false;
    q = layers_[j].parent[q];
  }
  return true;
}

std::optional<Word> GradedMonoid::canonical_form(const Word& w) {
  const ClassId c = class_of(w);
  if (c == kZeroClass) return std::nullopt;
  return representative(w.size(), c);
}

// ---------------------------------------------------------------------------
// LengthClasses

LengthClasses::LengthClasses(std::size_t length, std::size_t alphabet_size,
                             std::vector<ClassId> class_of_index,
                             std::vector<Word> reps,
                             std::optional<ClassId> zero_class)
    : length_(length), m_(alphabet_size), class_of_(std::move(class_of_index)),
      reps_(std::move(reps)), zero_class_(zero_class),
      nonzero_count_(reps_.size() - (zero_class_ ? 1 : 0)) {}

ClassId LengthClasses::class_of(const Word& w) const {
  if (w.size() != length_) {
    throw InvalidArgument("class_of: word of length " + std::to_string(w.size()) +
                          " in a stratum of length " + std::to_string(length_));
  }
  for (Letter x : w) {
    if (x >= m_) throw InvalidArgument("class_of: letter outside alphabet");
  }
  return class_of_[word_index(w, m_)];
}

namespace {

std::uint64_t stratum_size(const Presentation& p, std::size_t k,
                           std::uint64_t budget) {
  auto size = checked_power(p.alphabet.size(), k, budget);
  if (!size || *size > budget) {
    throw BudgetExceeded("|X|^k = " + std::to_string(p.alphabet.size()) + "^" +
                         std::to_string(k) + " exceeds the stratum budget of " +
                         std::to_string(budget));
  }
  return *size;
}

LengthClasses full_closure(const Presentation& p, std::size_t k,
                           std::uint64_t budget) {
  require_homogeneous(p);
  const std::size_t m = p.alphabet.size();
  const std::uint64_t total = stratum_size(p, k, budget);
  const std::size_t n = static_cast<std::size_t>(total);
  const std::size_t sentinel = n;
  MinUnionFind uf(n + 1);

  std::vector<std::uint64_t> pow(k + 1, 1);
  for (std::size_t i = 1; i <= k; ++i) pow[i] = pow[i - 1] * m;

  for (const Relation& rel : p.relations) {
    const std::size_t r = rel.lhs.size();
    if (r == 0 || r > k) continue;
    const std::uint64_t lhs = word_index(rel.lhs, m);
    const std::uint64_t rhs = rel.is_zero() ? 0 : word_index(rel.rhs, m);
    for (std::size_t pos = 0; pos + r <= k; ++pos) {
      const std::uint64_t tail = pow[k - pos - r];
      const std::uint64_t block = pow[k - pos];
      for (std::uint64_t prefix = 0; prefix < pow[pos]; ++prefix) {
        for (std::uint64_t suffix = 0; suffix < tail; ++suffix) {
          const std::uint64_t base = prefix * block + suffix;
          const std::size_t u = static_cast<std::size_t>(base + lhs * tail);
          const std::size_t v =
              rel.is_zero() ? sentinel
                            : static_cast<std::size_t>(base + rhs * tail);
          uf.unite(u, v);
        }
      }
    }
  }

  std::vector<ClassId> table(n);
  std::vector<Word> reps;
  const std::size_t zero_root = uf.find(sentinel);
  std::optional<std::size_t> first_zero;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = uf.find(i);
    if (root == zero_root) {
      if (!first_zero) first_zero = i;
      table[i] = kZeroClass;
    } else if (root == i) {
      table[i] = static_cast<ClassId>(reps.size());
      reps.push_back(word_from_index(i, k, m));
    } else {
      table[i] = table[root];
    }
  }
  std::optional<ClassId> zero_class;
  if (first_zero) {
    zero_class = static_cast<ClassId>(reps.size());
    reps.push_back(word_from_index(*first_zero, k, m));
    for (auto& c : table) {
      if (c == kZeroClass) c = *zero_class;
    }
  }
  return LengthClasses(k, m, std::move(table), std::move(reps), zero_class);
}

LengthClasses pruned_closure(const Presentation& p, std::size_t k,
                             std::uint64_t budget) {
  const std::size_t m = p.alphabet.size();
  const std::uint64_t total = stratum_size(p, k, budget);
  GradedMonoid monoid(p, budget);
  monoid.extend_to(k);
  const ClassId n = static_cast<ClassId>(monoid.count(k));
  std::optional<Word> zero_rep = monoid.zero_representative(k);
  std::optional<ClassId> zero_class;
  if (zero_rep) zero_class = n;
  const ClassId zero_id = zero_class.value_or(kZeroClass);

  std::vector<ClassId> table(static_cast<std::size_t>(total));
  // Depth-first over the word trie; `index` is the base-m prefix value.
  struct Frame {
    std::size_t depth;
    ClassId cls;
    std::uint64_t index;
  };
  std::vector<Frame> stack{{0, 0, 0}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.depth == k) {
      table[f.index] = f.cls == kZeroClass ? zero_id : f.cls;
      continue;
    }
    for (Letter x = 0; x < m; ++x) {
      const ClassId next =
          f.cls == kZeroClass ? kZeroClass : monoid.child(f.depth + 1, f.cls, x);
      stack.push_back({f.depth + 1, next, f.index * m + x});
    }
  }
  std::vector<Word> reps = monoid.representatives(k);
  if (zero_rep) reps.push_back(*zero_rep);
  return LengthClasses(k, m, std::move(table), std::move(reps), zero_class);
}

}  // namespace

LengthClasses length_classes(const Presentation& p, std::size_t k,
                             ClosureEngine engine, std::uint64_t budget) {
  return engine == ClosureEngine::full ? full_closure(p, k, budget)
                                       : pruned_closure(p, k, budget);
}

std::uint64_t count_nonzero(const Presentation& p, std::size_t k,
                            std::uint64_t budget) {
  GradedMonoid monoid(p, budget);
  return monoid.count(k);
}

Word canonical_rep(const LengthClasses& classes, const Word& w) {
  return classes.rep(classes.class_of(w));
}

// ---------------------------------------------------------------------------
// Left cancellativity

LcReport check_left_cancellative(GradedMonoid& monoid, std::size_t depth) {
  if (monoid.presentation().has_zero) {
    throw InvalidArgument(
        "check_left_cancellative: 0-monoids are not left-cancellative");
  }
  monoid.extend_to(depth);
  const std::size_t m = monoid.alphabet_size();
  LcReport report;
  report.depth_checked = depth;

  // image[x][c] = class of x * rep(c) at the current length.
  std::vector<std::vector<ClassId>> image(m, std::vector<ClassId>{0});
  for (std::size_t k = 0; k < depth; ++k) {
    const std::size_t here = monoid.count(k);
    const std::size_t next = monoid.count(k + 1);
    for (Letter x = 0; x < m; ++x) {
      std::vector<ClassId> shifted(here);
      for (ClassId c = 0; c < here; ++c) {
        shifted[c] = k == 0 ? monoid.child(1, 0, x)
                            : monoid.child(k + 1, image[x][monoid.parent(k, c)],
                                           monoid.last_letter(k, c));
      }
      image[x] = std::move(shifted);

      std::vector<ClassId> preimage(next, kZeroClass);
      for (ClassId c = 0; c < here; ++c) {
        const ClassId d = image[x][c];
        if (d == kZeroClass) continue;
        if (preimage[d] != kZeroClass) {
          report.pass = false;
          report.witness = LcWitness{x, monoid.representative(k, preimage[d]),
                                     monoid.representative(k, c)};
          report.depth_checked = k + 1;
          return report;
        }
        preimage[d] = c;
      }
    }
  }
  return report;
}

LcReport check_left_cancellative(const Presentation& p, std::size_t depth,
                                 std::uint64_t budget) {
  GradedMonoid monoid(p, budget);
  return check_left_cancellative(monoid, depth);
}

// ---------------------------------------------------------------------------
// Stratum cache

namespace {

constexpr std::string_view kStratumMagic = "UPHO-STRATUM v1\n";

void put_u32(std::ostream& out, std::uint32_t v) {
  std::array<char, 4> b{};
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b.data(), 4);
}

void put_u64(std::ostream& out, std::uint64_t v) {
  put_u32(out, static_cast<std::uint32_t>(v));
  put_u32(out, static_cast<std::uint32_t>(v >> 32));
}

std::uint32_t get_u32(std::istream& in) {
  std::array<unsigned char, 4> b{};
  in.read(reinterpret_cast<char*>(b.data()), 4);
  if (!in) throw InvalidArgument("read_stratum: truncated input");
  return b[0] | (b[1] << 8) | (b[2] << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

std::uint64_t get_u64(std::istream& in) {
  std::uint64_t lo = get_u32(in);
  std::uint64_t hi = get_u32(in);
  return lo | (hi << 32);
}

}  // namespace

void write_stratum(std::ostream& out, const LengthClasses& classes) {
  out.write(kStratumMagic.data(), static_cast<std::streamsize>(kStratumMagic.size()));
  put_u32(out, static_cast<std::uint32_t>(classes.alphabet_size()));
  put_u32(out, static_cast<std::uint32_t>(classes.length()));
  put_u32(out, static_cast<std::uint32_t>(classes.nonzero_count()));
  put_u32(out, classes.zero_class().value_or(kZeroClass));
  put_u64(out, classes.table().size());
  for (ClassId c : classes.table()) put_u32(out, c);
}

LengthClasses read_stratum(std::istream& in) {
  std::string magic(kStratumMagic.size(), '\0');
  in.read(magic.data(), static_cast<std::streamsize>(magic.size()));
  if (!in || magic != kStratumMagic) {
    throw InvalidArgument("read_stratum: missing UPHO-STRATUM v1 header");
  }
  const std::size_t m = get_u32(in);
  const std::size_t k = get_u32(in);
  const std::uint32_t nonzero = get_u32(in);
  const std::uint32_t zero = get_u32(in);
  const std::uint64_t words = get_u64(in);
  auto expected = checked_power(m, k, std::numeric_limits<std::uint32_t>::max());
  if (!expected || *expected != words) {
    throw InvalidArgument("read_stratum: word count does not match |X|^k");
  }
  const std::size_t classes = nonzero + (zero == kZeroClass ? 0 : 1);
  std::vector<ClassId> table(static_cast<std::size_t>(words));
  std::vector<Word> reps(classes);
  std::vector<bool> seen(classes, false);
  for (std::uint64_t i = 0; i < words; ++i) {
    const ClassId c = get_u32(in);
    if (c >= classes) throw InvalidArgument("read_stratum: class id out of range");
    table[i] = c;
    if (!seen[c]) {
      seen[c] = true;
      reps[c] = word_from_index(i, k, m);
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw InvalidArgument("read_stratum: empty class");
  }
  std::optional<ClassId> zero_class;
  if (zero != kZeroClass) zero_class = zero;
  return LengthClasses(k, m, std::move(table), std::move(reps), zero_class);
}

}  // namespace upho
