#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace upho {

using Letter = std::uint32_t;

// Finite sequence of letter indices. The empty word is the identity.
class Word {
 public:
  using value_type = Letter;
  using const_iterator = std::vector<Letter>::const_iterator;

  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  const_iterator begin() const noexcept { return letters_.begin(); }
  const_iterator end() const noexcept { return letters_.end(); }
  std::span<const Letter> letters() const noexcept { return letters_; }

  void push_back(Letter x) { letters_.push_back(x); }

  Word subword(std::size_t pos, std::size_t count) const {
    return Word(std::vector<Letter>(letters_.begin() + pos,
                                    letters_.begin() + pos + count));
  }

  friend Word operator+(const Word& a, const Word& b) {
    std::vector<Letter> out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.letters_.begin(), a.letters_.end());
    out.insert(out.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(out));
  }

  // Lexicographic; coincides with the k-lexicographic order on equal lengths.
  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

// k-lexicographic comparison; throws InvalidArgument on length mismatch.
std::strong_ordering klex_compare(const Word& w1, const Word& w2);

// Does `w` contain `factor` as a consecutive subword?
bool contains_factor(const Word& w, const Word& factor);

// Ordered set of generator identifiers. Position defines the total order.
class Alphabet {
 public:
  Alphabet() = default;
  // Throws InvalidArgument on duplicate or malformed identifiers.
  explicit Alphabet(std::vector<std::string> letters);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const std::string& name(Letter x) const { return letters_.at(x); }
  const std::vector<std::string>& names() const noexcept { return letters_; }
  std::optional<Letter> index_of(std::string_view name) const;

  // Whitespace-separated identifiers; "e" for the empty word.
  std::string format(const Word& w) const;
  // Inverse of format. Throws InvalidArgument on unknown names.
  Word parse_word(std::string_view text) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.letters_ == b.letters_;
  }

 private:
  std::vector<std::string> letters_;
  std::unordered_map<std::string, Letter> index_;
};

bool is_identifier(std::string_view s);

// Base-m index of a word with the first letter most significant, so that
// index order equals k-lexicographic order.
std::uint64_t word_index(const Word& w, std::size_t alphabet_size);
Word word_from_index(std::uint64_t index, std::size_t length,
                     std::size_t alphabet_size);

// m^k, or nullopt on overflow past `cap`.
std::optional<std::uint64_t> checked_power(std::uint64_t m, std::size_t k,
                                           std::uint64_t cap);

}  // namespace upho
