#include "upho/word.hpp"

#include <algorithm>
#include <sstream>

#include "upho/error.hpp"

namespace upho {

std::strong_ordering klex_compare(const Word& w1, const Word& w2) {
  if (w1.size() != w2.size()) {
    throw InvalidArgument("klex_compare: words of lengths " +
                          std::to_string(w1.size()) + " and " +
                          std::to_string(w2.size()));
  }
  return w1 <=> w2;
}

bool contains_factor(const Word& w, const Word& factor) {
  if (factor.size() > w.size()) return false;
  return std::search(w.begin(), w.end(), factor.begin(), factor.end()) !=
         w.end();
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
  };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(s.front())) return false;
  return std::all_of(s.begin() + 1, s.end(),
                     [&](char c) { return alpha(c) || digit(c); });
}

Alphabet::Alphabet(std::vector<std::string> letters)
    : letters_(std::move(letters)) {
  for (Letter i = 0; i < letters_.size(); ++i) {
    if (!is_identifier(letters_[i])) {
      throw InvalidArgument("invalid generator identifier '" + letters_[i] +
                            "'");
    }
    if (!index_.emplace(letters_[i], i).second) {
      throw InvalidArgument("duplicate generator '" + letters_[i] + "'");
    }
  }
}

std::optional<Letter> Alphabet::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string Alphabet::format(const Word& w) const {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += name(w[i]);
  }
  return out;
}

Word Alphabet::parse_word(std::string_view text) const {
  std::vector<Letter> out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "e" && !index_of("e")) continue;
    auto x = index_of(token);
    if (!x) throw InvalidArgument("unknown generator '" + token + "'");
    out.push_back(*x);
  }
  return Word(std::move(out));
}

std::uint64_t word_index(const Word& w, std::size_t alphabet_size) {
  std::uint64_t idx = 0;
  for (Letter x : w) idx = idx * alphabet_size + x;
  return idx;
}

Word word_from_index(std::uint64_t index, std::size_t length,
                     std::size_t alphabet_size) {
  std::vector<Letter> letters(length);
  for (std::size_t i = length; i-- > 0;) {
    letters[i] = static_cast<Letter>(index % alphabet_size);
    index /= alphabet_size;
  }
  return Word(std::move(letters));
}

std::optional<std::uint64_t> checked_power(std::uint64_t m, std::size_t k,
                                           std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (m != 0 && r > cap / m) return std::nullopt;
    r *= m;
  }
  return r;
}

}  // namespace upho
