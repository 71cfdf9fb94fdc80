#include "upho/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "upho/error.hpp"

namespace upho {

namespace {

constexpr std::string_view kHeader = "upho-presentation v1";

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string relation_text(const Presentation& p, const Relation& r) {
  if (r.is_zero()) return "zrel " + p.alphabet.format(r.lhs);
  return "rel " + p.alphabet.format(r.lhs) + " = " + p.alphabet.format(r.rhs);
}

bool letters_valid(const Word& w, std::size_t m) {
  for (Letter x : w) {
    if (x >= m) return false;
  }
  return true;
}

}  // namespace

std::string_view to_string(PresentationClass c) {
  switch (c) {
    case PresentationClass::free: return "free";
    case PresentationClass::homogeneous: return "homogeneous";
    case PresentationClass::head_changing: return "head_changing";
    case PresentationClass::free_zero: return "free_zero";
  }
  return "?";
}

std::optional<PresentationClass> presentation_class_from_string(
    std::string_view s) {
  if (s == "free") return PresentationClass::free;
  if (s == "homogeneous") return PresentationClass::homogeneous;
  if (s == "head_changing") return PresentationClass::head_changing;
  if (s == "free_zero") return PresentationClass::free_zero;
  return std::nullopt;
}

bool is_head_changing(const Relation& r) {
  if (r.is_zero()) return false;
  if (r.lhs.empty() || r.lhs.size() != r.rhs.size()) return false;
  if (r.lhs.front() == r.rhs.front()) return false;
  return std::equal(r.lhs.begin() + 1, r.lhs.end(), r.rhs.begin() + 1);
}

ValidationReport validate(const Presentation& p) {
  ValidationReport report;
  const std::size_t m = p.alphabet.size();
  bool any_equation = false;

  for (const Relation& r : p.relations) {
    const std::string text = letters_valid(r.lhs, m) && letters_valid(r.rhs, m)
                                 ? relation_text(p, r)
                                 : std::string("<relation>");
    if (!letters_valid(r.lhs, m) || !letters_valid(r.rhs, m)) {
      report.issues.push_back("relation uses a letter outside the alphabet");
      continue;
    }
    if (r.is_zero()) {
      if (!p.has_zero) {
        report.issues.push_back(text + ": zero relation without zero");
      }
      if (r.lhs.empty()) {
        report.issues.push_back("zero relation with empty word");
      }
      continue;
    }
    any_equation = true;
    if (r.lhs == r.rhs) report.issues.push_back(text + ": trivial relation");
    if (r.lhs.size() != r.rhs.size()) report.homogeneous = false;
    if (!is_head_changing(r)) report.head_changing = false;
  }
  if (p.has_zero) report.head_changing = false;
  report.free_zero = p.has_zero && !any_equation;
  if (m == 0 && !p.relations.empty()) {
    report.issues.push_back("relations over an empty alphabet");
  }

  if (p.declared_class) {
    switch (*p.declared_class) {
      case PresentationClass::free:
        if (!p.relations.empty() || p.has_zero) {
          report.issues.push_back("declared free but has relations or zero");
        }
        break;
      case PresentationClass::homogeneous:
        if (!report.homogeneous) {
          report.issues.push_back("declared homogeneous but a relation "
                                  "changes length");
        }
        break;
      case PresentationClass::head_changing:
        if (!report.head_changing) {
          report.issues.push_back(
              "declared head_changing but a relation is not of the form "
              "xW = yW");
        }
        break;
      case PresentationClass::free_zero:
        if (!report.free_zero) {
          report.issues.push_back(
              "declared free_zero but has equational relations or no zero");
        }
        break;
    }
  }
  return report;
}

void require_homogeneous(const Presentation& p) {
  for (const Relation& r : p.relations) {
    if (!r.is_zero() && r.lhs.size() != r.rhs.size()) {
      throw NonHomogeneousError(
          "presentation is not homogeneous (" + relation_text(p, r) +
          "); enumeration requires length-preserving relations");
    }
  }
}

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  bool seen_generators = false;
  bool seen_relation = false;
  bool seen_any = false;
  std::size_t line_no = 0;

  auto parse_word = [&](std::span<const std::string_view> toks) {
    if (toks.empty()) throw ParseError(line_no, "empty word");
    std::vector<Letter> letters;
    for (auto t : toks) {
      auto idx = p.alphabet.index_of(t);
      if (!idx) {
        throw ParseError(line_no, "unknown generator '" + std::string(t) + "'");
      }
      letters.push_back(*idx);
    }
    return Word(std::move(letters));
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto toks = split_ws(line);
    if (toks.empty()) continue;

    const bool first = !seen_any;
    seen_any = true;
    const std::string_view head = toks[0];

    if (toks.size() == 2 && head == "upho-presentation") {
      if (!first) throw ParseError(line_no, "header must be the first line");
      if (toks[1] != "v1") {
        throw ParseError(line_no,
                         "unsupported version '" + std::string(toks[1]) + "'");
      }
      continue;
    }
    if (head == "generators:") {
      if (seen_generators) throw ParseError(line_no, "duplicate generators line");
      std::vector<std::string> names(toks.begin() + 1, toks.end());
      if (names.empty()) throw ParseError(line_no, "no generators listed");
      try {
        p.alphabet = Alphabet(std::move(names));
      } catch (const InvalidArgument& e) {
        throw ParseError(line_no, e.what());
      }
      seen_generators = true;
      continue;
    }
    if (!seen_generators) {
      throw ParseError(line_no, "expected 'generators:' line");
    }
    if (head == "zero") {
      if (toks.size() != 1) throw ParseError(line_no, "unexpected tokens after 'zero'");
      if (p.has_zero) throw ParseError(line_no, "duplicate 'zero'");
      if (seen_relation) throw ParseError(line_no, "'zero' must precede relations");
      p.has_zero = true;
      continue;
    }
    if (head == "class:") {
      if (toks.size() != 2) throw ParseError(line_no, "expected 'class: NAME'");
      if (p.declared_class) throw ParseError(line_no, "duplicate class line");
      if (seen_relation) throw ParseError(line_no, "class must precede relations");
      p.declared_class = presentation_class_from_string(toks[1]);
      if (!p.declared_class) {
        throw ParseError(line_no, "unknown class '" + std::string(toks[1]) + "'");
      }
      if (*p.declared_class == PresentationClass::free_zero && !p.has_zero) {
        throw ParseError(line_no, "class free_zero requires 'zero'");
      }
      continue;
    }
    if (head == "rel") {
      std::size_t eq = 0;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (toks[i] == "=") {
          if (eq) throw ParseError(line_no, "more than one '='");
          eq = i;
        }
      }
      if (!eq) throw ParseError(line_no, "relation without '='");
      std::span<const std::string_view> all(toks);
      Relation r = Relation::equation(parse_word(all.subspan(1, eq - 1)),
                                      parse_word(all.subspan(eq + 1)));
      if (r.lhs == r.rhs) throw ParseError(line_no, "trivial relation");
      if (p.declared_class) {
        switch (*p.declared_class) {
          case PresentationClass::free:
            throw ParseError(line_no, "relation in a presentation declared free");
          case PresentationClass::free_zero:
            throw ParseError(line_no,
                             "equational relation in a presentation declared "
                             "free_zero");
          case PresentationClass::homogeneous:
            if (r.lhs.size() != r.rhs.size()) {
              throw ParseError(line_no, "heterogeneous relation under "
                                        "homogeneous declaration");
            }
            break;
          case PresentationClass::head_changing:
            if (r.lhs.size() != r.rhs.size()) {
              throw ParseError(line_no, "heterogeneous relation under "
                                        "head_changing declaration");
            }
            if (!is_head_changing(r)) {
              throw ParseError(line_no, "relation is not head-changing");
            }
            break;
        }
      }
      p.relations.push_back(std::move(r));
      seen_relation = true;
      continue;
    }
    if (head == "zrel") {
      if (!p.has_zero) {
        throw ParseError(line_no, "zero relation without 'zero' declaration");
      }
      std::span<const std::string_view> all(toks);
      p.relations.push_back(Relation::zero(parse_word(all.subspan(1))));
      seen_relation = true;
      continue;
    }
    throw ParseError(line_no, "unrecognized line '" + std::string(head) + "'");
  }

  if (!seen_generators) throw ParseError(line_no, "missing 'generators:' line");
  if (p.declared_class == PresentationClass::head_changing && p.has_zero) {
    throw ParseError(line_no, "head_changing presentations cannot have zero");
  }
  return p;
}

std::string serialize_presentation(const Presentation& p) {
  std::ostringstream out;
  out << kHeader << '\n';
  out << "generators:";
  for (const auto& name : p.alphabet.names()) out << ' ' << name;
  out << '\n';
  if (p.has_zero) out << "zero\n";
  if (p.declared_class) out << "class: " << to_string(*p.declared_class) << '\n';
  for (const Relation& r : p.relations) {
    if (!r.is_zero()) out << relation_text(p, r) << '\n';
  }
  for (const Relation& r : p.relations) {
    if (r.is_zero()) out << relation_text(p, r) << '\n';
  }
  return out.str();
}

Presentation read_presentation_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open presentation file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

Presentation free_monoid(std::vector<std::string> names) {
  Presentation p;
  p.alphabet = Alphabet(std::move(names));
  p.declared_class = PresentationClass::free;
  return p;
}

Presentation free_monoid(std::size_t generators, std::string_view prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= generators; ++i) {
    names.push_back(std::string(prefix) + std::to_string(i));
  }
  return free_monoid(std::move(names));
}

Presentation free_zero_monoid(std::size_t generators, std::string_view prefix) {
  Presentation p = free_monoid(generators, prefix);
  p.has_zero = true;
  p.declared_class = PresentationClass::free_zero;
  return p;
}

Presentation with_prefixed_generators(const Presentation& p,
                                      std::string_view prefix) {
  Presentation out = p;
  std::vector<std::string> names;
  for (const auto& n : p.alphabet.names()) names.push_back(std::string(prefix) + n);
  out.alphabet = Alphabet(std::move(names));
  return out;
}

}  // namespace upho
