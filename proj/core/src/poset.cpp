#include "upho/poset.hpp"

#include <map>
#include <sstream>

#include "json.hpp"

#include "upho/error.hpp"

namespace upho {

std::vector<std::uint64_t> ColoredPosetPrefix::layer_counts() const {
  std::vector<std::uint64_t> out;
  for (const auto& layer : layers) out.push_back(layer.size());
  return out;
}

std::size_t ColoredPosetPrefix::edge_count() const {
  std::size_t n = 0;
  for (const auto& e : edges) n += e.size();
  return n;
}

std::string ColoredPosetPrefix::element_name(std::size_t rank, ClassId c) const {
  return alphabet.format(layers.at(rank).at(c));
}

ColoredPosetPrefix build_poset_prefix(GradedMonoid& monoid, std::size_t max_rank) {
  monoid.extend_to(max_rank);
  ColoredPosetPrefix poset;
  poset.alphabet = monoid.presentation().alphabet;
  poset.max_rank = max_rank;
  const std::size_t m = monoid.alphabet_size();
  for (std::size_t k = 0; k <= max_rank; ++k) {
    poset.layers.push_back(monoid.representatives(k));
  }
  for (std::size_t k = 0; k < max_rank; ++k) {
    std::vector<PosetEdge> layer_edges;
    for (ClassId c = 0; c < poset.layers[k].size(); ++c) {
      for (Letter x = 0; x < m; ++x) {
        const ClassId d = monoid.child(k + 1, c, x);
        if (d != kZeroClass) layer_edges.push_back({c, d, x});
      }
    }
    poset.edges.push_back(std::move(layer_edges));
  }
  return poset;
}

ColoredPosetPrefix build_poset_prefix(const Presentation& p, std::size_t max_rank,
                                      std::uint64_t budget) {
  GradedMonoid monoid(p, budget);
  return build_poset_prefix(monoid, max_rank);
}

IntSeries rank_generating_prefix(const ColoredPosetPrefix& poset) {
  std::vector<BigInt> c;
  for (auto n : poset.layer_counts()) c.emplace_back(n);
  return IntSeries(std::move(c));
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string export_hasse(const ColoredPosetPrefix& poset, HasseFormat format) {
  if (format == HasseFormat::dot) {
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n";
    for (std::size_t k = 0; k < poset.layers.size(); ++k) {
      for (ClassId c = 0; c < poset.layers[k].size(); ++c) {
        out << "  " << quoted(poset.element_name(k, c)) << ";\n";
      }
    }
    for (std::size_t k = 0; k < poset.edges.size(); ++k) {
      for (const PosetEdge& e : poset.edges[k]) {
        out << "  " << quoted(poset.element_name(k, e.from)) << " -> "
            << quoted(poset.element_name(k + 1, e.to)) << " [color_label="
            << quoted(poset.alphabet.name(e.color)) << "];\n";
      }
    }
    out << "}\n";
    return out.str();
  }

  nlohmann::ordered_json doc;
  doc["max_rank"] = poset.max_rank;
  doc["layers"] = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < poset.layers.size(); ++k) {
    auto layer = nlohmann::ordered_json::array();
    for (ClassId c = 0; c < poset.layers[k].size(); ++c) {
      layer.push_back(poset.element_name(k, c));
    }
    doc["layers"].push_back(std::move(layer));
  }
  doc["edges"] = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < poset.edges.size(); ++k) {
    for (const PosetEdge& e : poset.edges[k]) {
      nlohmann::ordered_json edge;
      edge["from"] = poset.element_name(k, e.from);
      edge["to"] = poset.element_name(k + 1, e.to);
      edge["color"] = poset.alphabet.name(e.color);
      doc["edges"].push_back(std::move(edge));
    }
  }
  return doc.dump(2) + "\n";
}

RoundTripReport roundtrip_multiplication_check(const ColoredPosetPrefix& poset,
                                               const Presentation& p,
                                               std::size_t depth,
                                               std::uint64_t budget) {
  if (depth > poset.max_rank) {
    throw InvalidArgument("roundtrip depth " + std::to_string(depth) +
                          " exceeds the poset's max rank " +
                          std::to_string(poset.max_rank));
  }
  GradedMonoid monoid(p, budget);
  monoid.extend_to(depth);

  // (rank, from, color) -> to, read off the edge list only.
  std::vector<std::map<std::pair<ClassId, Letter>, ClassId>> step(poset.edges.size());
  for (std::size_t k = 0; k < poset.edges.size(); ++k) {
    for (const PosetEdge& e : poset.edges[k]) step[k][{e.from, e.color}] = e.to;
  }

  RoundTripReport report;
  report.depth = depth;
  for (std::size_t a = 0; a <= depth; ++a) {
    for (ClassId s = 0; s < poset.layers[a].size(); ++s) {
      const Word& sw = poset.layers[a][s];
      for (std::size_t b = 0; a + b <= depth; ++b) {
        for (ClassId t = 0; t < poset.layers[b].size(); ++t) {
          const Word& tw = poset.layers[b][t];
          ++report.pairs_checked;
          std::optional<Word> expected = monoid.canonical_form(sw + tw);

          std::optional<ClassId> at = s;
          for (std::size_t i = 0; i < tw.size() && at; ++i) {
            auto it = step[a + i].find({*at, tw[i]});
            if (it == step[a + i].end()) {
              at.reset();
            } else {
              at = it->second;
            }
          }
          std::optional<Word> got;
          if (at) got = poset.layers[a + b].at(*at);
          if (got != expected) {
            report.pass = false;
            report.first_discrepancy = RoundTripDiscrepancy{sw, tw, expected, got};
            return report;
          }
        }
      }
    }
  }
  return report;
}

}  // namespace upho
