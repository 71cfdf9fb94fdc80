// upho: command-line front end for the enumeration and construction pipelines.
//
// Exit codes: 0 positive verdict, 1 negative verdict, 2 usage or input error,
// 3 internal anomaly.

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "upho/congruence.hpp"
#include "upho/convolution.hpp"
#include "upho/error.hpp"
#include "upho/greedy.hpp"
#include "upho/poset.hpp"
#include "upho/presentation.hpp"
#include "upho/series.hpp"
#include "upho/tpbuild.hpp"

namespace {

using namespace upho;
using json = nlohmann::ordered_json;

constexpr int kPositive = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kAnomaly = 3;

struct Options {
  std::vector<std::string> presentations;
  std::optional<std::size_t> max_len;
  std::optional<std::size_t> depth;
  std::string coeffs;
  std::string num = "1";
  std::string den;
  std::string format = "text";
  std::string out;
  std::optional<std::uint64_t> budget;
  std::string xmap;
  std::size_t order = 3;
  std::size_t window = 0;
  std::string certificate;
};

std::uint64_t budget_of(const Options& o) { return o.budget.value_or(default_budget()); }

Presentation presentation_arg(const Options& o, std::size_t i = 0) {
  if (o.presentations.size() <= i) throw InvalidArgument("missing -p/--presentation");
  return read_presentation_file(o.presentations[i]);
}

std::size_t require(const std::optional<std::size_t>& v, const char* flag) {
  if (!v) throw InvalidArgument(std::string("missing ") + flag);
  return *v;
}

std::vector<std::uint64_t> natural_list(const std::string& csv) {
  std::vector<std::uint64_t> out;
  for (const BigInt& v : parse_integer_list(csv)) {
    if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) {
      throw InvalidArgument("coefficient out of range: " + v.str());
    }
    out.push_back(static_cast<std::uint64_t>(v));
  }
  return out;
}

IntPolynomial polynomial_arg(const std::string& csv, const char* flag) {
  if (csv.empty()) throw InvalidArgument(std::string("missing ") + flag);
  return IntPolynomial(parse_integer_list(csv));
}

json to_json(const std::vector<BigInt>& v) {
  json a = json::array();
  for (const BigInt& x : v) {
    if (x >= std::numeric_limits<std::int64_t>::min() &&
        x <= std::numeric_limits<std::int64_t>::max()) {
      a.push_back(static_cast<std::int64_t>(x));
    } else {
      a.push_back(x.str());
    }
  }
  return a;
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write " + o.out);
  f << text;
}

bool json_format(const Options& o) {
  if (o.format != "text" && o.format != "json" && o.format != "dot" && o.format != "stratum") {
    throw InvalidArgument("unknown format '" + o.format + "'");
  }
  return o.format == "json";
}

int cmd_enum(const Options& o) {
  const Presentation p = presentation_arg(o);
  GradedMonoid monoid(p, budget_of(o));
  const auto counts = monoid.counts(require(o.max_len, "--max-len"));
  if (json_format(o)) {
    emit(o, json{{"counts", counts}}.dump(2) + "\n");
  } else {
    emit(o, join(counts) + "\n");
  }
  return kPositive;
}

int cmd_classes(const Options& o) {
  const Presentation p = presentation_arg(o);
  const std::size_t n = require(o.max_len, "--max-len");
  if (o.format == "stratum") {
    if (o.out.empty()) throw InvalidArgument("--format stratum needs --out");
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw InvalidArgument("cannot write " + o.out);
    write_stratum(f, length_classes(p, n, ClosureEngine::pruned, budget_of(o)));
    return kPositive;
  }
  GradedMonoid monoid(p, budget_of(o));
  json layers = json::array();
  std::string text;
  for (std::size_t k = 0; k <= n; ++k) {
    json reps = json::array();
    text += std::to_string(k) + ":";
    for (const Word& w : monoid.representatives(k)) {
      reps.push_back(p.alphabet.format(w));
      text += " [" + p.alphabet.format(w) + "]";
    }
    text += "\n";
    layers.push_back(std::move(reps));
  }
  emit(o, json_format(o) ? json{{"classes", layers}}.dump(2) + "\n" : text);
  return kPositive;
}

int cmd_hasse(const Options& o) {
  const Presentation p = presentation_arg(o);
  const std::size_t n = o.max_len ? *o.max_len : require(o.depth, "--max-len");
  const auto poset = build_poset_prefix(p, n, budget_of(o));
  json_format(o);
  emit(o, export_hasse(poset, o.format == "json" ? HasseFormat::json : HasseFormat::dot));
  return kPositive;
}

int cmd_lc_check(const Options& o) {
  const Presentation p = presentation_arg(o);
  const auto r = check_left_cancellative(p, require(o.depth, "--depth"), budget_of(o));
  if (json_format(o)) {
    json doc{{"verdict", r.pass ? "pass" : "fail"}, {"depth_checked", r.depth_checked}};
    if (r.witness) {
      doc["witness"] = {{"generator", p.alphabet.name(r.witness->generator)},
                        {"first", p.alphabet.format(r.witness->first)},
                        {"second", p.alphabet.format(r.witness->second)}};
    }
    emit(o, doc.dump(2) + "\n");
  } else if (r.pass) {
    emit(o, "pass: left-cancellative through length " + std::to_string(r.depth_checked) + "\n");
  } else {
    const auto& w = *r.witness;
    const std::string x = p.alphabet.name(w.generator);
    emit(o, "fail: " + x + " (" + p.alphabet.format(w.first) + ") = " + x + " (" +
                p.alphabet.format(w.second) + ") with distinct right factors\n");
  }
  return r.pass ? kPositive : kNegative;
}

std::string format_relations(const Presentation& p, const std::vector<Relation>& rs) {
  std::string s;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (i) s += "; ";
    s += p.alphabet.format(rs[i].lhs);
    s += rs[i].is_zero() ? " = 0" : " = " + p.alphabet.format(rs[i].rhs);
  }
  return s.empty() ? "-" : s;
}

std::size_t depth_for(const Options& o, std::size_t terms) {
  if (o.depth) return *o.depth;
  if (terms == 0) throw InvalidArgument("empty coefficient list");
  return terms - 1;
}

template <typename Result>
std::string steps_text(const Result& r) {
  std::string s;
  for (const GreedyStep& step : r.steps) {
    s += "step " + std::to_string(step.k) + ": measured " + std::to_string(step.measured) +
         ", added " + format_relations(r.final_presentation, step.added) + ", count " +
         std::to_string(step.count) + "\n";
  }
  return s;
}

int cmd_greedy_zero(const Options& o) {
  const auto b = natural_list(o.coeffs);
  const auto r = greedy_zero_series(b, depth_for(o, b.size()), "x", budget_of(o));
  if (json_format(o)) {
    emit(o, greedy_zero_json(r));
  } else {
    std::string s = steps_text(r);
    s += r.success ? "success\n" : "failure at step " + std::to_string(*r.failure_k) + "\n";
    if (r.success) s += serialize_presentation(r.final_presentation);
    emit(o, s);
  }
  return r.success ? kPositive : kNegative;
}

int cmd_greedy_lch(const Options& o) {
  const auto c = natural_list(o.coeffs);
  const auto r = greedy_lch_series(c, depth_for(o, c.size()), "x", budget_of(o));
  if (r.failure_reason == LchFailure::merge_anomaly) {
    throw Anomaly("greedy LCH: merge anomaly at step " + std::to_string(*r.failure_k));
  }
  if (json_format(o)) {
    emit(o, greedy_lch_json(r));
  } else {
    std::string s = steps_text(r);
    if (r.success) {
      s += "success\n" + serialize_presentation(r.final_presentation);
    } else {
      s += "failure at step " + std::to_string(*r.failure_k) + ": " +
           std::string(to_string(*r.failure_reason)) + "\n";
    }
    emit(o, s);
  }
  return r.success ? kPositive : kNegative;
}

int cmd_treeify(const Options& o) {
  const Presentation p = presentation_arg(o);
  const Presentation t = treeify(p, require(o.depth, "--depth"), budget_of(o));
  emit(o, serialize_presentation(t));
  return kPositive;
}

std::map<std::string, std::string> parse_xmap(const std::string& text) {
  std::map<std::string, std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidArgument("--xmap entries look like y1=x");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

int cmd_convolve(const Options& o) {
  if (o.presentations.size() != 2) {
    throw InvalidArgument("convolve needs -p M1 -p M2");
  }
  const auto spec =
      make_convolution_spec(presentation_arg(o, 0), presentation_arg(o, 1), parse_xmap(o.xmap));
  const Convolution conv = convolve(spec);
  emit(o, serialize_presentation(conv.presentation));
  if (o.max_len) {
    const auto report = verify_convolution_counts(spec, *o.max_len, budget_of(o));
    std::cerr << "counts " << join(report.enumerated) << " expected " << join(report.expected)
              << "\n";
    if (!report.pass) {
      throw Anomaly("convolution count identity fails at length " +
                    std::to_string(*report.first_mismatch));
    }
  }
  return kPositive;
}

int cmd_tp_check(const Options& o) {
  if (o.coeffs.empty()) throw InvalidArgument("missing --coeffs");
  const IntSeries s(parse_integer_list(o.coeffs));
  const auto r = toeplitz_tp_check(s, o.order, o.window);
  auto set_text = [](const std::vector<std::size_t>& v) {
    std::string t = "{";
    for (std::size_t i = 0; i < v.size(); ++i) t += (i ? "," : "") + std::to_string(v[i]);
    return t + "}";
  };
  if (json_format(o)) {
    json doc{{"verdict", r.accept ? "accept" : "reject"},
             {"order", r.max_order},
             {"window", r.window},
             {"minors_checked", r.minors_checked}};
    if (r.witness) {
      doc["witness"] = {{"rows", r.witness->rows},
                        {"cols", r.witness->cols},
                        {"determinant", r.witness->determinant.str()}};
    }
    emit(o, doc.dump(2) + "\n");
  } else if (r.accept) {
    emit(o, "accept: " + std::to_string(r.minors_checked) + " minors of order <= " +
                std::to_string(r.max_order) + " in a " + std::to_string(r.window) +
                "x" + std::to_string(r.window) + " window are nonnegative\n");
  } else {
    emit(o, "reject: rows " + set_text(r.witness->rows) + " cols " + set_text(r.witness->cols) +
                " det " + r.witness->determinant.str() + "\n");
  }
  return r.accept ? kPositive : kNegative;
}

int cmd_roots(const Options& o) {
  const auto c = classify_roots(polynomial_arg(o.coeffs, "--coeffs"));
  json doc{{"verdict", to_string(c.verdict)},
           {"degree", c.degree},
           {"all_real", c.all_real},
           {"negative", c.negative_count},
           {"in_unit_interval", c.positive_in_unit_count},
           {"unit", c.unit_count},
           {"greater_than_one", c.greater_than_one_count}};
  if (json_format(o)) {
    emit(o, doc.dump(2) + "\n");
  } else {
    std::string s = std::string(to_string(c.verdict)) + "\n";
    for (const auto& [key, value] : doc.items()) {
      if (key != "verdict") s += "  " + key + ": " + value.dump() + "\n";
    }
    emit(o, s);
  }
  return kPositive;
}

int cmd_factor(const Options& o) {
  const auto factors = factor_over_z(polynomial_arg(o.coeffs, "--coeffs"));
  if (json_format(o)) {
    json a = json::array();
    for (const auto& f : factors) a.push_back(to_json(f.coefficients()));
    emit(o, json{{"factors", a}}.dump(2) + "\n");
  } else {
    std::string s;
    for (const auto& f : factors) s += format_integer_list(f.coefficients()) + "\n";
    emit(o, s);
  }
  return kPositive;
}

std::string certificate_summary(const TpCertificate& cert) {
  std::string s = "routing:";
  for (const auto& r : cert.routing) {
    s += " [" + format_integer_list(r.factor.coefficients()) + "] " +
         std::string(to_string(r.route));
  }
  s += "\ntarget:     " + format_integer_list(cert.target, " ");
  s += "\nenumerated: " + format_integer_list(cert.enumerated, " ");
  s += std::string("\nverdict: ") + (cert.pass ? "pass" : "fail") + "\n";
  return s;
}

int cmd_tp_build(const Options& o) {
  const IntPolynomial g = polynomial_arg(o.num, "--num");
  const IntPolynomial h = polynomial_arg(o.den, "--den");
  const auto cert = build_tp_monoid(g, h, o.depth.value_or(kDefaultTpDepth), budget_of(o));
  const std::string doc = certificate_json(cert);
  if (!o.out.empty()) {
    emit(o, doc);
    std::cout << certificate_summary(cert);
  } else {
    std::cout << (json_format(o) ? doc : certificate_summary(cert));
  }
  return cert.pass ? kPositive : kAnomaly;
}

int cmd_verify_cert(const Options& o) {
  std::ifstream f(o.certificate, std::ios::binary);
  if (!f) throw InvalidArgument("cannot read " + o.certificate);
  std::stringstream buf;
  buf << f.rdbuf();
  const auto check = verify_certificate(parse_certificate(buf.str()), budget_of(o));
  if (json_format(o)) {
    emit(o, json{{"verdict", check.pass ? "pass" : "fail"}, {"problems", check.problems}}.dump(2) +
                "\n");
  } else {
    std::string s = check.pass ? "pass\n" : "fail\n";
    for (const auto& p : check.problems) s += "  " + p + "\n";
    emit(o, s);
  }
  return check.pass ? kPositive : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate and build homogeneous monoid presentations of upho posets"};
  app.require_subcommand(1);
  Options o;

  auto presentation = [&](CLI::App* c) {
    c->add_option("-p,--presentation", o.presentations, "presentation file")->required();
  };
  auto common = [&](CLI::App* c) {
    c->add_option("--format", o.format, "text | json | dot");
    c->add_option("--out", o.out, "write output to this path");
    c->add_option("--budget", o.budget, "word budget per length");
  };

  std::vector<std::pair<CLI::App*, std::function<int(const Options&)>>> commands;
  auto add = [&](const char* name, const char* help, std::function<int(const Options&)> run) {
    CLI::App* c = app.add_subcommand(name, help);
    common(c);
    commands.emplace_back(c, std::move(run));
    return c;
  };

  auto* e = add("enum", "nonzero element counts for lengths 0..N", cmd_enum);
  presentation(e);
  e->add_option("--max-len", o.max_len)->required();

  auto* cl = add("classes", "canonical representatives per length", cmd_classes);
  presentation(cl);
  cl->add_option("--max-len", o.max_len)->required();

  auto* ha = add("hasse", "colored Hasse diagram prefix", cmd_hasse);
  presentation(ha);
  ha->add_option("--max-len", o.max_len, "maximal rank");
  ha->add_option("--depth", o.depth, "alias of --max-len");

  auto* lc = add("lc-check", "left-cancellativity through a length", cmd_lc_check);
  presentation(lc);
  lc->add_option("--depth", o.depth)->required();

  auto* gz = add("greedy-zero", "greedy free 0-monoid for a coefficient sequence",
                 cmd_greedy_zero);
  gz->add_option("--coeffs", o.coeffs)->required();
  gz->add_option("--depth", o.depth);

  auto* gl = add("greedy-lch", "greedy head-changing monoid for a coefficient sequence",
                 cmd_greedy_lch);
  gl->add_option("--coeffs", o.coeffs)->required();
  gl->add_option("--depth", o.depth);

  auto* tr = add("treeify", "free 0-monoid of canonical representatives", cmd_treeify);
  presentation(tr);
  tr->add_option("--depth", o.depth)->required();

  auto* cv = add("convolve", "x-convolution of -p M1 with -p M2", cmd_convolve);
  presentation(cv);
  cv->add_option("--xmap", o.xmap, "y1=x,y2=x (default: least generator)");
  cv->add_option("--max-len", o.max_len, "verify the count identity up to this length");

  auto* tp = add("tp-check", "Toeplitz minors of a series prefix", cmd_tp_check);
  tp->add_option("--coeffs", o.coeffs)->required();
  tp->add_option("--order", o.order, "maximal minor order")->check(CLI::PositiveNumber);
  tp->add_option("--window", o.window, "matrix window (default 2 * order)");

  auto* ro = add("roots", "classify the reciprocal roots of a polynomial", cmd_roots);
  ro->add_option("--coeffs", o.coeffs)->required();

  auto* fa = add("factor", "irreducible factors over the integers", cmd_factor);
  fa->add_option("--coeffs", o.coeffs)->required();

  auto* tb = add("tp-build", "monoid and certificate for g/h", cmd_tp_build);
  tb->add_option("--num", o.num, "numerator g (default 1)");
  tb->add_option("--den", o.den)->required();
  tb->add_option("--depth", o.depth);

  auto* vc = add("verify-cert", "re-run a tp-build certificate", cmd_verify_cert);
  vc->add_option("certificate", o.certificate)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kUsage;
  }

  try {
    for (const auto& [cmd, run] : commands) {
      if (cmd->parsed()) return run(o);
    }
  } catch (const Anomaly& err) {
    std::cerr << "upho: anomaly: " << err.what() << "\n";
    return kAnomaly;
  } catch (const Error& err) {
    std::cerr << "upho: error: " << err.what() << "\n";
    return kUsage;
  } catch (const std::exception& err) {
    std::cerr << "upho: error: " << err.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
