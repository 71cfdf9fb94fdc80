#include "upho/tpbuild.hpp"

#include <sstream>

#include "json.hpp"

#include "upho/convolution.hpp"
#include "upho/error.hpp"
#include "upho/greedy.hpp"

namespace upho {

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  for (const auto& row : rows) {
    if (row.size() != cols_) throw InvalidArgument("IntMatrix: ragged rows");
    for (long long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("IntMatrix: dimension mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

IntMatrix IntMatrix::power(std::size_t e) const {
  if (rows_ != cols_) throw InvalidArgument("IntMatrix: power of a non-square matrix");
  IntMatrix result = identity(rows_);
  IntMatrix base = *this;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? " " : "") << (*this)(i, j);
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Linear algebra of the denominator

namespace {

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigInt sign(long long e) { return e % 2 == 0 ? BigInt(1) : BigInt(-1); }

std::size_t checked_degree(const IntPolynomial& h, std::string_view what) {
  if (!h.has_unit_constant()) {
    throw InvalidArgument(std::string(what) + ": constant term must be 1");
  }
  if (h.degree() < 1) throw InvalidArgument(std::string(what) + ": degree must be at least 1");
  return static_cast<std::size_t>(h.degree());
}

}  // namespace

std::vector<BigInt> signed_coefficients(const IntPolynomial& h) {
  std::vector<BigInt> out;
  for (int i = 1; i <= h.degree(); ++i) out.push_back(sign(i) * h[static_cast<std::size_t>(i)]);
  return out;
}

IntMatrix companion_matrix(const IntPolynomial& h) {
  const std::size_t n = checked_degree(h, "companion_matrix");
  IntMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m(0, j) = -h[j + 1];
  for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = 1;
  return m;
}

ChangeOfBasis change_of_basis(std::size_t n) {
  if (n < 1) throw InvalidArgument("change_of_basis: n must be at least 1");
  ChangeOfBasis cb{IntMatrix(n, n), IntMatrix(n, n)};
  const long long nn = static_cast<long long>(n);
  for (long long i = 1; i <= nn; ++i) {
    for (long long j = 1; j <= nn; ++j) {
      BigInt a, b;
      if (i == 1) {
        a = 1;
        b = sign(j + 1) * binomial(nn - 1, j - 1);
      } else {
        a = i + j < nn + 2 ? BigInt(0) : sign(nn - j) * binomial(i - 2, nn - j);
        b = (j == 1 || i + j > nn + 2) ? BigInt(0) : sign(j) * binomial(nn - i, j - 2);
      }
      cb.a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = a;
      cb.b(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = b;
    }
  }
  return cb;
}

std::vector<BigInt> l_values_closed_form(const IntPolynomial& h) {
  const std::size_t n = checked_degree(h, "l_values");
  const auto hs = signed_coefficients(h);
  auto hv = [&](long long i) { return hs[static_cast<std::size_t>(i - 1)]; };
  const long long nn = static_cast<long long>(n);
  std::vector<BigInt> l;
  for (long long i = 1; i <= nn; ++i) {
    BigInt v = hv(1);
    for (long long t = 0; t <= i - 2; ++t) {
      v += sign(t + 1) * binomial(nn - i + t, nn - i) * hv(nn - i + 2 + t);
    }
    v += -nn + i - (i == 1 ? 0 : 1);
    l.push_back(std::move(v));
  }
  return l;
}

IntMatrix l_matrix(const IntPolynomial& h) {
  const std::size_t n = checked_degree(h, "l_matrix");
  const auto cb = change_of_basis(n);
  return cb.b * companion_matrix(h) * cb.a;
}

std::vector<BigInt> companion_coefficients(const IntPolynomial& h, std::size_t order) {
  const IntMatrix H = companion_matrix(h);
  std::vector<BigInt> out;
  IntMatrix p = IntMatrix::identity(H.rows());
  for (std::size_t i = 0; i < order; ++i) {
    out.push_back(p(0, 0));
    p = p * H;
  }
  return out;
}

std::vector<BigInt> l_matrix_coefficients(const IntPolynomial& h, std::size_t order) {
  const IntMatrix L = l_matrix(h);
  std::vector<BigInt> out;
  IntMatrix p = IntMatrix::identity(L.rows());
  for (std::size_t i = 0; i < order; ++i) {
    BigInt sum = 0;
    for (std::size_t r = 0; r < L.rows(); ++r) sum += p(r, 0);
    out.push_back(std::move(sum));
    p = p * L;
  }
  return out;
}

std::vector<BigInt> l_values(const IntPolynomial& h) {
  const std::size_t n = checked_degree(h, "l_values");
  const auto closed = l_values_closed_form(h);
  const IntMatrix L = l_matrix(h);
  for (std::size_t j = 0; j < n; ++j) {
    if (L(0, j) != closed[j]) {
      throw Anomaly("l_values: closed form l_" + std::to_string(j + 1) + " = " +
                    closed[j].str() + " but B H A gives " + L(0, j).str());
    }
  }
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (L(i, j) != (j <= i ? 1 : 0)) {
        throw Anomaly("l_values: row " + std::to_string(i + 1) +
                      " of B H A is not the lower-triangular ones pattern");
      }
    }
  }
  constexpr std::size_t kCheckOrder = 9;
  if (l_matrix_coefficients(h, kCheckOrder) != series_reciprocal(h, kCheckOrder).coefficients()) {
    throw Anomaly("l_values: (1...1) L^i e_1 disagrees with 1/h");
  }
  return closed;
}

// ---------------------------------------------------------------------------
// Monoids for irreducible denominators

Presentation build_type2_monoid(const IntPolynomial& h, std::string_view prefix) {
  const std::size_t n = checked_degree(h, "build_type2_monoid");
  const RootClassification rc = classify_roots(h);
  if (rc.verdict != RootVerdict::type_II) {
    throw InvalidArgument("build_type2_monoid: " + format_polynomial(h) +
                          " classifies as " + std::string(to_string(rc.verdict)) +
                          ", not type_II");
  }
  if (factor_over_z(h).size() != 1) {
    throw InvalidArgument("build_type2_monoid: " + format_polynomial(h) + " is reducible");
  }
  const auto l = l_values(h);
  for (std::size_t i = 1; i < n; ++i) {
    const BigInt bound = i == 1 ? l[0] - 1 : l[i - 1];
    if (l[i] > bound) {
      throw Anomaly("build_type2_monoid: l values are not l_1 - 1 >= l_2 >= ... >= l_n");
    }
  }
  if (l[n - 1] < 1) throw Anomaly("build_type2_monoid: l_n < 1");

  const auto l1 = static_cast<std::size_t>(l[0]);
  std::vector<std::string> names;
  auto name = [&](std::size_t k, std::size_t s) {
    return std::string(prefix) + std::to_string(k) + "_" + std::to_string(s);
  };
  for (std::size_t s = 1; s <= l1; ++s) names.push_back(name(1, s));
  for (std::size_t k = 2; k <= n; ++k) names.push_back(name(k, 1));

  Presentation p;
  p.alphabet = Alphabet(std::move(names));
  p.declared_class = PresentationClass::head_changing;
  // Letter of x^k_1 for k >= 2.
  auto head = [&](std::size_t k) { return static_cast<Letter>(l1 + k - 2); };
  for (std::size_t k = 2; k <= n; ++k) {
    const auto bound = static_cast<std::size_t>(l[0] - l[k - 1]);
    for (std::size_t t = 1; t <= bound; ++t) {
      const Letter tail = static_cast<Letter>(t - 1);
      p.relations.push_back(Relation::equation(Word{head(k), tail}, Word{0, tail}));
    }
  }
  for (std::size_t k = 3; k <= n; ++k) {
    for (std::size_t j = 2; j < k; ++j) {
      p.relations.push_back(Relation::equation(Word{head(k), head(j)}, Word{0, head(j)}));
    }
  }
  return p;
}

Presentation build_type1_monoid(const IntPolynomial& h, std::size_t depth,
                                std::uint64_t budget) {
  const std::size_t n = checked_degree(h, "build_type1_monoid");
  if (n < 2) throw InvalidArgument("build_type1_monoid: degree must be at least 2");
  const RootClassification rc = classify_roots(h);
  if (rc.verdict != RootVerdict::type_I) {
    throw InvalidArgument("build_type1_monoid: " + format_polynomial(h) +
                          " classifies as " + std::string(to_string(rc.verdict)) +
                          ", not type_I");
  }
  if (depth < 1) throw InvalidArgument("build_type1_monoid: depth must be at least 1");
  const IntSeries s = series_divide(IntPolynomial{1, -1}, h, depth + 1);
  if (!is_log_concave(s)) {
    throw Anomaly("build_type1_monoid: (1 - x)/h is not log-concave");
  }
  std::vector<std::uint64_t> b;
  for (const BigInt& c : s.coefficients()) {
    if (c <= 0) throw Anomaly("build_type1_monoid: (1 - x)/h has a nonpositive coefficient");
    b.push_back(static_cast<std::uint64_t>(c));
  }
  const GreedyZeroResult greedy = greedy_zero_series(b, depth, "y", budget);
  if (!greedy.success) {
    throw Anomaly("build_type1_monoid: greedy 0-monoid series failed for a "
                  "log-concave sequence");
  }
  Presentation chain = free_monoid(std::vector<std::string>{"x"});
  Presentation out =
      convolve(make_convolution_spec(std::move(chain), greedy.final_presentation))
          .presentation;

  GradedMonoid monoid(out, budget);
  const IntSeries expect = series_reciprocal(h, depth + 1);
  for (std::size_t k = 0; k <= depth; ++k) {
    if (BigInt(monoid.count(k)) != expect[k]) {
      throw Anomaly("build_type1_monoid: layer " + std::to_string(k) + " has " +
                    std::to_string(monoid.count(k)) + " elements, 1/h gives " +
                    expect[k].str());
    }
  }
  return out;
}

std::string_view to_string(Route r) {
  switch (r) {
    case Route::linear: return "linear";
    case Route::type_I: return "type_I";
    case Route::type_II: return "type_II";
  }
  return "?";
}

TpCertificate build_tp_monoid(const IntPolynomial& g, const IntPolynomial& h,
                              std::size_t depth, std::uint64_t budget) {
  if (!g.has_unit_constant()) throw InvalidArgument("tp-build: numerator must have constant term 1");
  checked_degree(h, "tp-build (denominator)");
  if (depth < 1) throw InvalidArgument("tp-build: depth must be at least 1");
  if (g.degree() > 0 && classify_roots(g).verdict != RootVerdict::all_negative) {
    throw InvalidArgument("tp-build: numerator " + format_polynomial(g) +
                          " does not have only real negative roots");
  }
  TpCertificate cert;
  cert.g = g;
  cert.h = h;
  cert.depth = depth;
  cert.target = series_divide(g, h, depth + 1).coefficients();
  for (const BigInt& c : cert.target) {
    if (c < 0) throw InvalidArgument("tp-build: g/h has a negative coefficient");
  }

  std::vector<Presentation> parts;
  const auto factors = factor_over_z(h);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const IntPolynomial& f = factors[i];
    Presentation part;
    Route route;
    if (f.degree() == 1) {
      const BigInt a = -f[1];
      if (a < 1) {
        throw InvalidArgument("tp-build: factor " + format_polynomial(f) +
                              " has no positive reciprocal root");
      }
      route = Route::linear;
      part = free_monoid(static_cast<std::size_t>(a), "x");
    } else {
      const RootClassification rc = classify_roots(f);
      if (rc.verdict == RootVerdict::type_II) {
        route = Route::type_II;
        part = build_type2_monoid(f);
      } else if (rc.verdict == RootVerdict::type_I) {
        route = Route::type_I;
        part = build_type1_monoid(f, depth, budget);
      } else {
        throw InvalidArgument("tp-build: factor " + format_polynomial(f) + " classifies as " +
                              std::string(to_string(rc.verdict)) +
                              "; every factor needs real positive roots");
      }
    }
    cert.routing.push_back({f, route});
    parts.push_back(with_prefixed_generators(part, "f" + std::to_string(i + 1) + "_"));
  }

  Presentation current = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    current = convolve(make_convolution_spec(current, treeify(parts[i], depth, budget)))
                  .presentation;
  }
  if (g.degree() > 0) {
    std::vector<std::uint64_t> b;
    for (std::size_t k = 0; k <= depth; ++k) b.push_back(static_cast<std::uint64_t>(g[k]));
    const GreedyZeroResult numerator = greedy_zero_series(b, depth, "g_x", budget);
    if (!numerator.success) {
      throw Anomaly("tp-build: greedy 0-monoid series failed for the numerator");
    }
    current = convolve(make_convolution_spec(current, numerator.final_presentation))
                  .presentation;
  }
  cert.presentation = current;

  GradedMonoid monoid(cert.presentation, budget);
  for (std::size_t k = 0; k <= depth; ++k) cert.enumerated.emplace_back(monoid.count(k));
  cert.pass = cert.enumerated == cert.target;
  return cert;
}

// ---------------------------------------------------------------------------
// Certificates

namespace {

using json = nlohmann::ordered_json;

json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

json list_json(const std::vector<BigInt>& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(big_json(v));
  return arr;
}

BigInt big_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw InvalidArgument("certificate: expected an integer");
}

std::vector<BigInt> list_from_json(const json& j) {
  if (!j.is_array()) throw InvalidArgument("certificate: expected an integer array");
  std::vector<BigInt> out;
  for (const auto& v : j) out.push_back(big_from_json(v));
  return out;
}

}  // namespace

std::string certificate_json(const TpCertificate& cert) {
  json j;
  j["g"] = list_json(cert.g.coefficients());
  j["h"] = list_json(cert.h.coefficients());
  j["routing"] = json::array();
  for (const auto& r : cert.routing) {
    json e;
    e["factor"] = list_json(r.factor.coefficients());
    e["route"] = std::string(to_string(r.route));
    j["routing"].push_back(std::move(e));
  }
  j["presentation"] = serialize_presentation(cert.presentation);
  j["depth"] = cert.depth;
  j["coefficients"]["target"] = list_json(cert.target);
  j["coefficients"]["enumerated"] = list_json(cert.enumerated);
  j["verdict"] = cert.pass ? "pass" : "fail";
  return j.dump(2) + "\n";
}

TpCertificate parse_certificate(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("certificate: ") + e.what());
  }
  try {
    TpCertificate cert;
    cert.g = IntPolynomial(list_from_json(j.at("g")));
    cert.h = IntPolynomial(list_from_json(j.at("h")));
    for (const auto& e : j.at("routing")) {
      const std::string route = e.at("route").get<std::string>();
      Route r;
      if (route == "linear") {
        r = Route::linear;
      } else if (route == "type_I") {
        r = Route::type_I;
      } else if (route == "type_II") {
        r = Route::type_II;
      } else {
        throw InvalidArgument("certificate: unknown route '" + route + "'");
      }
      cert.routing.push_back({IntPolynomial(list_from_json(e.at("factor"))), r});
    }
    cert.presentation = parse_presentation(j.at("presentation").get<std::string>());
    cert.depth = j.at("depth").get<std::size_t>();
    cert.target = list_from_json(j.at("coefficients").at("target"));
    cert.enumerated = list_from_json(j.at("coefficients").at("enumerated"));
    cert.pass = j.at("verdict").get<std::string>() == "pass";
    return cert;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("certificate: ") + e.what());
  }
}

CertificateCheck verify_certificate(const TpCertificate& cert, std::uint64_t budget) {
  CertificateCheck check;
  auto problem = [&](std::string msg) { check.problems.push_back(std::move(msg)); };

  const auto target = series_divide(cert.g, cert.h, cert.depth + 1).coefficients();
  if (target != cert.target) problem("recorded target differs from g/h");

  IntPolynomial product{1};
  for (const auto& r : cert.routing) product = product * r.factor;
  if (!(product == cert.h)) problem("routing factors do not multiply to h");

  GradedMonoid monoid(cert.presentation, budget);
  std::vector<BigInt> enumerated;
  for (std::size_t k = 0; k <= cert.depth; ++k) enumerated.emplace_back(monoid.count(k));
  if (enumerated != cert.enumerated) problem("re-enumeration differs from the recorded table");
  if (enumerated != target) problem("enumerated layer counts differ from g/h");
  if (!cert.pass) problem("certificate verdict is not pass");

  const LcReport lc = check_left_cancellative(monoid, cert.depth);
  if (!lc.pass) problem("presentation fails the left-cancellativity check");

  check.pass = check.problems.empty();
  return check;
}

}  // namespace upho
