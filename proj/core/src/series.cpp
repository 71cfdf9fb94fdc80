#include "upho/series.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>

#include "upho/error.hpp"

namespace upho {

using Rational = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// IntPolynomial / IntSeries

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients)
    : c_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients) {
  for (long long v : coefficients) c_.emplace_back(v);
  trim();
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPolynomial(std::move(c));
}

IntSeries::IntSeries(std::initializer_list<long long> coefficients) {
  for (long long v : coefficients) c_.emplace_back(v);
}

IntSeries::IntSeries(const IntPolynomial& p, std::size_t order) : c_(order) {
  for (std::size_t i = 0; i < order; ++i) c_[i] = p[i];
}

IntSeries series_mul(const IntSeries& a, const IntSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<BigInt> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) c[i] += a[j] * b[i - j];
  }
  return IntSeries(std::move(c));
}

IntSeries series_divide(const IntPolynomial& g, const IntPolynomial& h,
                        std::size_t order) {
  if (!h.has_unit_constant()) {
    throw InvalidArgument("series division needs a denominator with constant term 1");
  }
  std::vector<BigInt> c(order);
  for (std::size_t i = 0; i < order; ++i) {
    BigInt v = g[i];
    const std::size_t top = std::min<std::size_t>(i, static_cast<std::size_t>(h.degree()));
    for (std::size_t j = 1; j <= top; ++j) v -= h[j] * c[i - j];
    c[i] = std::move(v);
  }
  return IntSeries(std::move(c));
}

IntSeries series_reciprocal(const IntPolynomial& h, std::size_t order) {
  return series_divide(IntPolynomial{1}, h, order);
}

std::optional<IntPolynomial> exact_divide(const IntPolynomial& a,
                                          const IntPolynomial& b) {
  if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
  if (a.is_zero()) return IntPolynomial{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<BigInt> rem = a.coefficients();
  const int db = b.degree();
  const BigInt& lead = b.coefficients().back();
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree() - db; i >= 0; --i) {
    const BigInt& top = rem[static_cast<std::size_t>(i + db)];
    if (top % lead != 0) return std::nullopt;
    BigInt t = top / lead;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i + j)] -= t * b[static_cast<std::size_t>(j)];
    q[static_cast<std::size_t>(i)] = std::move(t);
  }
  for (const BigInt& r : rem) {
    if (r != 0) return std::nullopt;
  }
  return IntPolynomial(std::move(q));
}

// ---------------------------------------------------------------------------
// Log-concavity

bool is_log_concave(const std::vector<BigInt>& a) {
  for (const BigInt& v : a) {
    if (v < 0) return false;
  }
  std::size_t first = a.size(), last = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) {
      first = std::min(first, i);
      last = i;
    }
  }
  for (std::size_t i = first; i < last; ++i) {
    if (a[i] == 0) return false;
  }
  for (std::size_t i = 0; i + 2 < a.size(); ++i) {
    if (a[i] * a[i + 2] > a[i + 1] * a[i + 1]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Toeplitz minors

BigInt determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  // Fraction-free Bareiss elimination.
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t r = c.size();
  std::size_t i = r;
  while (i > 0) {
    --i;
    if (c[i] < n - r + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t r) {
  std::vector<std::size_t> c(r);
  std::iota(c.begin(), c.end(), 0);
  return c;
}

}  // namespace

ToeplitzReport toeplitz_tp_check(const IntSeries& s, std::size_t m,
                                 std::size_t window) {
  if (m == 0) throw InvalidArgument("toeplitz_tp_check: order must be at least 1");
  if (window == 0) window = 2 * m;
  if (window < m) throw InvalidArgument("toeplitz_tp_check: window smaller than order");
  if (s.order() < window) {
    throw InvalidArgument("toeplitz_tp_check: series has " +
                          std::to_string(s.order()) +
                          " coefficients, window needs " + std::to_string(window));
  }
  auto entry = [&](std::size_t i, std::size_t j) -> BigInt {
    return i >= j ? s[i - j] : BigInt(0);
  };

  ToeplitzReport report;
  report.window = window;
  report.max_order = m;
  for (std::size_t r = 1; r <= m; ++r) {
    auto rows = first_combination(r);
    do {
      auto cols = first_combination(r);
      do {
        std::vector<std::vector<BigInt>> sub(r, std::vector<BigInt>(r));
        for (std::size_t a = 0; a < r; ++a) {
          for (std::size_t b = 0; b < r; ++b) sub[a][b] = entry(rows[a], cols[b]);
        }
        BigInt det = determinant(std::move(sub));
        ++report.minors_checked;
        if (det < 0) {
          ToeplitzMinor w;
          for (auto i : rows) w.rows.push_back(i + 1);
          for (auto j : cols) w.cols.push_back(j + 1);
          w.determinant = std::move(det);
          report.accept = false;
          report.witness = std::move(w);
          return report;
        }
      } while (next_combination(cols, window));
    } while (next_combination(rows, window));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Root classification over Q

namespace {

using RatPoly = std::vector<Rational>;  // constant term first, trimmed

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int rdeg(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

RatPoly derivative(const RatPoly& p) {
  RatPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long long>(i));
  trim(d);
  return d;
}

// Remainder (and optionally quotient) of a / b.
RatPoly poly_divmod(RatPoly a, const RatPoly& b, RatPoly* quotient = nullptr) {
  const int db = rdeg(b);
  RatPoly q(a.size() > b.size() ? a.size() - b.size() + 1 : 1);
  while (rdeg(a) >= db && !a.empty()) {
    const int shift = rdeg(a) - db;
    Rational t = a.back() / b.back();
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(shift + j)] -= t * b[static_cast<std::size_t>(j)];
    q[static_cast<std::size_t>(shift)] = t;
    a.pop_back();
    trim(a);
  }
  if (quotient) {
    trim(q);
    *quotient = std::move(q);
  }
  return a;
}

RatPoly monic(RatPoly p) {
  if (p.empty()) return p;
  Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (!b.empty()) {
    RatPoly r = poly_divmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

RatPoly exact_quotient(const RatPoly& a, const RatPoly& b) {
  RatPoly q;
  poly_divmod(a, b, &q);
  return q;
}

// Yun's algorithm: list of (squarefree factor, multiplicity).
std::vector<std::pair<RatPoly, std::size_t>> squarefree_decomposition(const RatPoly& f) {
  std::vector<std::pair<RatPoly, std::size_t>> out;
  RatPoly a = monic(f);
  RatPoly b = poly_gcd(a, derivative(a));
  RatPoly c = exact_quotient(a, b);
  RatPoly d = derivative(a);
  d = exact_quotient(d, b);
  // y = a'/b - c'
  RatPoly y = d;
  {
    RatPoly cd = derivative(c);
    y.resize(std::max(y.size(), cd.size()));
    for (std::size_t i = 0; i < cd.size(); ++i) y[i] -= cd[i];
    trim(y);
  }
  std::size_t mult = 1;
  while (rdeg(c) > 0) {
    RatPoly z = poly_gcd(c, y);
    if (rdeg(z) > 0) out.emplace_back(z, mult);
    RatPoly cz = exact_quotient(c, z);
    RatPoly yz = exact_quotient(y, z);
    RatPoly czd = derivative(cz);
    yz.resize(std::max(yz.size(), czd.size()));
    for (std::size_t i = 0; i < czd.size(); ++i) yz[i] -= czd[i];
    trim(yz);
    c = std::move(cz);
    y = std::move(yz);
    ++mult;
  }
  return out;
}

int sign_of(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

Rational eval(const RatPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
  std::vector<RatPoly> chain{p, derivative(p)};
  while (!chain.back().empty()) {
    RatPoly r = poly_divmod(chain[chain.size() - 2], chain.back());
    for (auto& c : r) c = -c;
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }
  if (chain.back().empty()) chain.pop_back();
  return chain;
}

std::size_t variations(const std::vector<int>& signs) {
  std::size_t v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

std::size_t variations_at(const std::vector<RatPoly>& chain, const Rational& x) {
  std::vector<int> signs;
  for (const auto& p : chain) signs.push_back(sign_of(eval(p, x)));
  return variations(signs);
}

std::size_t variations_at_infinity(const std::vector<RatPoly>& chain, bool negative) {
  std::vector<int> signs;
  for (const auto& p : chain) {
    int s = sign_of(p.back());
    if (negative && rdeg(p) % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return variations(signs);
}

}  // namespace

std::string_view to_string(RootVerdict v) {
  switch (v) {
    case RootVerdict::all_negative: return "all_negative";
    case RootVerdict::type_I: return "type_I";
    case RootVerdict::type_II: return "type_II";
    case RootVerdict::unit_root: return "unit_root";
    case RootVerdict::mixed: return "mixed";
  }
  return "?";
}

RootClassification classify_roots(const IntPolynomial& h) {
  if (h.is_zero()) throw InvalidArgument("classify_roots: zero polynomial");
  if (h[0] == 0) throw InvalidArgument("classify_roots: constant term must be nonzero");
  RootClassification rc;
  rc.degree = static_cast<std::size_t>(h.degree());
  if (rc.degree == 0) {
    rc.all_real = true;
    rc.verdict = RootVerdict::all_negative;
    return rc;
  }
  // Reversed polynomial: its roots are the lambda_i.
  RatPoly rev;
  for (int i = h.degree(); i >= 0; --i) rev.emplace_back(h[static_cast<std::size_t>(i)]);
  trim(rev);

  for (const auto& [factor, mult] : squarefree_decomposition(rev)) {
    const auto chain = sturm_chain(factor);
    const std::size_t v_minf = variations_at_infinity(chain, true);
    const std::size_t v_zero = variations_at(chain, Rational(0));
    const std::size_t v_one = variations_at(chain, Rational(1));
    const std::size_t v_pinf = variations_at_infinity(chain, false);
    const std::size_t at_one = eval(factor, Rational(1)) == 0 ? 1 : 0;
    rc.negative_count += (v_minf - v_zero) * mult;
    rc.positive_in_unit_count += (v_zero - v_one - at_one) * mult;
    rc.unit_count += at_one * mult;
    rc.greater_than_one_count += (v_one - v_pinf) * mult;
  }
  const std::size_t real = rc.negative_count + rc.positive_in_unit_count +
                           rc.unit_count + rc.greater_than_one_count;
  rc.all_real = real == rc.degree;
  if (rc.unit_count > 0) {
    rc.verdict = RootVerdict::unit_root;
  } else if (rc.all_real && rc.negative_count == rc.degree) {
    rc.verdict = RootVerdict::all_negative;
  } else if (rc.all_real && rc.negative_count == 0 && rc.greater_than_one_count == 1) {
    rc.verdict = RootVerdict::type_II;
  } else if (rc.all_real && rc.negative_count == 0 && rc.greater_than_one_count >= 2) {
    rc.verdict = RootVerdict::type_I;
  } else {
    rc.verdict = RootVerdict::mixed;
  }
  return rc;
}

// ---------------------------------------------------------------------------
// Factorization over Z

namespace {

std::vector<BigInt> positive_divisors(BigInt n) {
  if (n < 0) n = -n;
  std::vector<BigInt> small, large;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<BigInt> signed_divisors(const BigInt& n) {
  std::vector<BigInt> out;
  for (const BigInt& d : positive_divisors(n)) {
    out.push_back(d);
    out.push_back(-d);
  }
  return out;
}

// Integer polynomial of degree <= d through (x_i, y_i), if it exists.
std::optional<IntPolynomial> interpolate(const std::vector<BigInt>& xs,
                                         const std::vector<BigInt>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> result(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Lagrange basis polynomial for point i.
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1);
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t + 1] += basis[t];
        next[t] -= basis[t] * Rational(xs[j]);
      }
      basis = std::move(next);
      denom *= Rational(xs[i] - xs[j]);
    }
    for (std::size_t t = 0; t < n; ++t) result[t] += basis[t] * Rational(ys[i]) / denom;
  }
  std::vector<BigInt> coeffs;
  for (const auto& r : result) {
    if (boost::multiprecision::denominator(r) != 1) return std::nullopt;
    coeffs.push_back(boost::multiprecision::numerator(r));
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial normalize_sign(IntPolynomial p) {
  if (p[0] < 0) return IntPolynomial{} - p;
  return p;
}

// Smallest-degree nontrivial factor with constant term 1, if any.
std::optional<IntPolynomial> find_factor(const IntPolynomial& h) {
  const int n = h.degree();
  for (int d = 1; d <= n / 2; ++d) {
    // f(0) = 1 is forced; pick d more points where h has few divisors.
    std::vector<std::pair<std::size_t, BigInt>> candidates;
    for (long long x = 1; x <= 12; ++x) {
      for (long long s : {x, -x}) {
        BigInt v = h.evaluate(BigInt(s));
        if (v == 0) continue;
        candidates.emplace_back(positive_divisors(v).size(), BigInt(s));
      }
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<BigInt> xs{0};
    std::vector<std::vector<BigInt>> choices{{BigInt(1)}};
    for (int i = 0; i < d; ++i) {
      xs.push_back(candidates[static_cast<std::size_t>(i)].second);
      choices.push_back(signed_divisors(h.evaluate(xs.back())));
    }
    std::vector<std::size_t> pick(xs.size(), 0);
    while (true) {
      std::vector<BigInt> ys;
      for (std::size_t i = 0; i < xs.size(); ++i) ys.push_back(choices[i][pick[i]]);
      if (auto f = interpolate(xs, ys); f && f->degree() == d) {
        if (exact_divide(h, *f)) return *f;
      }
      std::size_t i = 1;
      while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<IntPolynomial> factor_over_z(const IntPolynomial& h, int max_degree) {
  if (!h.has_unit_constant()) {
    throw InvalidArgument("factor_over_z: constant term must be 1");
  }
  if (h.degree() > max_degree) {
    throw InvalidArgument("factor_over_z: degree " + std::to_string(h.degree()) +
                          " exceeds the bound " + std::to_string(max_degree));
  }
  std::vector<IntPolynomial> factors;
  IntPolynomial rest = h;
  // Rational roots are 1/q with q | leading coefficient: factors 1 - qx.
  bool stripped = true;
  while (stripped && rest.degree() >= 1) {
    stripped = false;
    for (const BigInt& q : signed_divisors(rest.coefficients().back())) {
      IntPolynomial lin(std::vector<BigInt>{BigInt(1), BigInt(-q)});
      if (auto quotient = exact_divide(rest, lin)) {
        factors.push_back(lin);
        rest = *quotient;
        stripped = true;
        break;
      }
    }
  }
  std::vector<IntPolynomial> pending{rest};
  while (!pending.empty()) {
    IntPolynomial p = pending.back();
    pending.pop_back();
    if (p.degree() < 1) continue;
    if (p.degree() <= 3) {
      factors.push_back(p);
      continue;
    }
    if (auto f = find_factor(p)) {
      pending.push_back(normalize_sign(*f));
      pending.push_back(normalize_sign(*exact_divide(p, *f)));
    } else {
      factors.push_back(p);
    }
  }
  std::sort(factors.begin(), factors.end(),
            [](const IntPolynomial& a, const IntPolynomial& b) {
              if (a.degree() != b.degree()) return a.degree() < b.degree();
              return a.coefficients() < b.coefficients();
            });
  IntPolynomial product{1};
  for (const auto& f : factors) product = product * f;
  if (!(product == h)) throw Anomaly("factor_over_z: factors do not multiply back");
  return factors;
}

// ---------------------------------------------------------------------------
// Text form

std::vector<BigInt> parse_integer_list(std::string_view csv) {
  std::vector<BigInt> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = csv.find(',', pos);
    std::string_view tok = csv.substr(pos, comma == std::string_view::npos ? csv.size() - pos : comma - pos);
    while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
    std::string_view digits = tok;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw InvalidArgument("not an integer list: '" + std::string(csv) + "'");
    }
    if (tok.front() == '+') tok.remove_prefix(1);
    out.emplace_back(std::string(tok));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string format_integer_list(const std::vector<BigInt>& values,
                                std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += separator;
    out += values[i].str();
  }
  return out;
}

std::string format_polynomial(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  return format_integer_list(p.coefficients());
}

}  // namespace upho
