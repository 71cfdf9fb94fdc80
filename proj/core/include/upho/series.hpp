#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace upho {

using BigInt = boost::multiprecision::cpp_int;

// Exact integer polynomial, constant term first, trailing zeros trimmed.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long long> coefficients);

  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  // Coefficient of x^i; zero past the degree.
  BigInt operator[](std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
  const std::vector<BigInt>& coefficients() const noexcept { return c_; }

  BigInt evaluate(const BigInt& x) const;
  bool has_unit_constant() const { return !c_.empty() && c_[0] == 1; }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> c_;
};

// Power series truncated to `order` coefficients (indices 0..order-1).
class IntSeries {
 public:
  IntSeries() = default;
  explicit IntSeries(std::vector<BigInt> coefficients) : c_(std::move(coefficients)) {}
  IntSeries(std::initializer_list<long long> coefficients);
  IntSeries(const IntPolynomial& p, std::size_t order);

  std::size_t order() const noexcept { return c_.size(); }
  const BigInt& operator[](std::size_t i) const { return c_.at(i); }
  const std::vector<BigInt>& coefficients() const noexcept { return c_; }

  friend bool operator==(const IntSeries&, const IntSeries&) = default;

 private:
  std::vector<BigInt> c_;
};

// Truncated to the shorter order.
IntSeries series_mul(const IntSeries& a, const IntSeries& b);
// 1/h to `order` coefficients; h must have constant term 1.
IntSeries series_reciprocal(const IntPolynomial& h, std::size_t order);
// g/h to `order` coefficients; h must have constant term 1.
IntSeries series_divide(const IntPolynomial& g, const IntPolynomial& h,
                        std::size_t order);

// Exact quotient a/b, or nullopt when b does not divide a over Z.
std::optional<IntPolynomial> exact_divide(const IntPolynomial& a,
                                          const IntPolynomial& b);

// Nonnegative, no internal zeros, a_i a_{i+2} <= a_{i+1}^2.
bool is_log_concave(const std::vector<BigInt>& a);
inline bool is_log_concave(const IntSeries& s) { return is_log_concave(s.coefficients()); }

struct ToeplitzMinor {
  std::vector<std::size_t> rows;  // 1-based
  std::vector<std::size_t> cols;  // 1-based
  BigInt determinant;
};

struct ToeplitzReport {
  bool accept = true;
  std::optional<ToeplitzMinor> witness;
  std::size_t window = 0;
  std::size_t max_order = 0;
  std::uint64_t minors_checked = 0;
};

// Every minor of order <= m of the window x window lower-triangular Toeplitz
// matrix T[i][j] = s_{i-j}. Minors are visited by (order, rows, cols) in
// lexicographic order; the first negative one is the witness. window = 0
// means 2m.
ToeplitzReport toeplitz_tp_check(const IntSeries& s, std::size_t m,
                                 std::size_t window = 0);

BigInt determinant(std::vector<std::vector<BigInt>> m);

enum class RootVerdict { all_negative, type_I, type_II, unit_root, mixed };
std::string_view to_string(RootVerdict v);

// Classification of the lambda_i in h(x) = prod (1 - lambda_i x).
struct RootClassification {
  bool all_real = false;
  std::size_t negative_count = 0;
  std::size_t positive_in_unit_count = 0;
  std::size_t unit_count = 0;
  std::size_t greater_than_one_count = 0;
  std::size_t degree = 0;
  RootVerdict verdict = RootVerdict::mixed;
};

RootClassification classify_roots(const IntPolynomial& h);

inline constexpr int kMaxFactorDegree = 8;

// Irreducible factors over Z with constant term 1, sorted by (degree,
// coefficients). Their product is exactly h.
std::vector<IntPolynomial> factor_over_z(const IntPolynomial& h,
                                         int max_degree = kMaxFactorDegree);

// "1,-3,1" <-> coefficient list.
std::vector<BigInt> parse_integer_list(std::string_view csv);
std::string format_integer_list(const std::vector<BigInt>& values,
                                std::string_view separator = ",");
std::string format_polynomial(const IntPolynomial& p);

}  // namespace upho
