#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "upho/congruence.hpp"
#include "upho/presentation.hpp"
#include "upho/series.hpp"

namespace upho {

// Dense exact integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  IntMatrix power(std::size_t e) const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

// h = 1 + sum (-1)^i h_i x^i  ->  (h_1, ..., h_n).
std::vector<BigInt> signed_coefficients(const IntPolynomial& h);

// First row (h_1, -h_2, ..., (-1)^{n+1} h_n), ones on the subdiagonal.
IntMatrix companion_matrix(const IntPolynomial& h);

struct ChangeOfBasis {
  IntMatrix a;
  IntMatrix b;
};
// Binomial matrices with A B = I.
ChangeOfBasis change_of_basis(std::size_t n);

// l_i by the closed binomial formula only.
std::vector<BigInt> l_values_closed_form(const IntPolynomial& h);

// L = B H A.
IntMatrix l_matrix(const IntPolynomial& h);

// Closed-form l_i, cross-checked against the first row of L = B H A, the
// lower-triangular ones pattern of rows 2..n, and (1...1) L^i e_1 = c_i for
// i <= 8. Throws Anomaly on any disagreement.
std::vector<BigInt> l_values(const IntPolynomial& h);

// e_1^T H^i e_1 and (1...1) L^i e_1 for i < order.
std::vector<BigInt> companion_coefficients(const IntPolynomial& h, std::size_t order);
std::vector<BigInt> l_matrix_coefficients(const IntPolynomial& h, std::size_t order);

// Head-changing presentation for a type II denominator. Generators
// x1_1..x1_{l_1}, x2_1, ..., x{n}_1 unless `prefix` is given.
Presentation build_type2_monoid(const IntPolynomial& h, std::string_view prefix = "x");

// Chain <t> convolved with the greedy 0-monoid of (1 - x)/h.
Presentation build_type1_monoid(const IntPolynomial& h, std::size_t depth,
                                std::uint64_t budget = default_budget());

enum class Route { linear, type_I, type_II };
std::string_view to_string(Route r);

struct RoutingEntry {
  IntPolynomial factor;
  Route route;
};

struct TpCertificate {
  IntPolynomial g;
  IntPolynomial h;
  std::vector<RoutingEntry> routing;
  Presentation presentation;
  std::size_t depth = 0;
  std::vector<BigInt> target;
  std::vector<BigInt> enumerated;
  bool pass = false;
};

inline constexpr std::size_t kDefaultTpDepth = 6;

TpCertificate build_tp_monoid(const IntPolynomial& g, const IntPolynomial& h,
                              std::size_t depth = kDefaultTpDepth,
                              std::uint64_t budget = default_budget());

std::string certificate_json(const TpCertificate& cert);
TpCertificate parse_certificate(std::string_view json_text);

struct CertificateCheck {
  bool pass = false;
  std::vector<std::string> problems;
};

// Re-derives the target from g/h and re-enumerates the embedded presentation.
CertificateCheck verify_certificate(const TpCertificate& cert,
                                    std::uint64_t budget = default_budget());

}  // namespace upho
