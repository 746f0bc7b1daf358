#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace depthlab {

// Exact non-negative dyadic rational num / 2^exp. Request-set weights and
// Kraft sums are accumulated in this type; no floating point appears
// anywhere in a weight computation. Normalized: num odd, or num == 0 with
// exp == 0.
class dyadic {
 public:
  using integer = boost::multiprecision::cpp_int;

  dyadic() = default;

  static dyadic zero() { return dyadic(); }
  static dyadic one() { return dyadic(1, 0); }
  // 2^{-w}
  static dyadic pow2_neg(std::uint32_t w) { return dyadic(1, w); }

  dyadic(integer num, std::uint32_t exp) : num_(std::move(num)), exp_(exp) { normalize(); }

  const integer& num() const { return num_; }
  std::uint32_t exp() const { return exp_; }
  bool is_zero() const { return num_ == 0; }

  dyadic& operator+=(const dyadic& rhs);
  friend dyadic operator+(dyadic lhs, const dyadic& rhs) {
    lhs += rhs;
    return lhs;
  }

  int compare(const dyadic& rhs) const;
  bool operator==(const dyadic& rhs) const { return compare(rhs) == 0; }
  bool operator<(const dyadic& rhs) const { return compare(rhs) < 0; }
  bool operator<=(const dyadic& rhs) const { return compare(rhs) <= 0; }
  bool operator>(const dyadic& rhs) const { return compare(rhs) > 0; }
  bool operator>=(const dyadic& rhs) const { return compare(rhs) >= 0; }

  // "num/2^exp" with num in decimal; integers print as plain numbers.
  std::string to_string() const;

  std::string num_decimal() const { return num_.str(); }
  static std::optional<dyadic> from_parts(const std::string& num_decimal, std::uint32_t exp);

 private:
  void normalize();

  integer num_ = 0;
  std::uint32_t exp_ = 0;
};

}  // namespace depthlab
