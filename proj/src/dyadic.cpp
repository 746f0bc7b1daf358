#include "depthlab/dyadic.hpp"

#include <algorithm>

namespace depthlab {

void dyadic::normalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && (num_ & 1) == 0) {
    num_ >>= 1;
    --exp_;
  }
}

dyadic& dyadic::operator+=(const dyadic& rhs) {
  if (rhs.num_ == 0) return *this;
  const std::uint32_t e = std::max(exp_, rhs.exp_);
  integer a = num_ << (e - exp_);
  integer b = rhs.num_ << (e - rhs.exp_);
  num_ = a + b;
  exp_ = e;
  normalize();
  return *this;
}

int dyadic::compare(const dyadic& rhs) const {
  const std::uint32_t e = std::max(exp_, rhs.exp_);
  integer a = num_ << (e - exp_);
  integer b = rhs.num_ << (e - rhs.exp_);
  if (a < b) return -1;
  if (a > b) return 1;
  return 0;
}

std::string dyadic::to_string() const {
  if (exp_ == 0) return num_.str();
  return num_.str() + "/2^" + std::to_string(exp_);
}

std::optional<dyadic> dyadic::from_parts(const std::string& num_decimal, std::uint32_t exp) {
  try {
    integer n(num_decimal);
    if (n < 0) return std::nullopt;
    return dyadic(std::move(n), exp);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace depthlab
