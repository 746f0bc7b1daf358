#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace depthlab {

// Finite binary word. The universal currency of the lab: programs,
// machine outputs, and initial segments of the constructed set are all
// bit strings. Stored as ASCII '0'/'1' so trace serialization is the
// identity; the empty string serializes as an empty text field.
class bit_string {
 public:
  bit_string() = default;
  explicit bit_string(std::string bits) : bits_(std::move(bits)) {}

  static bit_string zeros(std::size_t n) { return bit_string(std::string(n, '0')); }

  // Parses '0'/'1' text; rejects anything else.
  static std::optional<bit_string> parse(std::string_view text);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  int bit(std::size_t i) const { return bits_[i] - '0'; }

  void push_back(int b) { bits_.push_back(b ? '1' : '0'); }
  void append_zeros(std::size_t n) { bits_.append(n, '0'); }

  bit_string prefix(std::size_t n) const { return bit_string(bits_.substr(0, n)); }
  bit_string suffix_from(std::size_t n) const { return bit_string(bits_.substr(n)); }

  bool is_prefix_of(const bit_string& other) const {
    return bits_.size() <= other.bits_.size() &&
           other.bits_.compare(0, bits_.size(), bits_) == 0;
  }

  bit_string operator+(const bit_string& rhs) const { return bit_string(bits_ + rhs.bits_); }

  bool operator==(const bit_string&) const = default;
  // Plain lexicographic order (same-length strings only get this applied
  // in practice; use length_lex_less for the canonical total order).
  auto operator<=>(const bit_string& rhs) const { return bits_ <=> rhs.bits_; }

  const std::string& text() const { return bits_; }

 private:
  std::string bits_;
};

// Length-lexicographic order: shorter first, lex within a length.
// Total on {0,1}*.
inline bool length_lex_less(const bit_string& a, const bit_string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.text() < b.text();
}

struct length_lex_cmp {
  bool operator()(const bit_string& a, const bit_string& b) const {
    return length_lex_less(a, b);
  }
};

// nth string of {0,1}* in length-lex order: write n+1 in binary and drop
// the leading 1. Bijection N -> {0,1}*: 0 -> eps, 1 -> "0", 2 -> "1",
// 3 -> "00", ...
bit_string nth_string(std::uint64_t n);

// Inverse of nth_string. Only defined for strings of at most 62 bits
// (the index must fit in uint64); longer strings return nullopt.
std::optional<std::uint64_t> string_index(const bit_string& s);

}  // namespace depthlab
