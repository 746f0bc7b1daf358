#include "depthlab/bitstring.hpp"

namespace depthlab {

std::optional<bit_string> bit_string::parse(std::string_view text) {
  for (char c : text) {
    if (c != '0' && c != '1') return std::nullopt;
  }
  return bit_string(std::string(text));
}

bit_string nth_string(std::uint64_t n) {
  std::uint64_t v = n + 1;
  // Number of bits of v, minus the leading 1.
  int len = 63 - __builtin_clzll(v);
  std::string bits(static_cast<std::size_t>(len), '0');
  for (int i = 0; i < len; ++i) {
    bits[static_cast<std::size_t>(len - 1 - i)] = static_cast<char>('0' + ((v >> i) & 1));
  }
  return bit_string(std::move(bits));
}

std::optional<std::uint64_t> string_index(const bit_string& s) {
  if (s.size() > 62) return std::nullopt;
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    v = (v << 1) | static_cast<std::uint64_t>(s.bit(i));
  }
  return v - 1;
}

}  // namespace depthlab
