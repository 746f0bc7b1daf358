#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "depthlab/errors.hpp"

namespace depthlab {

// Clocked partial function N -> N. `value(x)` is the function value and
// `conv_stage(x)` the stage at which that value becomes visible to the
// stage loop: phi_{i,s}(x) converges iff conv_stage(x) <= s.
//
// Kinds:
//   affine     value(x) = value_a*x + value_b,
//              conv_stage(x) = (stage_a*x + stage_b) / stage_div (floor).
//              stage_a >= 1 is required so that {x : conv_stage(x) <= s}
//              is finite for every s (a clocked total function must have
//              finite stage-s approximations).
//   table      finite explicit list of (x, value, stage); divergent
//              elsewhere.
//   divergent  defined nowhere.
struct phi_spec {
  enum class kind_t { affine, table, divergent };

  struct table_entry {
    std::uint64_t x;
    std::uint64_t value;
    std::uint64_t stage;
  };

  kind_t kind = kind_t::divergent;
  bool declared_order = false;

  std::uint64_t value_a = 0, value_b = 0;
  std::uint64_t stage_a = 1, stage_b = 0, stage_div = 1;

  std::vector<table_entry> entries;  // sorted by x, strictly increasing

  std::optional<std::uint64_t> value(std::uint64_t x) const;
  std::optional<std::uint64_t> conv_stage(std::uint64_t x) const;

  bool converged_by(std::uint64_t x, std::uint64_t s) const {
    const auto st = conv_stage(x);
    return st.has_value() && *st <= s;
  }

  // Step count charged by the self-delimiting wrapper for computing
  // phi at x: every computation costs at least one step.
  std::optional<std::uint64_t> steps(std::uint64_t x) const {
    const auto st = conv_stage(x);
    if (!st) return std::nullopt;
    return *st < 1 ? 1 : *st;
  }

  // Throws config_error on an invalid spec. An order declaration is only
  // accepted for affine specs with value_a >= 1 (non-decreasing and
  // unbounded); finite tables cannot certify unboundedness.
  void validate(const std::string& context) const;
};

}  // namespace depthlab
