#include "depthlab/phi.hpp"

#include <algorithm>

namespace depthlab {

std::optional<std::uint64_t> phi_spec::value(std::uint64_t x) const {
  switch (kind) {
    case kind_t::affine:
      return value_a * x + value_b;
    case kind_t::table: {
      const auto it = std::lower_bound(
          entries.begin(), entries.end(), x,
          [](const table_entry& e, std::uint64_t key) { return e.x < key; });
      if (it == entries.end() || it->x != x) return std::nullopt;
      return it->value;
    }
    case kind_t::divergent:
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> phi_spec::conv_stage(std::uint64_t x) const {
  switch (kind) {
    case kind_t::affine:
      return (stage_a * x + stage_b) / stage_div;
    case kind_t::table: {
      const auto it = std::lower_bound(
          entries.begin(), entries.end(), x,
          [](const table_entry& e, std::uint64_t key) { return e.x < key; });
      if (it == entries.end() || it->x != x) return std::nullopt;
      return it->stage;
    }
    case kind_t::divergent:
      return std::nullopt;
  }
  return std::nullopt;
}

void phi_spec::validate(const std::string& context) const {
  if (kind == kind_t::affine) {
    if (stage_div == 0) {
      throw config_error(context + ": stage_div must be >= 1");
    }
    if (stage_a == 0) {
      throw config_error(context +
                         ": affine phi needs stage_a >= 1 (stage-s approximations "
                         "must have finite domains)");
    }
    if (declared_order && value_a == 0) {
      throw config_error(context + ": declared order function must be unbounded (value_a >= 1)");
    }
  } else {
    if (declared_order) {
      throw config_error(context + ": only affine specs can be declared order functions");
    }
    if (kind == kind_t::table) {
      for (std::size_t k = 1; k < entries.size(); ++k) {
        if (entries[k].x <= entries[k - 1].x) {
          throw config_error(context + ": table entries must be strictly increasing in x");
        }
      }
    }
  }
}

}  // namespace depthlab
