#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "depthlab/bitstring.hpp"
#include "depthlab/phi.hpp"

namespace depthlab {

enum class run_status { halted, diverged_at_horizon };

struct run_outcome {
  run_status status = run_status::diverged_at_horizon;
  bit_string output;
  std::uint64_t steps = 0;

  bool halted() const { return status == run_status::halted; }

  static run_outcome halt(bit_string out, std::uint64_t steps) {
    return {run_status::halted, std::move(out), steps};
  }
  static run_outcome diverged(std::uint64_t horizon) {
    return {run_status::diverged_at_horizon, bit_string(), horizon};
  }
};

struct table_entry {
  bit_string input;
  bit_string output;
  std::uint64_t cost = 1;
};

enum class template_kind { copy, constant, pad };
enum class builtin_kind { chop_m, truncate_n, solovay_m };

// One roster member M_e. Interpreted machines: a finite table, a named
// template, or one of the built-ins used by the D-strategy budget
// argument and the settling-time analysis.
//
// Template cost model: copy takes |input|+1 steps, constant 1 step,
// pad(len, zeros) takes len+zeros steps. Built-ins charge exactly the
// steps of the universal run they simulate; their post-processing is
// folded into the dispatch constant kappa.
struct machine_spec {
  enum class kind_t { table, templated, builtin };

  std::uint32_t index = 0;  // e >= 1
  std::uint64_t kappa = 1;
  kind_t kind = kind_t::table;

  std::vector<table_entry> entries;

  template_kind tmpl = template_kind::copy;
  std::uint64_t copy_len = 0;
  bit_string const_out;
  std::uint64_t pad_len = 0;
  std::uint64_t pad_zeros = 0;

  builtin_kind builtin = builtin_kind::chop_m;
  std::uint32_t truncate_i = 0;

  // Throws config_error: table domains must be prefix-free, costs >= 1.
  void validate() const;
};

// The fixed optimal machine: dispatches program 0^{e-1}1 sigma to roster
// member M_e run on sigma. Reading the prefix costs e steps and dispatch
// costs kappa_e, so a halting run of M_e in t steps surfaces as a halting
// universal run in t + e + kappa_e steps. The effective domain at any
// step horizon is prefix-free provided every roster member's is.
class universal_machine {
 public:
  universal_machine() = default;
  explicit universal_machine(std::vector<machine_spec> roster,
                             std::uint64_t max_output_bits = 1ull << 16);

  std::uint32_t roster_size() const { return static_cast<std::uint32_t>(roster_.size()); }
  const machine_spec& machine(std::uint32_t e) const { return roster_.at(e - 1); }
  const std::vector<machine_spec>& roster() const { return roster_; }
  std::uint64_t max_output_bits() const { return max_output_bits_; }

  // First roster index carrying the given builtin (truncate_n is
  // per-tracked-i). nullopt when absent.
  std::optional<std::uint32_t> builtin_index(builtin_kind kind, std::uint32_t truncate_i = 0) const;

  run_outcome run_machine(const machine_spec& m, const bit_string& input,
                          std::uint64_t horizon) const;

  // Decode 0^{e-1}1 sigma and dispatch; all-zero programs diverge.
  run_outcome run(const bit_string& program, std::uint64_t horizon) const;

  // Horizon the dispatcher needs to simulate roster member e when e
  // itself runs t steps: t + e + kappa_e.
  std::uint64_t overhead_g(std::uint32_t e, std::uint64_t t) const;

  static std::optional<std::pair<std::uint32_t, bit_string>> decode_program(
      const bit_string& program);

 private:
  run_outcome run_builtin(const machine_spec& m, const bit_string& input,
                          std::uint64_t horizon) const;

  std::vector<machine_spec> roster_;
  std::uint64_t max_output_bits_ = 1ull << 16;
};

// Self-delimiting wrapper. Runs the dovetailing algorithm over a clocked
// spec: maintain a consumed prefix tau; in each round grant one more step
// to the computations phi(tau gamma_0), ..., phi(tau gamma_t); on the
// first convergence either halt (gamma = eps) with output phi(tau), or
// read one more input bit. Strings are identified with naturals through
// the canonical length-lex bijection on both sides.
struct sdm_outcome {
  run_outcome result;           // steps counts phi-substeps executed
  std::uint64_t consumed_bits = 0;
};

sdm_outcome sdm_wrap_run(const phi_spec& phi, const bit_string& input, std::uint64_t horizon);

// Exact evaluation of sum_{i=1}^{len+1} sum_{j=1}^{2^i+s-2} j, the
// wrapper's substep budget for consuming len bits when the wrapped
// function itself takes s >= 1 steps.
std::uint64_t sdm_step_bound(std::uint64_t sigma_len, std::uint64_t s);

}  // namespace depthlab
