#pragma once

#include <stdexcept>
#include <string>

namespace discofit {

enum class errc {
  zero_at_origin,
  non_finite,
  length_mismatch,
  empty_input,
  invalid_baseline,
  too_few_points,
  duplicate_inputs,
  not_a_jump,
  singular_normal_equations,
  non_finite_loss,
  grid_too_large,
  ill_conditioned,
  dimension_mismatch,
  non_conforming_kernel,
  coincident_centers,
  budget_unreachable,
  unsupported_version,
  corrupt_file,
  spike_off_grid,
  parse_error,
  not_serializable,
  invalid_argument,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::zero_at_origin: return "ZeroAtOrigin";
    case errc::non_finite: return "NonFinite";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::empty_input: return "EmptyInput";
    case errc::invalid_baseline: return "InvalidBaseline";
    case errc::too_few_points: return "TooFewPoints";
    case errc::duplicate_inputs: return "DuplicateInputs";
    case errc::not_a_jump: return "NotAJump";
    case errc::singular_normal_equations: return "SingularNormalEquations";
    case errc::non_finite_loss: return "NonFiniteLoss";
    case errc::grid_too_large: return "GridTooLarge";
    case errc::ill_conditioned: return "IllConditioned";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::non_conforming_kernel: return "NonConformingKernel";
    case errc::coincident_centers: return "CoincidentCenters";
    case errc::budget_unreachable: return "BudgetUnreachable";
    case errc::unsupported_version: return "UnsupportedVersion";
    case errc::corrupt_file: return "CorruptFile";
    case errc::spike_off_grid: return "SpikeOffGrid";
    case errc::parse_error: return "ParseError";
    case errc::not_serializable: return "NotSerializable";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace discofit
