// Copyright 2026 The riva Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace riva {

// Typed failure conditions. Grouped so a front end can map them to
// coarse exit classes (config / data / numerics).
enum class errc {
  // configuration
  invalid_config,
  // data and invariants
  missing_file,
  unwritable_path,
  parse_error,
  non_positive_price,
  duplicate_slot,
  unsorted_input,
  invalid_slot,
  wrong_stage,
  length_mismatch,
  slot_missing_in_pattern,
  insufficient_data,
  zero_variance,
  tau_out_of_range,
  too_few_exceedances,
  degenerate_sample,
  insufficient_tail,
  undefined_rate,
  // numerics
  invalid_params,
  numeric_failure,
  all_fits_failed,
};

std::string_view errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

inline std::string_view errc_name(errc code) {
  switch (code) {
    case errc::invalid_config: return "InvalidConfig";
    case errc::missing_file: return "MissingFile";
    case errc::unwritable_path: return "UnwritablePath";
    case errc::parse_error: return "ParseError";
    case errc::non_positive_price: return "NonPositivePrice";
    case errc::duplicate_slot: return "DuplicateSlot";
    case errc::unsorted_input: return "UnsortedInput";
    case errc::invalid_slot: return "InvalidSlot";
    case errc::wrong_stage: return "WrongStage";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::slot_missing_in_pattern: return "SlotMissingInPattern";
    case errc::insufficient_data: return "InsufficientData";
    case errc::zero_variance: return "ZeroVariance";
    case errc::tau_out_of_range: return "TauOutOfRange";
    case errc::too_few_exceedances: return "TooFewExceedances";
    case errc::degenerate_sample: return "DegenerateSample";
    case errc::insufficient_tail: return "InsufficientTail";
    case errc::undefined_rate: return "UndefinedRate";
    case errc::invalid_params: return "InvalidParams";
    case errc::numeric_failure: return "NumericFailure";
    case errc::all_fits_failed: return "AllFitsFailed";
  }
  return "UnknownError";
}

}  // namespace riva
