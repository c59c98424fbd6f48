#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "gme/tensor_core.hpp"

namespace gme {

using AnyState = std::variant<PureState, DensityMatrix>;

/// Malformed document or a state that fails validation. Budget overruns stay std::length_error.
class StateParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"dims": [...], "kind": "pure"|"mixed", "data": ...} with complex entries as [re, im].
AnyState parse_state(const std::string& text);
AnyState read_state_file(const std::string& path);

std::string serialize_state(const AnyState& state);
void write_state_file(const std::string& path, const AnyState& state);

DensityMatrix as_density(const AnyState& state);
const Space& space_of(const AnyState& state);

}  // namespace gme
