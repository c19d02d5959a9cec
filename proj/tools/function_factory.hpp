#pragma once

#include "config.hpp"
#include "lseries/test_functions.hpp"

namespace lseries::tool {

/// Builds the named function family on the given validity cell.
/// Combinators (sum, product, scaled) nest through "parts"/"part".
FunctionPtr build_function(const FunctionSpec& spec, const Polyannulus& cell);

}  // namespace lseries::tool
