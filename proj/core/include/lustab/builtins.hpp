#pragma once

#include "lustab/majorana.hpp"
#include "lustab/state.hpp"

namespace lustab {

/// Named 1-qubit states a..h used by the worked examples: poles, equatorial
/// axes, and the equilateral-triangle vertices.
SingleQubitState named_qubit_state(char name);

/// Builtin example states: "isoceles", "phi", "phi-prime", "tau", "m4",
/// "singlet", "ghz:n", "dicke:n,k", "product:n" (also accepts the
/// ghz(n)-style spelling). Throws ParseError for unknown names.
PureState builtin_state(const std::string& name);

}  // namespace lustab
