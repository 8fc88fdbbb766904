#pragma once

#include "recollement/algebra.hpp"

#include <string>
#include <vector>

namespace recoll {

/// Names of the built-in algebras, in catalog order.
const std::vector<std::string>& builtin_names();

/// Construct a built-in algebra by name; throws NotFound for unknown names.
AlgebraPtr builtin_algebra(const std::string& name);

bool is_builtin(const std::string& name);

} // namespace recoll
