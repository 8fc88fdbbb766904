#pragma once

#include "recollement/algebra.hpp"

#include <string>

namespace recoll {

/// Parse an algebra document (JSON, // and /* */ comments allowed).
///
/// Structure-constant form:
///   { "kind": "structure_constants", "p": 2,
///     "basis": ["e11", "e12", "e22"],
///     "unit": [1, 0, 1],                 // or {"e11": 1, "e22": 1}
///     "table": [[[..dim ints..], ...], ...] }   // table[i][j] = b_i * b_j
///
/// Quiver form:
///   { "kind": "quiver", "p": 2,
///     "vertices": ["v1", "v2"],
///     "arrows": [["a", "v1", "v2"], ...],
///     "relations": [[{"coeff": 1, "path": ["a", "b"]}, ...], ...],
///     "nilpotency_cap": 3 }
/// A relation term may also be a bare path array (coefficient 1).
///
/// Malformed documents raise ParseError with line/column detail.
AlgebraPtr parse_algebra_text(const std::string& text);

AlgebraPtr load_algebra_file(const std::string& path);

/// Resolve a built-in name or a file path.
AlgebraPtr resolve_algebra(const std::string& name_or_path);

/// Element expressions over the named basis: "e11 + e22", "2*x + y", "1"
/// (the unit), "0". Coefficients are reduced mod p.
Element parse_element_expr(const Algebra& a, const std::string& expr);

} // namespace recoll
