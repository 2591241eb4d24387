#pragma once

#include "stratakit/group.hpp"

#include <filesystem>
#include <string_view>

namespace stratakit {

/// Parses an action-spec document:
///
///   {"n": 3,
///    "finite_generators": [[[1,0,0],[0,1,0],[0,0,-1]]],
///    "torus": {"blocks": [[1,2]], "weights": [[1]]},
///    "tolerance": 1e-9, "group_cap": 256,
///    "invariants": [{"name": "j", "terms": {"1,0,0,0,1,0": 1, "0,1,0,1,0,0": -1}}],
///    "relations": [{"name": "r", "kind": "eq", "terms": {...}}],
///    "fixtures": {"regions": "double-cone"}}
///
/// Matrix entries and coefficients are integers or "p/q" strings; blocks are
/// 1-based coordinate pairs. Syntax errors carry line and column; schema errors
/// name the offending field. Declared invariants are checked on load and a
/// non-invariant one raises NonInvariantPolynomial.
ActionSpec load_spec(std::string_view text);
ActionSpec load_spec_file(const std::filesystem::path& path);

} // namespace stratakit
