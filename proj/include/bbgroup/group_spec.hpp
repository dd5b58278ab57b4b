#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "bbgroup/oracle.hpp"

namespace bbgroup {

/// Parses a group-specification document:
///
///   {"backend": "perm",    "degree": 4, "generators": [[[1,2]], [[1,2,3,4]]]}
///   {"backend": "matrix",  "dim": 2, "field": {"p": 2, "k": 3, "poly": [1,1,0,1]},
///    "generators": [[[1,1],[0,1]], ...]}
///   {"backend": "moebius", "n": 3}
///
/// with an optional "exponent". Permutation generators are lists of 1-based
/// cycles; matrix generators are row-major (nested rows or flat) lists of
/// field indices, each index packing polynomial coefficients base p.
/// Throws Error(InvalidSpec).
BackendSpec parse_group_spec(std::string_view json_text);

BackendSpec load_group_spec(const std::string& path);

}  // namespace bbgroup
