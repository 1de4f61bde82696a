#pragma once

#include <map>
#include <string>
#include <vector>

#include "crossint/bounds.hpp"
#include "crossint/subset.hpp"

namespace crossint::app {

/// Parameter grid: "key=value,key=value". A value is a single number, an
/// inclusive integer range "a..b", or a list "x;y;z". For n, the tokens
/// "min" and "min+<d>" refer to the smallest admissible n at each point.
using Grid = std::map<std::string, std::vector<std::string>>;

Grid parse_grid(const std::string& spec);

inline const std::vector<std::string> kIneqChecks = {"key",       "key2",   "key3",   "key4",  "hilton-sum",
                                                     "cor-sum",   "f87",    "mono:f", "mono:g", "mono:h",
                                                     "mono:phi"};

/// Evaluates `check` at every grid point. Keys left out of `grid` take the
/// standard side-condition grid for that check (t in {2,3}, k in 5..8,
/// the c values used in the proofs, n minimal admissible and minimal + 10).
std::vector<IneqReport> run_ineq_grid(const std::string& check, const Grid& grid);

/// Grid points for the HMF table; the default is the reference list
/// (6,3,2), (7,3,2), (8,3,2), (9,3,2), (8,4,3).
std::vector<GroundParams> hmf_grid(const Grid& grid);

}  // namespace crossint::app
