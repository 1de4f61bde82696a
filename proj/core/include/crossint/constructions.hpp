#pragma once

#include <optional>
#include <vector>

#include "crossint/bigint.hpp"
#include "crossint/family.hpp"

namespace crossint {

/// Hilton-Milner type family: k-sets containing [t] and meeting [t+1, k+1],
/// together with the t sets [k+1] \ {j}, 1 <= j <= t.
Family build_H(int n, int k, int t);

/// Frankl type family: k-sets meeting [t+2] in at least t+1 elements.
Family build_A(int n, int k, int t);

/// t + C(n-t, k-t) - C(n-k-1, k-t)
BigInt size_H(int n, int k, int t);

/// (t+2) C(n-t-2, k-t-1) + C(n-t-2, k-t-2)
BigInt size_A(int n, int k, int t);

/// The full star {F in C([n], k) : center ⊆ F}.
Family build_star(int n, int k, SubsetWord center);

/// If every pairwise intersection of members equals one set C with
/// |C| == center_size, returns C. Needs at least two members; a single set
/// has no well-defined center and yields nullopt.
std::optional<SubsetWord> sunflower_check(const Family& f, int center_size);

/// Searches `f` for a sub-sunflower with `petals` members whose center has
/// exactly `center_size` elements. Returns the petal sets if one exists.
std::optional<std::vector<SubsetWord>> find_sunflower(const Family& f, int petals, int center_size);

}  // namespace crossint
