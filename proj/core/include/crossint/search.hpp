#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crossint/bigint.hpp"
#include "crossint/family.hpp"

namespace crossint {

enum class SearchMode { single_t_intersecting, pair_cross_t, pair_cross_1_pyber };

std::string to_string(SearchMode mode);

/// Node limit and wall-clock limit; whichever is hit first ends the search.
struct Budget {
    std::optional<std::uint64_t> max_nodes;
    std::optional<double> max_seconds;
};

struct SearchProblem {
    GroundParams params;
    SearchMode mode = SearchMode::single_t_intersecting;
    bool nontrivial = true;
    bool saturated = false;  // pair modes search saturated pairs regardless
    Budget budget;

    /// Throws precondition_error for inconsistent combinations: Pyber mode
    /// needs t = 1, nontrivial = false and n >= 2k.
    void validate() const;
};

struct SearchResult {
    BigInt optimum;  // -1 when nothing feasible was found
    std::vector<Family> witnesses;
    std::uint64_t nodes_explored = 0;
    std::uint64_t bound_cuts = 0;
    bool exhaustive = true;
    std::string method;
};

/// Largest t-intersecting family of k-sets of [n], optionally non-trivial.
/// Branch and bound over families containing [k]: include-first depth-first
/// search in lex order, pruned by a greedy-colouring clique bound and, for
/// the non-trivial case, by the common intersection of what remains. The
/// witness is the lex-least optimal family containing [k].
SearchResult max_t_intersecting(int n, int k, int t, bool nontrivial, const Budget& budget = {});
SearchResult max_nontrivial_t_intersecting(int n, int k, int t, const Budget& budget = {});

/// Largest |F||G| over cross t-intersecting pairs (non-trivial on both sides
/// when asked). Optimal pairs may be taken saturated, so the search runs over
/// all saturated pairs; the witness is the lex-least optimal (F, G).
SearchResult max_product_cross(int n, int k, int t, bool nontrivial, const Budget& budget = {});
SearchResult max_product_nontrivial_cross(int n, int k, int t, const Budget& budget = {});

/// Largest |F||G| over cross-intersecting pairs with n >= 2k. For n > 2k the
/// search runs over lex size pairs (Hilton's Lemma); at n = 2k it falls back
/// to max_product_cross.
SearchResult max_product_cross_1(int n, int k, const Budget& budget = {});

SearchResult solve(const SearchProblem& problem);

/// Re-checks the witnesses against the problem constraints and the optimum.
bool witnesses_valid(const SearchProblem& problem, const SearchResult& result);

struct HmfRow {
    int n = 0;
    int k = 0;
    int t = 0;
    BigInt optimum;
    BigInt size_a;
    BigInt size_h;
    bool exhaustive = true;

    bool equal() const { return optimum == std::max(size_a, size_h); }
};

/// Single-family search against max{|A(n,k,t)|, |H(n,k,t)|} at every point;
/// rejects points with n < (k-t+1)(t+1).
std::vector<HmfRow> hmf_table(const std::vector<GroundParams>& grid, const Budget& budget = {});

}  // namespace crossint
