#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crossint/bigint.hpp"
#include "crossint/structure.hpp"

namespace crossint {

struct Sequence {
    std::vector<int> elements;  // in the order they were added
    SubsetWord set;
    BigRational weight;
};

struct BranchState {
    std::vector<Sequence> live;
    std::vector<Sequence> finished;
    int stage = 0;

    BigRational total_weight() const;
};

/// Picks one of `violators` (non-empty, lex-sorted) for `seq` at `stage`;
/// returns its index.
using BranchPolicy =
    std::function<std::size_t(const Sequence& seq, const std::vector<SubsetWord>& violators, int stage)>;

BranchPolicy lex_policy();
BranchPolicy random_policy(std::uint64_t seed);
/// "lex" or "random:<seed>".
BranchPolicy parse_policy(const std::string& spec);

/// Members of `candidates` that `seq` meets in fewer than t elements, chosen
/// by `policy`; nullopt when there is none (the sequence finishes).
std::optional<SubsetWord> branch_policy(const Sequence& seq, const Family& candidates, int t, int stage,
                                        const BranchPolicy& policy);

struct BranchReport {
    int t = 0;
    int k = 0;
    int s1 = 0;
    std::optional<int> r1;  // nullopt: second stage omitted
    int stages = 0;
    std::vector<BigRational> stage_weight_sums;
    bool weight_conserved = true;

    std::vector<Sequence> survivors;
    std::map<int, std::size_t> survivors_by_length;
    std::map<int, BigRational> mass_by_length;

    /// Each B2 member in the cover range, with the index of the first survivor
    /// whose underlying set equals it (or nullopt).
    std::vector<std::pair<SubsetWord, std::optional<std::size_t>>> cover;
    bool cover_ok = true;

    /// Every survivor of length l weighs at least the bound from the proof.
    bool weight_bound_ok = true;

    BigRational lhs14;  // zero when r1 is absent
    BigRational lhs15;
};

/// Runs the weighted branching process of B1 against itself and checks the
/// results against B2. With r1 set, the second stage branches over
/// B1^(<= r1); without it, the second stage is omitted and every stage after
/// the first uses all of B1. Throws precondition_error when s(B1) < t+1,
/// r1 is outside [s(B1), k], some t-set is a t-transversal of B1^(<= r1)
/// (the message names it), or B1, B2 are not cross t-intersecting.
BranchReport run_branching(const Basis& b1, const Basis& b2, std::optional<int> r1, int t, int k,
                           const BranchPolicy& policy = lex_policy());

/// Sum over r1 <= l <= k of |B2^(l)| / (C(s1,t) r1 k^(l-t-1)).
BigRational lhs_inequality_14(const Basis& b1, const Basis& b2, int r1, int t, int k);
/// Sum over s1 <= l <= k of |B2^(l)| / (C(s1,t) k^(l-t)).
BigRational lhs_inequality_15(const Basis& b1, const Basis& b2, int t, int k);

/// Smallest r with tau_t(B^(<= r)) >= t+1, if any.
std::optional<int> min_r_for_cover(const Basis& b, int t);

}  // namespace crossint
