#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crossint/family.hpp"

namespace crossint {

bool is_t_intersecting(const Family& f, int t);
bool is_cross_t_intersecting(const Family& f, const Family& g, int t);
/// Every cross pair meets in exactly t elements.
bool is_exact_cross_t_intersecting(const Family& a, const Family& b, int t);
/// |common_intersection(f)| < t. Throws on an empty family.
bool is_nontrivial(const Family& f, int t);

/// True iff |s ∩ F| >= t for every member F.
bool is_t_transversal(SubsetWord s, const Family& f, int t);

/// All `size`-subsets T of [n] with |T ∩ F| >= t for every F in f.
Family t_transversals(const Family& f, int t, int size);

/// Minimum size of a t-transversal. The search stops at `max_size`, which
/// defaults to the uniformity of `f` (or n for a mixed family); finding
/// nothing by then throws infeasible_error.
int tau_t(const Family& f, int t, std::optional<int> max_size = std::nullopt);

/// Inclusion-minimal t-transversals of a target family, truncated at size k.
struct Basis {
    Family members;  // mixed family over the target's ground
    int t = 0;
    int k = 0;
    int s = 0;  // smallest member size (0 when empty)
    std::map<int, std::size_t> layers;

    /// Members of exactly this size.
    Family layer(int size) const { return members.layer(size); }
    /// Members of size at most r.
    Family up_to(int r) const { return members.up_to(r); }
    std::size_t layer_count(int size) const;
    bool is_antichain() const;

    static Basis from_members(Family members, int t, int k);
};

Basis compute_basis(const Family& target, int t, int k);

/// A cross t-intersecting pair closed under adding k-sets on either side,
/// together with both bases: basis_F = minimal t-transversals of G (so F is
/// recovered from it) and basis_G = minimal t-transversals of F.
struct SaturatedPair {
    Family F;
    Family G;
    int t = 0;
    Basis basis_F;
    Basis basis_G;

    bool is_nontrivial() const;
};

/// Replaces F by T_t^(k)(G), then G by T_t^(k)(F), repeating until neither
/// changes. F and G must be non-empty, k-uniform over the same ground and
/// cross t-intersecting.
SaturatedPair saturate(const Family& F, const Family& G, int t);

/// All k-subsets of [n] containing some basis member.
Family reconstruct_from_basis(const Basis& b, int n, int k);

/// Splits f by the size of the largest basis member each member contains.
std::map<int, Family> partition_by_basis_rank(const Family& f, const Basis& b);

/// Which clauses of the exact-pair trichotomy hold for a pair (A, B) of
/// (t+1)-uniform exact cross t-intersecting families:
///   i   |A| <= 2, |B| <= k+1, tau_t(B) >= t+1, or the same with A, B swapped
///   ii  A ∪ B is a sunflower whose center has t elements
///   iii |A||B| <= (t+2)^2 / 2
struct ClauseSet {
    bool case_i = false;
    bool case_ii = false;
    bool case_iii = false;

    bool any() const { return case_i || case_ii || case_iii; }
    std::vector<std::string> names() const;
};

ClauseSet classify_exact_pair(const Family& a, const Family& b, int t, int k);

/// Outcome of checking the two structural facts about exact pairs:
///   fact 1: two members of one side meet in t-1 or t elements
///   fact 2: if they meet in t-1 elements, that intersection lies in every
///           member of the other side
struct ExactFactsReport {
    bool fact1 = true;
    bool fact2 = true;
    std::vector<SubsetWord> witness;  // the offending sets, if any
    std::string detail;

    bool ok() const { return fact1 && fact2; }
};

/// Throws precondition_error unless (a, b) are non-empty, (t+1)-uniform and
/// exact cross t-intersecting. Both sides are checked.
ExactFactsReport check_exact_facts(const Family& a, const Family& b, int t);

}  // namespace crossint
