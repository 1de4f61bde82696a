#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "crossint/bigint.hpp"
#include "crossint/family.hpp"

namespace crossint {

/// One inequality lhs <= rhs (or lhs < rhs when strict) in a displayed chain.
struct IneqLink {
    std::string label;
    BigRational lhs;
    BigRational rhs;
    bool strict = false;
    bool identity = false;  // an exact equality, encoded as |a - b| <= 0

    bool holds() const { return strict ? lhs < rhs : lhs <= rhs; }
};

struct IneqReport {
    std::string check;
    std::vector<std::pair<std::string, std::string>> params;
    BigRational lhs;  // left end of the chain
    BigRational rhs;  // right end of the chain
    bool strict = false;
    bool verdict = false;  // every link holds
    BigRational slack;     // rhs - lhs
    std::vector<IneqLink> links;
    std::vector<BigInt> witness;  // e.g. the optimal size vector
    std::string note;
};

/// Builds a report whose verdict is the conjunction of `links`.
IneqReport make_report(std::string check, std::vector<std::pair<std::string, std::string>> params,
                       std::vector<IneqLink> links);

/// Cross-intersection table for lex-initial families L(m, a, x), L(m, b, y).
/// compatible(x, y) is decided from the materialized sets: for every b-set
/// T_j we record the position of the first a-set disjoint from it.
class LexCrossTable {
public:
    LexCrossTable(int m, int a, int b);

    std::size_t count_a() const { return count_a_; }
    std::size_t count_b() const { return count_b_; }
    /// L(m,a,x) and L(m,b,y) are cross-intersecting; x or y may be 0.
    bool compatible(std::size_t x, std::size_t y) const;

private:
    std::size_t count_a_;
    std::size_t count_b_;
    std::vector<std::size_t> prefix_min_;  // prefix_min_[y]: min over j <= y of first disjoint position
};

/// Hilton's Lemma on one instance: whether L(n,a,|A|), L(n,b,|B|) are
/// cross-intersecting. Requires uniform A, B over the same ground,
/// n > a + b, and A, B cross-intersecting.
bool hilton_compress_check(const Family& a, const Family& b);

/// max{(t+1) C(m-1,a-1), C(m,a) - C(m-a,a) + t}; requires m >= (t+1)a.
BigInt hilton_sum_rhs(int m, int a, int t);

/// Largest |K_1| + ... + |K_{t+1}| over pairwise cross-intersecting lex
/// families on [m], at least two non-empty, against hilton_sum_rhs.
IneqReport verify_hilton_sum(int m, int a, int t);
/// Largest |K_1| + t|K_2| over non-empty cross-intersecting lex pairs with
/// |K_1| >= |K_2|, against hilton_sum_rhs.
IneqReport verify_cor_sum(int m, int a, int t);
/// Largest |K_1| + |K_2| over cross-intersecting pairs with
/// |K_1| >= |K_2| >= C(m-2,a-2), against 2 C(m-1,a-1). For m > 2a the search
/// runs over lex pairs; at m = 2a, where Hilton's Lemma does not apply, it
/// enumerates saturated pairs instead.
IneqReport verify_f87(int m, int a);

/// C(n-i,k) >= (n-ik)/n C(n,k) for n > ik.
IneqReport check_key(int n, int k, int i);
/// The three-link chain bounding C(n-t-1,k-t-1) by c/(c-1) C(n-k-1,k-t-1);
/// requires c > 1 and n >= c(k-t)^2 + t + 1.
IneqReport check_key2(int n, int k, int t, const BigRational& c);
/// The squared chain ending in c/(c-2); requires c > 2 and the same n.
IneqReport check_key3(int n, int k, int t, const BigRational& c);
/// C(n-t-1,k-t-1)^2 <= c/(c-2) C(n-t-2,k-t-1)^2 for n >= ck, c > 2.
IneqReport check_key4(int n, int k, int t, const BigRational& c);

enum class MonoKind { f, g, h, phi };

/// The ratio and monotonicity claims of the auxiliary functions:
///   f    k^(l-t) C(n-l,k-l): ratio k(k-l)/(n-l) <= 1, l in [t+1, k], n >= k^2
///   g    C(s,t) k^(s-t) C(n-s,k-s): ratio < 1, s in [t+2, k], n >= t k^2
///   h    (t+1)^2 k^(l-t-1) C(n-l,k-l): ratio < 1, l in [t+2, k], n >= k^2
///   phi  C(n-t,k-t) - C(n-k-1+x,k-t) + x^2 C(n-t-2,k-t-2): strictly
///        decreasing on integers x in [1, k-t], n >= 4k^2
/// Each ratio is computed from the definition and compared with its closed
/// form.
IneqReport check_monotone_aux(MonoKind kind, int n, int k, int t);

std::string to_string(MonoKind kind);

}  // namespace crossint
