#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "crossint/family.hpp"

namespace crossint {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// Enumerates every saturated cross t-intersecting pair of k-uniform families
/// over [n], that is every pair (F, G) with F = T_t^(k)(G) and G = T_t^(k)(F).
/// The closed sets G of the operator G -> T(T(G)) are listed with Ganter's
/// NextClosure algorithm over the k-sets in lex order, so each closed G is
/// produced exactly once and in a fixed order.
class PairEnumerator {
public:
    PairEnumerator(int n, int k, int t);

    int n() const { return n_; }
    int k() const { return k_; }
    int t() const { return t_; }
    const std::vector<SubsetWord>& universe() const { return universe_; }

    /// Indices into universe() of the k-sets meeting every member of `x` in at
    /// least t elements.
    Bitset transversals(const Bitset& x) const;

    Family to_family(const Bitset& x) const;
    Bitset to_bitset(const Family& f) const;

    struct Stats {
        std::uint64_t closures = 0;
        std::uint64_t pairs = 0;
        bool exhaustive = true;
    };

    /// Calls `visit(F, G)` for each closed G with F = T(G), both possibly
    /// empty. Returning false from `visit` stops the enumeration. Stops with
    /// exhaustive = false once `max_closures` closures have been computed or
    /// the deadline passes.
    using Visitor = std::function<bool(const Bitset& f, const Bitset& g)>;
    Stats enumerate(const Visitor& visit, std::optional<std::uint64_t> max_closures = std::nullopt,
                    std::optional<std::chrono::steady_clock::time_point> deadline = std::nullopt) const;

private:
    int n_;
    int k_;
    int t_;
    std::vector<SubsetWord> universe_;
    std::vector<Bitset> adjacent_;  // adjacent_[i]: k-sets meeting universe_[i] in >= t
};

}  // namespace crossint
