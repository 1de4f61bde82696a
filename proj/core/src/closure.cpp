#include "crossint/closure.hpp"

#include "crossint/errors.hpp"

namespace crossint {

PairEnumerator::PairEnumerator(int n, int k, int t) : n_(n), k_(k), t_(t) {
    check_ground(n);
    if (t < 1 || k < t || k > n) throw precondition_error("PairEnumerator: require 1 <= t <= k <= n");
    universe_ = all_ksets(n, k);
    const std::size_t size = universe_.size();
    adjacent_.assign(size, Bitset(size));
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            if (intersection_size(universe_[i], universe_[j]) >= t) adjacent_[i].set(j);
        }
    }
}

Bitset PairEnumerator::transversals(const Bitset& x) const {
    Bitset out(universe_.size());
    out.set();
    for (auto i = x.find_first(); i != Bitset::npos; i = x.find_next(i)) {
        out &= adjacent_[i];
        if (out.none()) break;
    }
    return out;
}

Family PairEnumerator::to_family(const Bitset& x) const {
    std::vector<SubsetWord> members;
    for (auto i = x.find_first(); i != Bitset::npos; i = x.find_next(i)) members.push_back(universe_[i]);
    return Family::uniform(n_, k_, std::move(members));
}

Bitset PairEnumerator::to_bitset(const Family& f) const {
    Bitset out(universe_.size());
    for (SubsetWord s : f) {
        // universe_ is lex-sorted.
        auto it = std::lower_bound(universe_.begin(), universe_.end(), s, LexLess{});
        if (it == universe_.end() || *it != s) throw precondition_error("to_bitset: member is not a k-set of [n]");
        out.set(static_cast<std::size_t>(it - universe_.begin()));
    }
    return out;
}

PairEnumerator::Stats PairEnumerator::enumerate(const Visitor& visit, std::optional<std::uint64_t> max_closures,
                                                std::optional<std::chrono::steady_clock::time_point> deadline) const {
    Stats stats;
    const std::size_t size = universe_.size();
    auto out_of_budget = [&] {
        if (max_closures && stats.closures >= *max_closures) return true;
        return deadline && (stats.closures & 63) == 0 && std::chrono::steady_clock::now() > *deadline;
    };

    Bitset current = transversals(transversals(Bitset(size)));
    ++stats.closures;
    for (;;) {
        const Bitset partner = transversals(current);
        ++stats.pairs;
        if (!visit(partner, current)) return stats;

        // NextClosure: the lectically next closed set after `current`.
        bool advanced = false;
        Bitset prefix = current;  // current ∩ {0..i-1}, shrunk as i decreases
        for (std::size_t i = size; i-- > 0;) {
            if (current.test(i)) {
                prefix.reset(i);
                continue;
            }
            if (out_of_budget()) {
                stats.exhaustive = false;
                return stats;
            }
            Bitset seed = prefix;
            seed.set(i);
            Bitset closed = transversals(transversals(seed));
            ++stats.closures;
            // Accept if the closure adds nothing below i.
            Bitset below = closed;
            below.resize(i);
            Bitset prefix_below = prefix;
            prefix_below.resize(i);
            if (below == prefix_below) {
                current = std::move(closed);
                advanced = true;
                break;
            }
        }
        if (!advanced) return stats;
    }
}

}  // namespace crossint
