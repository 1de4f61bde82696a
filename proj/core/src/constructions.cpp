#include "crossint/constructions.hpp"

#include "crossint/errors.hpp"

namespace crossint {

Family build_H(int n, int k, int t) {
    GroundParams::make(n, k, t);
    const SubsetWord head = SubsetWord::range(1, t);
    const SubsetWord window = SubsetWord::range(t + 1, k + 1);
    std::vector<SubsetWord> members;
    for (SubsetWord s : enumerate_ksets(n, k)) {
        if (head.subset_of(s) && !(s & window).empty()) members.push_back(s);
    }
    const SubsetWord top = SubsetWord::range(1, k + 1);
    for (int j = 1; j <= t; ++j) members.push_back(top.without(j));
    return Family::uniform(n, k, std::move(members));
}

Family build_A(int n, int k, int t) {
    GroundParams::make(n, k, t);
    if (n < t + 2) throw precondition_error("build_A: require n >= t+2");
    const SubsetWord core = SubsetWord::range(1, t + 2);
    std::vector<SubsetWord> members;
    for (SubsetWord s : enumerate_ksets(n, k)) {
        if (intersection_size(s, core) >= t + 1) members.push_back(s);
    }
    return Family::uniform(n, k, std::move(members));
}

BigInt size_H(int n, int k, int t) {
    GroundParams::make(n, k, t);
    return BigInt(t) + binomial(n - t, k - t) - binomial(n - k - 1, k - t);
}

BigInt size_A(int n, int k, int t) {
    GroundParams::make(n, k, t);
    return BigInt(t + 2) * binomial(n - t - 2, k - t - 1) + binomial(n - t - 2, k - t - 2);
}

Family build_star(int n, int k, SubsetWord center) {
    check_ground(n);
    if (!center.fits(n)) throw precondition_error("build_star: center outside [n]");
    if (center.size() > k || k > n) throw precondition_error("build_star: require |T| <= k <= n");
    std::vector<SubsetWord> members;
    for (SubsetWord s : enumerate_ksets(n, k)) {
        if (center.subset_of(s)) members.push_back(s);
    }
    return Family::uniform(n, k, std::move(members));
}

std::optional<SubsetWord> sunflower_check(const Family& f, int center_size) {
    if (f.empty()) throw precondition_error("sunflower_check: empty family");
    if (f.size() < 2) return std::nullopt;
    const SubsetWord center = f[0] & f[1];
    if (center.size() != center_size) return std::nullopt;
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            if ((f[i] & f[j]) != center) return std::nullopt;
        }
    }
    return center;
}

namespace {

// Picks `need` pairwise disjoint petals from `petals[from..]`, avoiding `used`.
bool pick_disjoint(const std::vector<SubsetWord>& petals, std::size_t from, int need, SubsetWord used,
                   std::vector<std::size_t>& chosen) {
    if (need == 0) return true;
    for (std::size_t i = from; i < petals.size(); ++i) {
        if (petals.size() - i < static_cast<std::size_t>(need)) return false;
        if (!(petals[i] & used).empty()) continue;
        chosen.push_back(i);
        if (pick_disjoint(petals, i + 1, need - 1, used | petals[i], chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<SubsetWord>> find_sunflower(const Family& f, int petals, int center_size) {
    if (petals < 2) throw precondition_error("find_sunflower: need at least two petals");
    for (SubsetWord center : enumerate_ksets(f.ground(), center_size)) {
        std::vector<SubsetWord> holders;
        std::vector<SubsetWord> rest;
        for (SubsetWord s : f) {
            if (center.subset_of(s)) {
                holders.push_back(s);
                rest.push_back(s - center);
            }
        }
        if (holders.size() < static_cast<std::size_t>(petals)) continue;
        // Disjoint petals make every pairwise intersection exactly the center;
        // at most one member can equal the center itself (an empty petal).
        std::vector<std::size_t> chosen;
        if (pick_disjoint(rest, 0, petals, SubsetWord{}, chosen)) {
            std::vector<SubsetWord> out;
            for (std::size_t i : chosen) out.push_back(holders[i]);
            return out;
        }
    }
    return std::nullopt;
}

}  // namespace crossint
