#pragma once

#include <random>
#include <vector>

#include "crossint/family.hpp"
#include "oracles.hpp"

namespace test {

inline std::vector<oracle::Mask> masks(const crossint::Family& f) {
    std::vector<oracle::Mask> out;
    for (crossint::SubsetWord s : f) out.push_back(s.bits());
    return out;
}

inline crossint::Family uniform(int n, int k, const std::vector<oracle::Mask>& v) {
    std::vector<crossint::SubsetWord> members;
    for (oracle::Mask m : v) members.push_back(crossint::SubsetWord::from_bits(m));
    return crossint::Family::uniform(n, k, members);
}

inline crossint::Family mixed(int n, const std::vector<oracle::Mask>& v) {
    std::vector<crossint::SubsetWord> members;
    for (oracle::Mask m : v) members.push_back(crossint::SubsetWord::from_bits(m));
    return crossint::Family::mixed(n, members);
}

// "123" -> {1,2,3}; digits only, for ground sizes below 10.
inline oracle::Mask set(const char* digits) {
    oracle::Mask m = 0;
    for (const char* p = digits; *p; ++p) m |= oracle::Mask{1} << (*p - '1');
    return m;
}

inline crossint::Family fam(int n, int k, std::initializer_list<const char*> sets) {
    std::vector<oracle::Mask> v;
    for (const char* s : sets) v.push_back(set(s));
    return uniform(n, k, v);
}

inline crossint::Family random_uniform(std::mt19937_64& rng, int n, int k, std::size_t count) {
    const std::vector<oracle::Mask> all = oracle::ksets(n, k);
    std::vector<oracle::Mask> v;
    for (std::size_t i = 0; i < count; ++i) v.push_back(all[rng() % all.size()]);
    return uniform(n, k, v);
}

}  // namespace test
