#pragma once

// Brute-force reference implementations. They work on raw bit masks and
// share no code with the library beyond the mask convention (element e is
// bit e-1), so agreement with the library is a genuine second route.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace oracle {

using Mask = std::uint64_t;

inline int pop(Mask m) { return std::popcount(m); }

inline std::vector<int> elems(Mask m) {
    std::vector<int> out;
    for (int e = 1; m; ++e, m >>= 1) {
        if (m & 1) out.push_back(e);
    }
    return out;
}

// Sorted-tuple lexicographic order.
inline bool lex_less(Mask a, Mask b) { return elems(a) < elems(b); }

inline std::vector<Mask> ksets(int n, int k) {
    std::vector<Mask> out;
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
        if (pop(m) == k) out.push_back(m);
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

inline std::vector<Mask> sorted(std::vector<Mask> v) {
    std::sort(v.begin(), v.end(), lex_less);
    return v;
}

inline unsigned long long pascal(int m, int r) {
    if (m < 0 || r < 0 || r > m) return 0;
    std::vector<std::vector<unsigned long long>> c(m + 1, std::vector<unsigned long long>(m + 1, 0));
    for (int i = 0; i <= m; ++i) {
        c[i][0] = 1;
        for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
    }
    return c[m][r];
}

inline Mask range(int lo, int hi) {
    Mask m = 0;
    for (int e = lo; e <= hi; ++e) m |= Mask{1} << (e - 1);
    return m;
}

// Frankl type family read straight off its definition.
inline std::vector<Mask> family_A(int n, int k, int t) {
    std::vector<Mask> out;
    for (Mask s : ksets(n, k)) {
        if (pop(s & range(1, t + 2)) >= t + 1) out.push_back(s);
    }
    return out;
}

// Hilton-Milner type family read straight off its definition.
inline std::vector<Mask> family_H(int n, int k, int t) {
    std::vector<Mask> out;
    const Mask head = range(1, t);
    const Mask tail = range(t + 1, k + 1);
    for (Mask s : ksets(n, k)) {
        const bool first = (s & head) == head && (s & tail) != 0;
        bool second = false;
        for (int j = 1; j <= t; ++j) second = second || s == (range(1, k + 1) & ~(Mask{1} << (j - 1)));
        if (first || second) out.push_back(s);
    }
    return out;
}

inline bool t_intersecting(const std::vector<Mask>& f, int t) {
    for (Mask a : f) {
        for (Mask b : f) {
            if (pop(a & b) < t) return false;
        }
    }
    return true;
}

inline bool cross(const std::vector<Mask>& f, const std::vector<Mask>& g, int t) {
    for (Mask a : f) {
        for (Mask b : g) {
            if (pop(a & b) < t) return false;
        }
    }
    return true;
}

inline Mask common(const std::vector<Mask>& f) {
    Mask c = ~Mask{0};
    for (Mask a : f) c &= a;
    return c;
}

inline bool nontrivial(const std::vector<Mask>& f, int t) { return pop(common(f)) < t; }

inline bool hits(Mask s, const std::vector<Mask>& f, int t) {
    return std::all_of(f.begin(), f.end(), [&](Mask a) { return pop(s & a) >= t; });
}

inline std::vector<Mask> transversals(const std::vector<Mask>& f, int t, int n, int size) {
    std::vector<Mask> out;
    for (Mask s : ksets(n, size)) {
        if (hits(s, f, t)) out.push_back(s);
    }
    return out;
}

// Every subset of [n] is tried; fine for n <= 12.
inline int tau(const std::vector<Mask>& f, int t, int n) {
    int best = n + 1;
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
        if (pop(s) < best && hits(s, f, t)) best = pop(s);
    }
    return best;
}

// Minimal t-transversals with at most k elements; minimality is checked by
// dropping single elements, which suffices because hitting is monotone.
inline std::vector<Mask> minimal_transversals(const std::vector<Mask>& f, int t, int n, int k) {
    std::vector<Mask> out;
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
        if (pop(s) > k || !hits(s, f, t)) continue;
        bool minimal = true;
        for (Mask rest = s; rest && minimal; rest &= rest - 1) {
            minimal = !hits(s & ~(rest & (~rest + 1)), f, t);
        }
        if (minimal) out.push_back(s);
    }
    return sorted(out);
}

// Largest (optionally non-trivial) t-intersecting family: plain
// include/exclude recursion over all k-sets without any bound.
struct MaxFamily {
    std::vector<Mask> sets;
    int t;
    bool need_nontrivial;
    std::vector<Mask> chosen;
    std::size_t best = 0;

    void go(std::size_t i) {
        if (i == sets.size()) {
            if (chosen.size() > best && (!need_nontrivial || (!chosen.empty() && nontrivial(chosen, t)))) {
                best = chosen.size();
            }
            return;
        }
        if (chosen.size() + (sets.size() - i) <= best) return;
        if (std::all_of(chosen.begin(), chosen.end(), [&](Mask c) { return pop(c & sets[i]) >= t; })) {
            chosen.push_back(sets[i]);
            go(i + 1);
            chosen.pop_back();
        }
        go(i + 1);
    }
};

inline std::size_t max_family(int n, int k, int t, bool need_nontrivial) {
    MaxFamily m{ksets(n, k), t, need_nontrivial, {}, 0};
    m.go(0);
    return m.best;
}

// max |F| |T(F)| over every non-empty F, where T(F) is all k-sets
// t-intersecting each member of F. With need_nontrivial both sides must be
// non-trivial; shrinking a trivial side never makes it non-trivial, so the
// full T(F) is the right partner.
inline unsigned long long max_cross_product(int n, int k, int t, bool need_nontrivial) {
    const std::vector<Mask> all = ksets(n, k);
    const std::size_t size = all.size();
    std::vector<Mask> near(size, 0);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            if (pop(all[i] & all[j]) >= t) near[i] |= Mask{1} << j;
        }
    }
    unsigned long long best = 0;
    for (Mask f = 1; f < (Mask{1} << size); ++f) {
        Mask g = (Mask{1} << size) - 1;
        Mask fc = ~Mask{0};
        for (Mask rest = f; rest; rest &= rest - 1) {
            const int i = std::countr_zero(rest);
            g &= near[i];
            fc &= all[i];
        }
        if (!g) continue;
        if (need_nontrivial) {
            Mask gc = ~Mask{0};
            for (Mask rest = g; rest; rest &= rest - 1) gc &= all[std::countr_zero(rest)];
            if (pop(fc) >= t || pop(gc) >= t) continue;
        }
        best = std::max<unsigned long long>(best, static_cast<unsigned long long>(pop(f)) * pop(g));
    }
    return best;
}

inline std::vector<Mask> lex_prefix(int n, int k, std::size_t m) {
    std::vector<Mask> all = ksets(n, k);
    all.resize(m);
    return all;
}

// Largest sum of sizes of t+1 lex families of a-sets on [m] that are
// pairwise cross-intersecting with at least two non-empty. Tries every
// size vector, so keep C(m,a) small.
inline unsigned long long max_hilton_sum(int m, int a, int t) {
    const std::vector<Mask> all = ksets(m, a);
    const std::size_t total = all.size();
    std::vector<std::vector<bool>> ok(total + 1, std::vector<bool>(total + 1, false));
    for (std::size_t x = 0; x <= total; ++x) {
        for (std::size_t y = 0; y <= total; ++y) ok[x][y] = cross(lex_prefix(m, a, x), lex_prefix(m, a, y), 1);
    }
    unsigned long long best = 0;
    std::vector<std::size_t> sizes(t + 1, 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == t + 1) {
            int nonempty = 0;
            unsigned long long sum = 0;
            for (std::size_t s : sizes) {
                nonempty += s > 0;
                sum += s;
            }
            if (nonempty >= 2) best = std::max(best, sum);
            return;
        }
        for (std::size_t x = 0; x <= total; ++x) {
            bool fine = true;
            for (int j = 0; j < i && fine; ++j) fine = ok[x][sizes[j]];
            if (!fine) continue;
            sizes[i] = x;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return best;
}

}  // namespace oracle
