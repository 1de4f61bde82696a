#include "crossint/bounds.hpp"

#include <algorithm>

#include "crossint/closure.hpp"
#include "crossint/errors.hpp"
#include "crossint/structure.hpp"

namespace crossint {

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

std::string str(long long v) { return std::to_string(v); }

BigRational rat(const BigInt& v) { return BigRational(v); }

// Search spaces above this many lex sets are refused.
constexpr std::size_t kMaxLexSets = 4096;

void require(bool ok, const std::string& what) {
    if (!ok) throw precondition_error(what);
}

// Points the headline lhs/rhs at the link with the least slack.
void headline_tightest(IneqReport& r) {
    if (r.links.empty()) return;
    const IneqLink* tight = &r.links.front();
    for (const IneqLink& l : r.links) {
        if (l.identity) continue;
        if (tight->identity || l.rhs - l.lhs < tight->rhs - tight->lhs) tight = &l;
    }
    r.lhs = tight->lhs;
    r.rhs = tight->rhs;
    r.strict = tight->strict;
    r.slack = r.rhs - r.lhs;
}

IneqLink equal_link(std::string label, const BigRational& a, const BigRational& b) {
    const BigRational diff = a > b ? a - b : b - a;
    return IneqLink{std::move(label), diff, BigRational(0), false, true};
}

}  // namespace

IneqReport make_report(std::string check, Params params, std::vector<IneqLink> links) {
    IneqReport r;
    r.check = std::move(check);
    r.params = std::move(params);
    r.verdict = std::all_of(links.begin(), links.end(), [](const IneqLink& l) { return l.holds(); });
    if (!links.empty()) {
        r.lhs = links.front().lhs;
        r.rhs = links.back().rhs;
        r.strict = std::any_of(links.begin(), links.end(), [](const IneqLink& l) { return l.strict; });
    }
    r.slack = r.rhs - r.lhs;
    r.links = std::move(links);
    return r;
}

LexCrossTable::LexCrossTable(int m, int a, int b) {
    check_ground(m);
    require(a >= 1 && a <= m && b >= 1 && b <= m, "LexCrossTable: require 1 <= a, b <= m");
    require(binomial(m, a) <= kMaxLexSets && binomial(m, b) <= kMaxLexSets,
            "LexCrossTable: more than " + std::to_string(kMaxLexSets) + " lex sets");
    const std::vector<SubsetWord> sa = all_ksets(m, a);
    const std::vector<SubsetWord> sb = all_ksets(m, b);
    count_a_ = sa.size();
    count_b_ = sb.size();
    prefix_min_.assign(count_b_ + 1, count_a_ + 1);
    for (std::size_t j = 0; j < count_b_; ++j) {
        std::size_t first = count_a_ + 1;
        for (std::size_t i = 0; i < count_a_; ++i) {
            if ((sa[i] & sb[j]).empty()) {
                first = i + 1;
                break;
            }
        }
        prefix_min_[j + 1] = std::min(prefix_min_[j], first);
    }
}

bool LexCrossTable::compatible(std::size_t x, std::size_t y) const {
    if (x > count_a_ || y > count_b_) throw precondition_error("LexCrossTable: size out of range");
    if (x == 0 || y == 0) return true;
    return x < prefix_min_[y];
}

bool hilton_compress_check(const Family& a, const Family& b) {
    require(a.ground() == b.ground(), "hilton_compress_check: different grounds");
    require(a.uniformity().has_value() && b.uniformity().has_value(),
            "hilton_compress_check: families must be uniform");
    const int n = a.ground();
    const int ka = *a.uniformity();
    const int kb = *b.uniformity();
    require(ka >= 1 && kb >= 1, "hilton_compress_check: require a, b >= 1");
    require(n > ka + kb, "hilton_compress_check: require n > a + b");
    require(is_cross_t_intersecting(a, b, 1), "hilton_compress_check: input is not cross-intersecting");
    const Family la = lex_family(n, ka, a.size());
    const Family lb = lex_family(n, kb, b.size());
    return is_cross_t_intersecting(la, lb, 1);
}

BigInt hilton_sum_rhs(int m, int a, int t) {
    require(a >= 1 && t >= 1, "hilton_sum_rhs: require a, t >= 1");
    require(m >= (t + 1) * a, "hilton_sum_rhs: require m >= (t+1)a");
    const BigInt first = BigInt(t + 1) * binomial(m - 1, a - 1);
    const BigInt second = binomial(m, a) - binomial(m - a, a) + t;
    return std::max(first, second);
}

namespace {

struct VectorSearch {
    const LexCrossTable& table;
    int slots;
    std::vector<std::size_t> current;
    std::vector<std::size_t> best;
    std::size_t best_sum = 0;

    // Non-increasing size vectors; every pair must be compatible.
    void run(std::size_t cap, std::size_t sum) {
        const auto depth = static_cast<int>(current.size());
        if (depth == slots) {
            if (current[1] >= 1 && sum > best_sum) {
                best_sum = sum;
                best = current;
            }
            return;
        }
        if (sum + cap * static_cast<std::size_t>(slots - depth) <= best_sum) return;
        for (std::size_t x = cap + 1; x-- > 0;) {
            if (sum + x * static_cast<std::size_t>(slots - depth) <= best_sum) break;
            bool ok = true;
            for (std::size_t prev : current) {
                if (!table.compatible(prev, x)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            current.push_back(x);
            run(x, sum + x);
            current.pop_back();
        }
    }
};

}  // namespace

IneqReport verify_hilton_sum(int m, int a, int t) {
    const BigInt rhs = hilton_sum_rhs(m, a, t);
    const LexCrossTable table(m, a, a);
    VectorSearch search{table, t + 1, {}, {}, 0};
    search.run(table.count_a(), 0);
    IneqReport r = make_report("hilton-sum", {{"m", str(m)}, {"a", str(a)}, {"t", str(t)}},
                               {IneqLink{"optimum <= rhs", rat(BigInt(search.best_sum)), rat(rhs), false}});
    for (std::size_t x : search.best) r.witness.emplace_back(x);
    return r;
}

IneqReport verify_cor_sum(int m, int a, int t) {
    const BigInt rhs = hilton_sum_rhs(m, a, t);
    const LexCrossTable table(m, a, a);
    BigInt best = -1;
    std::pair<std::size_t, std::size_t> arg{0, 0};
    for (std::size_t x1 = table.count_a(); x1 >= 1; --x1) {
        for (std::size_t x2 = x1; x2 >= 1; --x2) {
            if (!table.compatible(x1, x2)) continue;
            const BigInt value = BigInt(x1) + BigInt(t) * x2;
            if (value > best) {
                best = value;
                arg = {x1, x2};
            }
            break;  // smaller x2 only lowers the objective
        }
    }
    IneqReport r = make_report("cor-sum", {{"m", str(m)}, {"a", str(a)}, {"t", str(t)}},
                               {IneqLink{"optimum <= rhs", rat(best), rat(rhs), false}});
    r.witness = {BigInt(arg.first), BigInt(arg.second)};
    return r;
}

IneqReport verify_f87(int m, int a) {
    require(a >= 1, "verify_f87: require a >= 1");
    require(m >= 2 * a, "verify_f87: require m >= 2a");
    const BigInt rhs = 2 * binomial(m - 1, a - 1);
    const std::size_t floor_size = std::max<std::size_t>(1, static_cast<std::size_t>(binomial(m - 2, a - 2)));
    std::size_t best = 0;
    std::pair<std::size_t, std::size_t> arg{0, 0};
    std::string note;
    if (m > 2 * a) {
        const LexCrossTable table(m, a, a);
        for (std::size_t x1 = table.count_a(); x1 >= floor_size; --x1) {
            for (std::size_t x2 = x1; x2 >= floor_size; --x2) {
                if (!table.compatible(x1, x2)) continue;
                if (x1 + x2 > best) {
                    best = x1 + x2;
                    arg = {x1, x2};
                }
                break;
            }
        }
        note = "lex size pairs";
    } else {
        require(binomial(m, a) <= kMaxLexSets, "verify_f87: search space too large");
        const PairEnumerator pairs(m, a, 1);
        pairs.enumerate([&](const Bitset& f, const Bitset& g) {
            const std::size_t hi = std::max(f.count(), g.count());
            const std::size_t lo = std::min(f.count(), g.count());
            if (lo >= floor_size && hi + lo > best) {
                best = hi + lo;
                arg = {hi, lo};
            }
            return true;
        });
        note = "saturated pairs (m = 2a)";
    }
    IneqReport r = make_report("f87", {{"m", str(m)}, {"a", str(a)}},
                               {IneqLink{"optimum <= 2C(m-1,a-1)", rat(BigInt(best)), rat(rhs), false}});
    r.witness = {BigInt(arg.first), BigInt(arg.second)};
    r.note = note;
    return r;
}

IneqReport check_key(int n, int k, int i) {
    require(n >= 1 && k >= 1 && i >= 1, "check_key: require positive n, k, i");
    require(n > i * k, "check_key: require n > ik");
    const BigRational lhs = make_rational(BigInt(n - i * k), BigInt(n)) * rat(binomial(n, k));
    return make_report("key", {{"n", str(n)}, {"k", str(k)}, {"i", str(i)}},
                       {IneqLink{"(n-ik)/n C(n,k) <= C(n-i,k)", lhs, rat(binomial(n - i, k)), false}});
}

namespace {

void require_key2_range(int n, int k, int t, const BigRational& c, const BigRational& c_floor,
                        const std::string& name) {
    require(t >= 1 && k >= t + 1, name + ": require k >= t+1 >= 2");
    require(c > c_floor, name + ": require c > " + to_string(c_floor));
    const BigRational need = c * (k - t) * (k - t) + t + 1;
    require(BigRational(n) >= need, name + ": require n >= c(k-t)^2 + t + 1");
}

std::vector<IneqLink> key2_links(int n, int k, int t, const BigRational& c) {
    const BigRational top = rat(binomial(n - t - 1, k - t - 1));
    const BigRational base = rat(binomial(n - k - 1, k - t - 1));
    const BigInt m = n - t - 1;
    const BigRational step1 = make_rational(m, m - BigInt(k - t) * (k - t - 1)) * base;
    const BigRational step2 = make_rational(m, m - BigInt(k - t) * (k - t)) * base;
    const BigRational step3 = c / (c - 1) * base;
    return {IneqLink{"C(n-t-1,k-t-1) <= (n-t-1)/(n-t-1-(k-t)(k-t-1)) C(n-k-1,k-t-1)", top, step1, false},
            IneqLink{"<= (n-t-1)/(n-t-1-(k-t)^2) C(n-k-1,k-t-1)", step1, step2, false},
            IneqLink{"<= c/(c-1) C(n-k-1,k-t-1)", step2, step3, false}};
}

Params key_params(int n, int k, int t, const BigRational& c) {
    return {{"n", str(n)}, {"k", str(k)}, {"t", str(t)}, {"c", to_string(c)}};
}

}  // namespace

IneqReport check_key2(int n, int k, int t, const BigRational& c) {
    require_key2_range(n, k, t, c, 1, "check_key2");
    return make_report("key2", key_params(n, k, t, c), key2_links(n, k, t, c));
}

IneqReport check_key3(int n, int k, int t, const BigRational& c) {
    require_key2_range(n, k, t, c, 2, "check_key3");
    const BigRational top = rat(binomial(n - t - 1, k - t - 1));
    const BigRational base = rat(binomial(n - k - 1, k - t - 1));
    const BigRational sq = base * base;
    const BigRational step1 = (c / (c - 1)) * (c / (c - 1)) * sq;
    const BigRational step2 = c * c / (c * c - 2 * c + 1) * sq;
    const BigRational step3 = c / (c - 2) * sq;
    return make_report("key3", key_params(n, k, t, c),
                       {IneqLink{"C(n-t-1,k-t-1)^2 <= (c/(c-1))^2 C(n-k-1,k-t-1)^2", top * top, step1, false},
                        IneqLink{"<= c^2/(c^2-2c+1) C(n-k-1,k-t-1)^2", step1, step2, false},
                        IneqLink{"<= c/(c-2) C(n-k-1,k-t-1)^2", step2, step3, false}});
}

IneqReport check_key4(int n, int k, int t, const BigRational& c) {
    require(t >= 1 && k >= t + 1, "check_key4: require k >= t+1 >= 2");
    require(c > 2, "check_key4: require c > 2");
    require(BigRational(n) >= c * k, "check_key4: require n >= ck");
    const BigRational top = rat(binomial(n - t - 1, k - t - 1));
    const BigRational base = rat(binomial(n - t - 2, k - t - 1));
    return make_report("key4", key_params(n, k, t, c),
                       {IneqLink{"C(n-t-1,k-t-1)^2 <= c/(c-2) C(n-t-2,k-t-1)^2", top * top,
                                 c / (c - 2) * base * base, false}});
}

std::string to_string(MonoKind kind) {
    switch (kind) {
        case MonoKind::f: return "f";
        case MonoKind::g: return "g";
        case MonoKind::h: return "h";
        case MonoKind::phi: return "phi";
    }
    return "?";
}

IneqReport check_monotone_aux(MonoKind kind, int n, int k, int t) {
    require(t >= 1 && k >= t + 2, "check_monotone_aux: require k >= t+2, t >= 1");
    const Params params{{"n", str(n)}, {"k", str(k)}, {"t", str(t)}};
    std::vector<IneqLink> links;
    const BigRational one(1);
    switch (kind) {
        case MonoKind::f: {
            require(n >= k * k, "mono:f: require n >= k^2");
            for (int l = t + 1; l <= k; ++l) {
                const BigRational def = rat(ipow(k, l + 1 - t) * binomial(n - l - 1, k - l - 1)) /
                                        rat(ipow(k, l - t) * binomial(n - l, k - l));
                const BigRational closed = make_rational(BigInt(k) * (k - l), BigInt(n - l));
                const std::string at = "l=" + str(l);
                links.push_back(equal_link(at + ": ratio = k(k-l)/(n-l)", def, closed));
                links.push_back(IneqLink{at + ": ratio <= 1", def, one, false});
            }
            break;
        }
        case MonoKind::g: {
            require(BigInt(n) >= BigInt(t) * k * k, "mono:g: require n >= t k^2");
            for (int s = t + 2; s <= k; ++s) {
                const BigRational def =
                    rat(binomial(s + 1, t) * ipow(k, s + 1 - t) * binomial(n - s - 1, k - s - 1)) /
                    rat(binomial(s, t) * ipow(k, s - t) * binomial(n - s, k - s));
                const BigRational factor = make_rational(BigInt(k) * (k - s), BigInt(n - s));
                const BigRational closed = make_rational(BigInt(s + 1), BigInt(s + 1 - t)) * factor;
                const BigRational relaxed = make_rational(BigInt(t + 3), BigInt(3)) * factor;
                const std::string at = "s=" + str(s);
                links.push_back(equal_link(at + ": ratio = (s+1)/(s+1-t) k(k-s)/(n-s)", def, closed));
                links.push_back(IneqLink{at + ": ratio <= (t+3)/3 k(k-s)/(n-s)", closed, relaxed, false});
                links.push_back(IneqLink{at + ": (t+3)/3 k(k-s)/(n-s) < 1", relaxed, one, true});
            }
            break;
        }
        case MonoKind::h: {
            require(n >= k * k, "mono:h: require n >= k^2");
            for (int l = t + 2; l <= k; ++l) {
                const BigRational def = rat(ipow(k, l - t) * binomial(n - l - 1, k - l - 1)) /
                                        rat(ipow(k, l - t - 1) * binomial(n - l, k - l));
                const BigRational closed = make_rational(BigInt(k) * (k - l), BigInt(n - l));
                const std::string at = "l=" + str(l);
                links.push_back(equal_link(at + ": ratio = k(k-l)/(n-l)", def, closed));
                links.push_back(IneqLink{at + ": ratio < 1", def, one, true});
            }
            break;
        }
        case MonoKind::phi: {
            require(n >= 4 * k * k, "mono:phi: require n >= 4k^2");
            auto phi = [&](int x) {
                return binomial(n - t, k - t) - binomial(n - k - 1 + x, k - t) +
                       BigInt(x) * x * binomial(n - t - 2, k - t - 2);
            };
            for (int x = 1; x < k - t; ++x) {
                links.push_back(IneqLink{"phi(" + str(x + 1) + ") < phi(" + str(x) + ")", rat(phi(x + 1)),
                                         rat(phi(x)), true});
            }
            break;
        }
    }
    IneqReport r = make_report("mono:" + to_string(kind), params, std::move(links));
    headline_tightest(r);
    return r;
}

}  // namespace crossint
