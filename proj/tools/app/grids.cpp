#include "grids.hpp"

#include <algorithm>
#include <charconv>

#include "crossint/errors.hpp"

namespace crossint::app {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

int to_int(const std::string& s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw precondition_error("grid: bad integer '" + s + "'");
    return v;
}

std::vector<int> ints(const Grid& g, const std::string& key, std::vector<int> fallback) {
    auto it = g.find(key);
    if (it == g.end()) return fallback;
    std::vector<int> out;
    for (const std::string& v : it->second) out.push_back(to_int(v));
    return out;
}

std::vector<BigRational> rationals(const Grid& g, const std::string& key, std::vector<BigRational> fallback) {
    auto it = g.find(key);
    if (it == g.end()) return fallback;
    std::vector<BigRational> out;
    for (const std::string& v : it->second) out.push_back(parse_rational(v));
    return out;
}

std::vector<int> range(int lo, int hi) {
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

// n values at one point, given the smallest admissible n there.
std::vector<int> n_values(const Grid& g, int minimal) {
    auto it = g.find("n");
    if (it == g.end()) return {minimal, minimal + 10};
    std::vector<int> out;
    for (const std::string& v : it->second) {
        if (v == "min") {
            out.push_back(minimal);
        } else if (v.starts_with("min+")) {
            out.push_back(minimal + to_int(v.substr(4)));
        } else {
            out.push_back(to_int(v));
        }
    }
    return out;
}

BigInt ceil_of(const BigRational& q) {
    BigInt num = numerator(q);
    BigInt den = denominator(q);
    BigInt quot = num / den;
    if (quot * den < num) ++quot;
    return quot;
}

std::vector<BigRational> paper_c_values(int t, const BigRational& above) {
    std::vector<BigRational> all{2, 4, 6, 8, 16, BigRational(2 * (t + 2)), BigRational(4 * (t + 1)),
                                 BigRational(8 * (t + 2))};
    std::vector<BigRational> out;
    for (const BigRational& c : all) {
        if (c > above && std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Grid parse_grid(const std::string& spec) {
    Grid grid;
    if (spec.empty()) return grid;
    for (const std::string& part : split(spec, ',')) {
        const auto eq = part.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == part.size()) {
            throw precondition_error("grid: expected key=value, got '" + part + "'");
        }
        const std::string key = part.substr(0, eq);
        const std::string value = part.substr(eq + 1);
        std::vector<std::string> values;
        if (const auto dots = value.find(".."); dots != std::string::npos) {
            for (int v : range(to_int(value.substr(0, dots)), to_int(value.substr(dots + 2)))) {
                values.push_back(std::to_string(v));
            }
        } else {
            values = split(value, ';');
        }
        if (values.empty()) throw precondition_error("grid: empty value list for '" + key + "'");
        grid[key] = values;
    }
    return grid;
}

namespace {

void check_keys(const Grid& grid, const std::string& check, std::initializer_list<const char*> allowed) {
    for (const auto& [key, values] : grid) {
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
            throw precondition_error("grid key '" + key + "' does not apply to " + check);
        }
    }
}

}  // namespace

std::vector<IneqReport> run_ineq_grid(const std::string& check, const Grid& grid) {
    std::vector<IneqReport> out;
    if (check == "key") check_keys(grid, check, {"n", "k", "i"});
    if (check == "key2" || check == "key3" || check == "key4") check_keys(grid, check, {"n", "k", "t", "c"});
    if (check == "hilton-sum" || check == "cor-sum") check_keys(grid, check, {"m", "a", "t"});
    if (check == "f87") check_keys(grid, check, {"m", "a"});
    if (check.starts_with("mono:")) check_keys(grid, check, {"n", "k", "t"});
    if (check == "key") {
        for (int k : ints(grid, "k", range(5, 8))) {
            for (int i : ints(grid, "i", range(1, 4))) {
                for (int n : n_values(grid, i * k + 1)) out.push_back(check_key(n, k, i));
            }
        }
    } else if (check == "key2" || check == "key3" || check == "key4") {
        const BigRational floor_c = check == "key2" ? 1 : 2;
        for (int t : ints(grid, "t", {2, 3})) {
            for (int k : ints(grid, "k", range(5, 8))) {
                for (const BigRational& c : rationals(grid, "c", paper_c_values(t, floor_c))) {
                    const BigRational need = check == "key4" ? BigRational(c * k) : BigRational(c * (k - t) * (k - t) + t + 1);
                    const int minimal = static_cast<int>(ceil_of(need));
                    for (int n : n_values(grid, minimal)) {
                        if (check == "key2") out.push_back(check_key2(n, k, t, c));
                        if (check == "key3") out.push_back(check_key3(n, k, t, c));
                        if (check == "key4") out.push_back(check_key4(n, k, t, c));
                    }
                }
            }
        }
    } else if (check == "hilton-sum" || check == "cor-sum") {
        for (int a : ints(grid, "a", {2})) {
            for (int t : ints(grid, "t", {2, 3})) {
                for (int m : ints(grid, "m", range((t + 1) * a, 12))) {
                    out.push_back(check == "hilton-sum" ? verify_hilton_sum(m, a, t) : verify_cor_sum(m, a, t));
                }
            }
        }
    } else if (check == "f87") {
        for (int a : ints(grid, "a", {2})) {
            for (int m : ints(grid, "m", range(2 * a, 12))) out.push_back(verify_f87(m, a));
        }
    } else if (check.starts_with("mono:")) {
        const std::string kind = check.substr(5);
        MonoKind mk;
        if (kind == "f") {
            mk = MonoKind::f;
        } else if (kind == "g") {
            mk = MonoKind::g;
        } else if (kind == "h") {
            mk = MonoKind::h;
        } else if (kind == "phi") {
            mk = MonoKind::phi;
        } else {
            throw precondition_error("unknown check '" + check + "'");
        }
        for (int t : ints(grid, "t", {2, 3})) {
            for (int k : ints(grid, "k", range(5, 8))) {
                const int minimal = mk == MonoKind::g ? t * k * k : mk == MonoKind::phi ? 4 * k * k : k * k;
                for (int n : n_values(grid, minimal)) out.push_back(check_monotone_aux(mk, n, k, t));
            }
        }
    } else {
        throw precondition_error("unknown check '" + check + "'");
    }
    return out;
}

std::vector<GroundParams> hmf_grid(const Grid& grid) {
    if (grid.empty()) {
        return {GroundParams{6, 3, 2}, GroundParams{7, 3, 2}, GroundParams{8, 3, 2}, GroundParams{9, 3, 2},
                GroundParams{8, 4, 3}};
    }
    for (const auto& [key, values] : grid) {
        if (key != "n" && key != "k" && key != "t") throw precondition_error("hmf grid: unknown key '" + key + "'");
    }
    if (!grid.contains("n") || !grid.contains("k") || !grid.contains("t")) {
        throw precondition_error("hmf grid: give n, k and t");
    }
    std::vector<GroundParams> out;
    for (int n : ints(grid, "n", {})) {
        for (int k : ints(grid, "k", {})) {
            for (int t : ints(grid, "t", {})) out.push_back(GroundParams{n, k, t});
        }
    }
    return out;
}

}  // namespace crossint::app
