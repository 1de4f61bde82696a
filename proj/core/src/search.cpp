#include "crossint/search.hpp"

#include <chrono>

#include "crossint/bounds.hpp"
#include "crossint/closure.hpp"
#include "crossint/constructions.hpp"
#include "crossint/errors.hpp"
#include "crossint/structure.hpp"

namespace crossint {

std::string to_string(SearchMode mode) {
    switch (mode) {
        case SearchMode::single_t_intersecting: return "single";
        case SearchMode::pair_cross_t: return "pair";
        case SearchMode::pair_cross_1_pyber: return "pyber";
    }
    return "?";
}

void SearchProblem::validate() const {
    GroundParams::make(params.n, params.k, params.t);
    if (mode == SearchMode::pair_cross_1_pyber) {
        if (params.t != 1) throw precondition_error("pyber mode requires t = 1");
        if (nontrivial) throw precondition_error("pyber mode does not take --nontrivial");
        if (params.n < 2 * params.k) throw precondition_error("pyber mode requires n >= 2k");
    }
    if (budget.max_seconds && *budget.max_seconds <= 0) throw precondition_error("budget seconds must be positive");
}

namespace {

using Clock = std::chrono::steady_clock;

std::optional<Clock::time_point> deadline_of(const Budget& budget) {
    if (!budget.max_seconds) return std::nullopt;
    return Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*budget.max_seconds));
}

class SingleSearch {
public:
    SingleSearch(int n, int k, int t, bool nontrivial, const Budget& budget)
        : n_(n), k_(k), t_(t), nontrivial_(nontrivial), budget_(budget), deadline_(deadline_of(budget)) {
        anchor_ = SubsetWord::range(1, k);
        for (SubsetWord s : enumerate_ksets(n, k)) {
            if (s != anchor_ && intersection_size(s, anchor_) >= t) cand_.push_back(s);
        }
        const std::size_t size = cand_.size();
        adj_.assign(size, Bitset(size));
        for (std::size_t i = 0; i < size; ++i) {
            for (std::size_t j = 0; j < size; ++j) {
                if (i != j && intersection_size(cand_[i], cand_[j]) >= t) adj_[i].set(j);
            }
        }
    }

    SearchResult run() {
        Bitset all(cand_.size());
        all.set();
        dfs(all, anchor_);
        SearchResult r;
        r.optimum = best_size_;
        r.nodes_explored = nodes_;
        r.bound_cuts = cuts_;
        r.exhaustive = !stopped_;
        r.method = "branch-and-bound over families containing [k]";
        if (best_size_ > 0) r.witnesses.push_back(to_family(best_));
        return r;
    }

private:
    Family to_family(const std::vector<std::size_t>& chosen) const {
        std::vector<SubsetWord> members{anchor_};
        for (std::size_t i : chosen) members.push_back(cand_[i]);
        return Family::uniform(n_, k_, std::move(members));
    }

    bool out_of_budget() {
        if (stopped_) return true;
        if (budget_.max_nodes && nodes_ >= *budget_.max_nodes) stopped_ = true;
        if (deadline_ && (nodes_ & 255) == 0 && Clock::now() > *deadline_) stopped_ = true;
        return stopped_;
    }

    // Greedy colouring: vertices of one colour class are pairwise
    // non-adjacent, so a clique uses at most one vertex per class.
    std::size_t colour_bound(const Bitset& p) const {
        Bitset left = p;
        std::size_t colours = 0;
        while (left.any()) {
            ++colours;
            Bitset q = left;
            for (auto v = q.find_first(); v != Bitset::npos; v = q.find_next(v)) {
                left.reset(v);
                q -= adj_[v];
            }
        }
        return colours;
    }

    void consider(SubsetWord common) {
        if (nontrivial_ && common.size() >= t_) return;
        const long long size = 1 + static_cast<long long>(chosen_.size());
        if (size > best_size_) {
            best_size_ = size;
            best_ = chosen_;
        } else if (size == best_size_ && family_lex_less(to_family(chosen_), to_family(best_))) {
            best_ = chosen_;
        }
    }

    void dfs(Bitset p, SubsetWord common) {
        ++nodes_;
        if (out_of_budget()) return;
        consider(common);
        const long long size = 1 + static_cast<long long>(chosen_.size());
        while (p.any()) {
            // Ties with the incumbent are still explored so the witness is the
            // lex-least optimum.
            if (size + static_cast<long long>(colour_bound(p)) < best_size_) {
                ++cuts_;
                return;
            }
            if (nontrivial_) {
                SubsetWord rest = common;
                for (auto v = p.find_first(); v != Bitset::npos && rest.size() >= t_; v = p.find_next(v)) {
                    rest = rest & cand_[v];
                }
                if (rest.size() >= t_) {
                    ++cuts_;
                    return;
                }
            }
            const auto v = p.find_first();
            p.reset(v);
            chosen_.push_back(v);
            dfs(p & adj_[v], common & cand_[v]);
            chosen_.pop_back();
            if (stopped_) return;
        }
    }

    int n_;
    int k_;
    int t_;
    bool nontrivial_;
    Budget budget_;
    std::optional<Clock::time_point> deadline_;
    SubsetWord anchor_;
    std::vector<SubsetWord> cand_;
    std::vector<Bitset> adj_;
    std::vector<std::size_t> chosen_;
    std::vector<std::size_t> best_;
    long long best_size_ = 0;
    std::uint64_t nodes_ = 0;
    std::uint64_t cuts_ = 0;
    bool stopped_ = false;
};

bool pair_less(const Family& f1, const Family& g1, const Family& f2, const Family& g2) {
    if (family_lex_less(f1, f2)) return true;
    if (family_lex_less(f2, f1)) return false;
    return family_lex_less(g1, g2);
}

}  // namespace

SearchResult max_t_intersecting(int n, int k, int t, bool nontrivial, const Budget& budget) {
    GroundParams::make(n, k, t);
    SearchResult r = SingleSearch(n, k, t, nontrivial, budget).run();
    if (r.witnesses.empty()) r.optimum = -1;
    return r;
}

SearchResult max_nontrivial_t_intersecting(int n, int k, int t, const Budget& budget) {
    return max_t_intersecting(n, k, t, true, budget);
}

SearchResult max_product_cross(int n, int k, int t, bool nontrivial, const Budget& budget) {
    check_ground(n);
    if (!(n >= k && k >= t && t >= 1)) throw precondition_error("max_product_cross: require n >= k >= t >= 1");
    const PairEnumerator pairs(n, k, t);
    BigInt best = -1;
    Family best_f(n, k);
    Family best_g(n, k);
    const auto stats = pairs.enumerate(
        [&](const Bitset& f, const Bitset& g) {
            if (f.none() || g.none()) return true;
            const BigInt product = BigInt(f.count()) * g.count();
            if (product < best) return true;
            Family ff = pairs.to_family(f);
            Family gg = pairs.to_family(g);
            if (nontrivial && (!is_nontrivial(ff, t) || !is_nontrivial(gg, t))) return true;
            if (product > best || pair_less(ff, gg, best_f, best_g)) {
                best = product;
                best_f = std::move(ff);
                best_g = std::move(gg);
            }
            return true;
        },
        budget.max_nodes, deadline_of(budget));
    SearchResult r;
    r.optimum = best;
    r.nodes_explored = stats.closures;
    r.exhaustive = stats.exhaustive;
    r.method = "saturated pairs by NextClosure";
    if (best >= 0) r.witnesses = {best_f, best_g};
    return r;
}

SearchResult max_product_nontrivial_cross(int n, int k, int t, const Budget& budget) {
    GroundParams::make(n, k, t);
    return max_product_cross(n, k, t, true, budget);
}

SearchResult max_product_cross_1(int n, int k, const Budget& budget) {
    GroundParams::make(n, k, 1);
    if (n < 2 * k) throw precondition_error("max_product_cross_1: require n >= 2k");
    if (n == 2 * k) {
        SearchResult r = max_product_cross(n, k, 1, false, budget);
        r.method += " (n = 2k)";
        return r;
    }
    const LexCrossTable table(n, k, k);
    BigInt best = -1;
    std::size_t bx = 0;
    std::size_t by = 0;
    std::uint64_t nodes = 0;
    for (std::size_t x = 1; x <= table.count_a(); ++x) {
        // The largest compatible y gives the best product for this x.
        for (std::size_t y = table.count_b(); y >= 1; --y) {
            ++nodes;
            if (!table.compatible(x, y)) continue;
            const BigInt product = BigInt(x) * y;
            if (product > best) {
                best = product;
                bx = x;
                by = y;
            }
            break;
        }
    }
    SearchResult r;
    r.optimum = best;
    r.nodes_explored = nodes;
    r.method = "lex size pairs";
    r.witnesses = {lex_family(n, k, bx), lex_family(n, k, by)};
    return r;
}

SearchResult solve(const SearchProblem& problem) {
    problem.validate();
    const auto [n, k, t] = problem.params;
    switch (problem.mode) {
        case SearchMode::single_t_intersecting: return max_t_intersecting(n, k, t, problem.nontrivial, problem.budget);
        case SearchMode::pair_cross_t: return max_product_cross(n, k, t, problem.nontrivial, problem.budget);
        case SearchMode::pair_cross_1_pyber: return max_product_cross_1(n, k, problem.budget);
    }
    throw std::logic_error("unknown search mode");
}

bool witnesses_valid(const SearchProblem& problem, const SearchResult& result) {
    const int t = problem.params.t;
    if (result.optimum < 0) return result.witnesses.empty();
    if (problem.mode == SearchMode::single_t_intersecting) {
        if (result.witnesses.size() != 1) return false;
        const Family& f = result.witnesses[0];
        if (!is_t_intersecting(f, t)) return false;
        if (problem.nontrivial && !is_nontrivial(f, t)) return false;
        return BigInt(f.size()) == result.optimum;
    }
    if (result.witnesses.size() != 2) return false;
    const Family& f = result.witnesses[0];
    const Family& g = result.witnesses[1];
    if (f.empty() || g.empty() || !is_cross_t_intersecting(f, g, t)) return false;
    if (problem.nontrivial && (!is_nontrivial(f, t) || !is_nontrivial(g, t))) return false;
    return BigInt(f.size()) * g.size() == result.optimum;
}

std::vector<HmfRow> hmf_table(const std::vector<GroundParams>& grid, const Budget& budget) {
    for (const GroundParams& p : grid) {
        GroundParams::make(p.n, p.k, p.t);
        if (p.n < (p.k - p.t + 1) * (p.t + 1)) {
            throw precondition_error("hmf_table: (" + std::to_string(p.n) + "," + std::to_string(p.k) + "," +
                                     std::to_string(p.t) + ") violates n >= (k-t+1)(t+1)");
        }
    }
    std::vector<HmfRow> rows;
    for (const GroundParams& p : grid) {
        const SearchResult r = max_nontrivial_t_intersecting(p.n, p.k, p.t, budget);
        rows.push_back(HmfRow{p.n, p.k, p.t, r.optimum, size_A(p.n, p.k, p.t), size_H(p.n, p.k, p.t), r.exhaustive});
    }
    return rows;
}

}  // namespace crossint
