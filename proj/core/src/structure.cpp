#include "crossint/structure.hpp"

#include <unordered_set>

#include "crossint/constructions.hpp"
#include "crossint/errors.hpp"

namespace crossint {

namespace {

void require_same_ground(const Family& f, const Family& g) {
    if (f.ground() != g.ground()) {
        throw precondition_error("families over different grounds (n=" + std::to_string(f.ground()) +
                                 " vs n=" + std::to_string(g.ground()) + ")");
    }
}

// First member of f that meets s in fewer than t elements.
const SubsetWord* first_violator(SubsetWord s, const Family& f, int t) {
    for (const SubsetWord& m : f.members()) {
        if (intersection_size(s, m) < t) return &m;
    }
    return nullptr;
}

class TransversalSearch {
public:
    TransversalSearch(const Family& f, int t) : f_(f), t_(t) {}

    // Is there a t-transversal of size <= limit extending `partial`?
    bool exists(SubsetWord partial, int limit) {
        failed_.clear();
        return extend(partial, limit);
    }

    // Every t-transversal of size <= limit reachable by branching on
    // violated members; contains all inclusion-minimal ones.
    std::vector<SubsetWord> collect(int limit) {
        seen_.clear();
        found_.clear();
        gather(SubsetWord{}, limit);
        return found_;
    }

private:
    bool extend(SubsetWord cur, int limit) {
        const SubsetWord* bad = first_violator(cur, f_, t_);
        if (bad == nullptr) return true;
        const int missing = t_ - intersection_size(cur, *bad);
        if (cur.size() + missing > limit) return false;
        if (failed_.contains(cur.bits())) return false;
        for (int y : (*bad - cur).elements()) {
            if (extend(cur.with(y), limit)) return true;
        }
        failed_.insert(cur.bits());
        return false;
    }

    void gather(SubsetWord cur, int limit) {
        if (!seen_.insert(cur.bits()).second) return;
        const SubsetWord* bad = first_violator(cur, f_, t_);
        if (bad == nullptr) {
            found_.push_back(cur);
            return;
        }
        const int missing = t_ - intersection_size(cur, *bad);
        if (cur.size() + missing > limit) return;
        for (int y : (*bad - cur).elements()) gather(cur.with(y), limit);
    }

    const Family& f_;
    int t_;
    std::unordered_set<std::uint64_t> failed_;
    std::unordered_set<std::uint64_t> seen_;
    std::vector<SubsetWord> found_;
};

bool is_minimal_transversal(SubsetWord s, const Family& f, int t) {
    for (int e : s.elements()) {
        if (is_t_transversal(s.without(e), f, t)) return false;
    }
    return true;
}

}  // namespace

bool is_t_intersecting(const Family& f, int t) {
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            if (intersection_size(f[i], f[j]) < t) return false;
        }
    }
    return true;
}

bool is_cross_t_intersecting(const Family& f, const Family& g, int t) {
    require_same_ground(f, g);
    for (SubsetWord a : f) {
        if (first_violator(a, g, t) != nullptr) return false;
    }
    return true;
}

bool is_exact_cross_t_intersecting(const Family& a, const Family& b, int t) {
    require_same_ground(a, b);
    for (SubsetWord x : a) {
        for (SubsetWord y : b) {
            if (intersection_size(x, y) != t) return false;
        }
    }
    return true;
}

bool is_nontrivial(const Family& f, int t) {
    if (f.empty()) throw precondition_error("is_nontrivial: empty family");
    return common_intersection(f).size() < t;
}

bool is_t_transversal(SubsetWord s, const Family& f, int t) { return first_violator(s, f, t) == nullptr; }

Family t_transversals(const Family& f, int t, int size) {
    const int n = f.ground();
    if (size < t || size > n) throw precondition_error("t_transversals: require t <= size <= n");
    std::vector<SubsetWord> out;
    for (SubsetWord s : enumerate_ksets(n, size)) {
        if (is_t_transversal(s, f, t)) out.push_back(s);
    }
    return Family::uniform(n, size, std::move(out));
}

int tau_t(const Family& f, int t, std::optional<int> max_size) {
    if (f.empty()) throw precondition_error("tau_t: empty family");
    if (t < 1) throw precondition_error("tau_t: require t >= 1");
    const int limit = max_size.value_or(f.uniformity().value_or(f.ground()));
    if (f.min_member_size() < t) {
        throw infeasible_error("tau_t: a member has fewer than t elements; no t-transversal exists");
    }
    TransversalSearch search(f, t);
    for (int size = t; size <= limit; ++size) {
        if (search.exists(SubsetWord{}, size)) return size;
    }
    throw infeasible_error("tau_t: no t-transversal of size <= " + std::to_string(limit));
}

std::size_t Basis::layer_count(int size) const {
    auto it = layers.find(size);
    return it == layers.end() ? 0 : it->second;
}

bool Basis::is_antichain() const {
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = 0; j < members.size(); ++j) {
            if (i != j && members[i].subset_of(members[j])) return false;
        }
    }
    return true;
}

Basis Basis::from_members(Family members, int t, int k) {
    Basis b;
    b.t = t;
    b.k = k;
    b.s = members.min_member_size();
    for (SubsetWord m : members) ++b.layers[m.size()];
    b.members = std::move(members);
    return b;
}

Basis compute_basis(const Family& target, int t, int k) {
    if (target.empty()) throw precondition_error("compute_basis: empty target family");
    if (t < 1 || k < t) throw precondition_error("compute_basis: require 1 <= t <= k");
    std::vector<SubsetWord> minimal;
    TransversalSearch search(target, t);
    for (SubsetWord s : search.collect(k)) {
        if (is_minimal_transversal(s, target, t)) minimal.push_back(s);
    }
    return Basis::from_members(Family::mixed(target.ground(), std::move(minimal)), t, k);
}

bool SaturatedPair::is_nontrivial() const {
    return !F.empty() && !G.empty() && crossint::is_nontrivial(F, t) && crossint::is_nontrivial(G, t);
}

SaturatedPair saturate(const Family& F, const Family& G, int t) {
    require_same_ground(F, G);
    if (F.empty() || G.empty()) throw precondition_error("saturate: both families must be non-empty");
    if (!F.is_uniform() || F.uniformity() != G.uniformity()) {
        throw precondition_error("saturate: families must be k-uniform with the same k");
    }
    if (!is_cross_t_intersecting(F, G, t)) {
        throw precondition_error("saturate: input is not cross " + std::to_string(t) + "-intersecting");
    }
    const int k = *F.uniformity();
    Family f = F;
    Family g = G;
    for (;;) {
        Family next_f = t_transversals(g, t, k);
        Family next_g = t_transversals(next_f, t, k);
        const bool stable = next_f == f && next_g == g;
        f = std::move(next_f);
        g = std::move(next_g);
        if (stable) break;
    }
    SaturatedPair out;
    out.t = t;
    out.basis_F = compute_basis(g, t, k);
    out.basis_G = compute_basis(f, t, k);
    out.F = std::move(f);
    out.G = std::move(g);
    return out;
}

Family reconstruct_from_basis(const Basis& b, int n, int k) {
    if (b.members.empty()) throw precondition_error("reconstruct_from_basis: empty basis");
    std::vector<SubsetWord> out;
    for (SubsetWord s : enumerate_ksets(n, k)) {
        for (SubsetWord m : b.members) {
            if (m.subset_of(s)) {
                out.push_back(s);
                break;
            }
        }
    }
    return Family::uniform(n, k, std::move(out));
}

std::map<int, Family> partition_by_basis_rank(const Family& f, const Basis& b) {
    std::map<int, Family> layers;
    for (SubsetWord s : f) {
        int rank = -1;
        for (SubsetWord m : b.members) {
            if (m.subset_of(s)) rank = std::max(rank, m.size());
        }
        if (rank < 0) {
            throw precondition_error("partition_by_basis_rank: member " + to_string(s) +
                                     " contains no basis set");
        }
        auto [it, fresh] = layers.try_emplace(rank, f.ground(), f.uniformity());
        it->second.insert(s);
    }
    return layers;
}

std::vector<std::string> ClauseSet::names() const {
    std::vector<std::string> out;
    if (case_i) out.emplace_back("CASE_I");
    if (case_ii) out.emplace_back("CASE_II");
    if (case_iii) out.emplace_back("CASE_III");
    return out;
}

namespace {

void require_exact_pair(const Family& a, const Family& b, int t) {
    if (t < 1) throw precondition_error("exact pair: require t >= 1");
    if (a.empty() || b.empty()) throw precondition_error("exact pair: both families must be non-empty");
    for (const Family* side : {&a, &b}) {
        for (SubsetWord s : *side) {
            if (s.size() != t + 1) {
                throw precondition_error("exact pair: member " + to_string(s) + " is not a (t+1)-set");
            }
        }
    }
    if (!is_exact_cross_t_intersecting(a, b, t)) {
        throw precondition_error("exact pair: families are not exact cross " + std::to_string(t) +
                                 "-intersecting");
    }
}

bool case_i_one_way(const Family& small, const Family& other, int t, int k) {
    if (small.size() > 2 || other.size() > static_cast<std::size_t>(k) + 1) return false;
    return tau_t(other, t, other.ground()) >= t + 1;
}

void check_side(const Family& side, const Family& other, int t, ExactFactsReport& report) {
    for (std::size_t i = 0; i < side.size(); ++i) {
        for (std::size_t j = i + 1; j < side.size(); ++j) {
            const SubsetWord meet = side[i] & side[j];
            if (meet.size() != t - 1 && meet.size() != t) {
                report.fact1 = false;
                report.witness = {side[i], side[j]};
                report.detail = "members " + to_string(side[i]) + " and " + to_string(side[j]) + " meet in " +
                                std::to_string(meet.size()) + " elements";
                return;
            }
            if (meet.size() == t - 1) {
                for (SubsetWord o : other) {
                    if (!meet.subset_of(o)) {
                        report.fact2 = false;
                        report.witness = {side[i], side[j], o};
                        report.detail = "intersection " + to_string(meet) + " not contained in " + to_string(o);
                        return;
                    }
                }
            }
        }
    }
}

}  // namespace

ClauseSet classify_exact_pair(const Family& a, const Family& b, int t, int k) {
    require_exact_pair(a, b, t);
    if (k < t + 1) throw precondition_error("classify_exact_pair: require k >= t+1");
    ClauseSet out;
    out.case_i = case_i_one_way(a, b, t, k) || case_i_one_way(b, a, t, k);
    // Exactness forces A and B to be disjoint, so the union has >= 2 members.
    const Family all = Family::mixed(a.ground(), {}).united(a).united(b);
    out.case_ii = sunflower_check(all, t).has_value();
    const BigInt product = BigInt(a.size()) * BigInt(b.size());
    out.case_iii = 2 * product <= BigInt((t + 2) * (t + 2));
    return out;
}

ExactFactsReport check_exact_facts(const Family& a, const Family& b, int t) {
    require_exact_pair(a, b, t);
    ExactFactsReport report;
    check_side(a, b, t, report);
    if (report.ok()) check_side(b, a, t, report);
    return report;
}

}  // namespace crossint
