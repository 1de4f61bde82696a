#include "crossint/branching.hpp"

#include <random>

#include "crossint/errors.hpp"

namespace crossint {

BigRational BranchState::total_weight() const {
    BigRational sum = 0;
    for (const Sequence& s : live) sum += s.weight;
    for (const Sequence& s : finished) sum += s.weight;
    return sum;
}

BranchPolicy lex_policy() {
    return [](const Sequence&, const std::vector<SubsetWord>&, int) -> std::size_t { return 0; };
}

BranchPolicy random_policy(std::uint64_t seed) {
    auto rng = std::make_shared<std::mt19937_64>(seed);
    return [rng](const Sequence&, const std::vector<SubsetWord>& violators, int) -> std::size_t {
        return static_cast<std::size_t>((*rng)() % violators.size());
    };
}

BranchPolicy parse_policy(const std::string& spec) {
    if (spec == "lex") return lex_policy();
    const std::string prefix = "random:";
    if (spec.starts_with(prefix)) {
        try {
            std::size_t used = 0;
            const std::string digits = spec.substr(prefix.size());
            const unsigned long long seed = std::stoull(digits, &used);
            if (used == digits.size()) return random_policy(seed);
        } catch (const std::exception&) {
        }
    }
    throw precondition_error("unknown branch policy '" + spec + "' (expected lex or random:<seed>)");
}

std::optional<SubsetWord> branch_policy(const Sequence& seq, const Family& candidates, int t, int stage,
                                        const BranchPolicy& policy) {
    std::vector<SubsetWord> violators;
    for (SubsetWord b : candidates) {
        if (intersection_size(seq.set, b) < t) violators.push_back(b);
    }
    if (violators.empty()) return std::nullopt;
    const std::size_t pick = policy(seq, violators, stage);
    if (pick >= violators.size()) throw std::logic_error("branch policy returned an out-of-range index");
    return violators[pick];
}

namespace {

// A t-set is a t-transversal exactly when it lies in every member, so
// tau_t(B) >= t+1 iff the common intersection has fewer than t elements.
std::optional<SubsetWord> small_transversal(const Family& b, int t) {
    const SubsetWord common = common_intersection(b);
    if (common.size() < t) return std::nullopt;
    return subsets_of_size(common, t).front();
}

void expand(const Sequence& seq, SubsetWord chosen, std::vector<Sequence>& out) {
    const SubsetWord fresh = chosen - seq.set;
    const BigRational w = seq.weight / BigRational(fresh.size());
    for (int y : fresh.elements()) {
        Sequence next = seq;
        next.elements.push_back(y);
        next.set = seq.set.with(y);
        next.weight = w;
        out.push_back(std::move(next));
    }
}

}  // namespace

BranchReport run_branching(const Basis& b1, const Basis& b2, std::optional<int> r1, int t, int k,
                           const BranchPolicy& policy) {
    if (b1.members.empty() || b2.members.empty()) throw precondition_error("run_branching: empty basis");
    const int n = b1.members.ground();
    const int s1 = b1.members.min_member_size();
    if (s1 < t + 1) {
        throw precondition_error("run_branching: s(B1) = " + std::to_string(s1) + " < t+1 = " +
                                 std::to_string(t + 1));
    }
    if (r1 && (*r1 < s1 || *r1 > k)) {
        throw precondition_error("run_branching: r1 = " + std::to_string(*r1) + " outside [s(B1), k] = [" +
                                 std::to_string(s1) + ", " + std::to_string(k) + "]");
    }
    const Family low = r1 ? b1.members.up_to(*r1) : b1.members;
    if (r1) {
        if (auto w = small_transversal(low, t)) {
            throw precondition_error("run_branching: tau_t(B1^(<=" + std::to_string(*r1) +
                                     ")) <= t; the t-set " + to_string(*w) + " is a t-transversal");
        }
    }
    if (!is_cross_t_intersecting(b1.members, b2.members, t)) {
        throw precondition_error("run_branching: B1 and B2 are not cross " + std::to_string(t) + "-intersecting");
    }

    BranchReport report;
    report.t = t;
    report.k = k;
    report.s1 = s1;
    report.r1 = r1;

    BranchState state;
    // Stage 1: the t-subsets of the lex-smallest minimum-size member.
    const SubsetWord first = b1.members.layer(s1)[0];
    const BigRational w0 = make_rational(1, binomial(s1, t));
    for (SubsetWord sub : subsets_of_size(first, t)) {
        state.live.push_back(Sequence{sub.elements(), sub, w0});
    }
    state.stage = 1;
    report.stage_weight_sums.push_back(state.total_weight());

    while (!state.live.empty()) {
        ++state.stage;
        const Family& pool = (state.stage == 2 && r1) ? low : b1.members;
        std::vector<Sequence> next;
        for (const Sequence& seq : state.live) {
            const auto chosen = branch_policy(seq, pool, t, state.stage, policy);
            if (!chosen) {
                state.finished.push_back(seq);
                continue;
            }
            expand(seq, *chosen, next);
        }
        state.live = std::move(next);
        const BigRational sum = state.total_weight();
        report.stage_weight_sums.push_back(sum);
        if (sum != 1) report.weight_conserved = false;
        if (state.stage > n + 1) throw std::logic_error("run_branching: process did not terminate");
    }
    report.stages = state.stage;

    report.survivors = std::move(state.finished);
    for (const Sequence& s : report.survivors) {
        const int len = static_cast<int>(s.elements.size());
        ++report.survivors_by_length[len];
        report.mass_by_length[len] += s.weight;
        const BigRational bound =
            r1 ? make_rational(1, binomial(s1, t) * *r1 * ipow(k, std::max(0, len - t - 1)))
               : make_rational(1, binomial(s1, t) * ipow(k, std::max(0, len - t)));
        if (s.weight < bound) report.weight_bound_ok = false;
    }

    const int cover_from = r1.value_or(0);
    for (SubsetWord b : b2.members) {
        if (b.size() < cover_from) continue;
        std::optional<std::size_t> hit;
        for (std::size_t i = 0; i < report.survivors.size(); ++i) {
            if (report.survivors[i].set == b) {
                hit = i;
                break;
            }
        }
        if (!hit) report.cover_ok = false;
        report.cover.emplace_back(b, hit);
    }

    if (r1) report.lhs14 = lhs_inequality_14(b1, b2, *r1, t, k);
    report.lhs15 = lhs_inequality_15(b1, b2, t, k);
    return report;
}

BigRational lhs_inequality_14(const Basis& b1, const Basis& b2, int r1, int t, int k) {
    const int s1 = b1.members.min_member_size();
    if (r1 < t + 1) throw precondition_error("lhs_inequality_14: require r1 >= t+1");
    BigRational sum = 0;
    for (int l = r1; l <= k; ++l) {
        const std::size_t count = b2.members.layer(l).size();
        if (count == 0) continue;
        sum += make_rational(BigInt(count), binomial(s1, t) * r1 * ipow(k, l - t - 1));
    }
    return sum;
}

BigRational lhs_inequality_15(const Basis& b1, const Basis& b2, int t, int k) {
    const int s1 = b1.members.min_member_size();
    if (s1 < t) throw precondition_error("lhs_inequality_15: require s(B1) >= t");
    BigRational sum = 0;
    for (int l = s1; l <= k; ++l) {
        const std::size_t count = b2.members.layer(l).size();
        if (count == 0) continue;
        sum += make_rational(BigInt(count), binomial(s1, t) * ipow(k, l - t));
    }
    return sum;
}

std::optional<int> min_r_for_cover(const Basis& b, int t) {
    if (b.members.empty()) return std::nullopt;
    const int lo = b.members.min_member_size();
    const int hi = b.members.max_member_size();
    for (int r = lo; r <= hi; ++r) {
        if (!small_transversal(b.members.up_to(r), t)) return r;
    }
    return std::nullopt;
}

}  // namespace crossint
