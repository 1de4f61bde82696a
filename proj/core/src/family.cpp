#include "crossint/family.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "crossint/bigint.hpp"
#include "crossint/errors.hpp"

namespace crossint {

Family::Family(int n, std::optional<int> k) : n_(n), k_(k) {
    check_ground(n);
    if (k && (*k < 0 || *k > n)) {
        throw precondition_error("uniformity k=" + std::to_string(*k) + " outside [0, n]");
    }
}

Family Family::uniform(int n, int k, std::vector<SubsetWord> members) {
    Family f(n, k);
    for (SubsetWord s : members) f.check_member(s);
    f.members_ = std::move(members);
    f.normalize();
    return f;
}

Family Family::mixed(int n, std::vector<SubsetWord> members) {
    Family f(n, std::nullopt);
    for (SubsetWord s : members) f.check_member(s);
    f.members_ = std::move(members);
    f.normalize();
    return f;
}

void Family::check_member(SubsetWord s) const {
    if (!s.fits(n_)) {
        throw precondition_error("member " + to_string(s) + " exceeds ground n=" + std::to_string(n_));
    }
    if (k_ && s.size() != *k_) {
        throw precondition_error("member " + to_string(s) + " has size " + std::to_string(s.size()) +
                                 " in a " + std::to_string(*k_) + "-uniform family");
    }
}

void Family::normalize() {
    std::sort(members_.begin(), members_.end(), LexLess{});
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Family::contains(SubsetWord s) const {
    return std::binary_search(members_.begin(), members_.end(), s, LexLess{});
}

bool Family::insert(SubsetWord s) {
    check_member(s);
    auto it = std::lower_bound(members_.begin(), members_.end(), s, LexLess{});
    if (it != members_.end() && *it == s) return false;
    members_.insert(it, s);
    return true;
}

Family Family::united(const Family& other) const {
    std::vector<SubsetWord> all(members_);
    all.insert(all.end(), other.members_.begin(), other.members_.end());
    Family out(n_, k_);
    for (SubsetWord s : all) out.check_member(s);
    out.members_ = std::move(all);
    out.normalize();
    return out;
}

Family Family::layer(int size) const {
    Family out(n_, size);
    for (SubsetWord s : members_) {
        if (s.size() == size) out.members_.push_back(s);
    }
    return out;
}

Family Family::up_to(int size) const {
    Family out(n_, k_);
    for (SubsetWord s : members_) {
        if (s.size() <= size) out.members_.push_back(s);
    }
    return out;
}

int Family::min_member_size() const {
    int best = 0;
    bool first = true;
    for (SubsetWord s : members_) {
        if (first || s.size() < best) best = s.size();
        first = false;
    }
    return best;
}

int Family::max_member_size() const {
    int best = 0;
    for (SubsetWord s : members_) best = std::max(best, s.size());
    return best;
}

Family lex_family(int n, int b, std::uint64_t m) {
    check_ground(n);
    if (b < 0 || b > n) throw precondition_error("lex_family: require 0 <= b <= n");
    const std::uint64_t total = binomial_u64(n, b);
    if (m > total) {
        throw precondition_error("lex_family: m=" + std::to_string(m) + " exceeds C(n,b)=" +
                                 std::to_string(total));
    }
    std::vector<SubsetWord> members;
    members.reserve(m);
    for (SubsetWord s : enumerate_ksets(n, b)) {
        if (members.size() == m) break;
        members.push_back(s);
    }
    return Family::uniform(n, b, std::move(members));
}

SubsetWord common_intersection(const Family& f) {
    if (f.empty()) throw precondition_error("common intersection of an empty family");
    std::uint64_t bits = ~std::uint64_t{0};
    for (SubsetWord s : f) bits &= s.bits();
    return SubsetWord::from_bits(bits);
}

bool family_lex_less(const Family& a, const Family& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), LexLess{});
}

std::string to_text(const Family& f) {
    std::string out = "n=" + std::to_string(f.ground()) + " k=";
    out += f.uniformity() ? std::to_string(*f.uniformity()) : std::string("mixed");
    out += '\n';
    for (SubsetWord s : f) {
        if (s.empty()) {
            out += "-\n";
            continue;
        }
        bool first = true;
        for (int e : s.elements()) {
            if (!first) out += ' ';
            out += std::to_string(e);
            first = false;
        }
        out += '\n';
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

int parse_int(std::string_view token, int line) {
    int value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end) throw parse_error("bad integer '" + std::string(token) + "'", line);
    return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        const std::size_t j = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
        if (i > j) out.push_back(s.substr(j, i - j));
    }
    return out;
}

}  // namespace

Family parse_family(std::string_view text) {
    std::optional<Family> family;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const std::string_view raw =
            text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++line_no;

        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;

        if (!family) {
            const auto tokens = split_ws(line);
            if (tokens.size() != 2 || !tokens[0].starts_with("n=") || !tokens[1].starts_with("k=")) {
                throw parse_error("expected header 'n=<int> k=<int|mixed>'", line_no);
            }
            const int n = parse_int(tokens[0].substr(2), line_no);
            const std::string_view kv = tokens[1].substr(2);
            try {
                family = (kv == "mixed") ? Family(n) : Family(n, parse_int(kv, line_no));
            } catch (const precondition_error& e) {
                throw parse_error(e.what(), line_no);
            }
            continue;
        }

        SubsetWord member;
        if (line != "-") {
            std::vector<int> elems;
            for (std::string_view tok : split_ws(line)) elems.push_back(parse_int(tok, line_no));
            std::vector<int> sorted = elems;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
                throw parse_error("repeated element in member", line_no);
            }
            for (int e : elems) {
                if (e < 1 || e > family->ground()) {
                    throw parse_error("element " + std::to_string(e) + " outside [1, n]", line_no);
                }
            }
            member = SubsetWord::of(elems);
        }
        try {
            family->insert(member);
        } catch (const precondition_error& e) {
            throw parse_error(e.what(), line_no);
        }
    }
    if (!family) throw parse_error("missing header", line_no);
    return *family;
}

Family read_family_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw precondition_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_family(buf.str());
}

void write_family_file(const std::filesystem::path& path, const Family& f, std::string_view comment) {
    std::ofstream out(path);
    if (!out) throw precondition_error("cannot write " + path.string());
    if (!comment.empty()) out << "# " << comment << '\n';
    out << to_text(f);
}

}  // namespace crossint
