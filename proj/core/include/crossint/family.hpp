#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "crossint/subset.hpp"

namespace crossint {

/// A duplicate-free set of subsets of [n], kept sorted in lex order.
///
/// A family is either declared k-uniform (every member has exactly k
/// elements, checked on insertion) or mixed. An empty family keeps its
/// declaration, so an empty 3-uniform family still prints as `k=3`.
class Family {
public:
    Family() = default;
    explicit Family(int n, std::optional<int> k = std::nullopt);

    static Family uniform(int n, int k, std::vector<SubsetWord> members);
    static Family mixed(int n, std::vector<SubsetWord> members);

    int ground() const { return n_; }
    /// The declared member size, or nullopt for a mixed family.
    std::optional<int> uniformity() const { return k_; }
    bool is_uniform() const { return k_.has_value(); }

    std::span<const SubsetWord> members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    SubsetWord operator[](std::size_t i) const { return members_[i]; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool contains(SubsetWord s) const;
    /// Returns false if `s` was already present.
    bool insert(SubsetWord s);

    /// Union of both member lists over this family's ground and declaration.
    Family united(const Family& other) const;

    /// Members of the given size as a uniform family.
    Family layer(int size) const;
    /// Members of size at most `size`, same declaration as this family.
    Family up_to(int size) const;

    /// Smallest / largest member size; 0 for the empty family.
    int min_member_size() const;
    int max_member_size() const;

    friend bool operator==(const Family& a, const Family& b) {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.members_ == b.members_;
    }

private:
    void check_member(SubsetWord s) const;
    void normalize();

    int n_ = 0;
    std::optional<int> k_;
    std::vector<SubsetWord> members_;
};

/// L(n, b, m): the first m b-subsets of [n] in lex order.
Family lex_family(int n, int b, std::uint64_t m);

/// Bitwise intersection of all members. Throws on an empty family.
SubsetWord common_intersection(const Family& f);

/// Sequence-lexicographic comparison of member lists (used for witness ties).
bool family_lex_less(const Family& a, const Family& b);

// Text format:
//   n=<int> k=<int|mixed>
//   one member per line, space-separated 1-based elements ("-" is the empty set)
//   lines starting with '#' are comments; blank lines are ignored
std::string to_text(const Family& f);
Family parse_family(std::string_view text);

Family read_family_file(const std::filesystem::path& path);
void write_family_file(const std::filesystem::path& path, const Family& f,
                       std::string_view comment = {});

}  // namespace crossint
