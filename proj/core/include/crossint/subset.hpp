#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

namespace crossint {

/// Largest supported ground set. Elements are 1..n and live in one machine word.
inline constexpr int kMaxGround = 64;

/// The (n, k, t) triple shared by every operation on k-uniform families.
struct GroundParams {
    int n = 0;
    int k = 0;
    int t = 0;

    /// Validates n > k > t >= 1 and n <= kMaxGround.
    static GroundParams make(int n, int k, int t);

    friend bool operator==(const GroundParams&, const GroundParams&) = default;
};

/// Throws precondition_error unless 0 <= n <= kMaxGround.
void check_ground(int n);

/// A subset of [n] stored as a bit word; element e occupies bit e-1.
class SubsetWord {
public:
    constexpr SubsetWord() = default;

    static constexpr SubsetWord from_bits(std::uint64_t bits) { return SubsetWord(bits); }
    static SubsetWord of(std::initializer_list<int> elements);
    static SubsetWord of(std::span<const int> elements);
    /// {lo, lo+1, ..., hi}; empty when hi < lo.
    static SubsetWord range(int lo, int hi);

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int size() const { return card_; }
    constexpr bool empty() const { return bits_ == 0; }

    bool contains(int element) const;
    SubsetWord with(int element) const;
    SubsetWord without(int element) const;

    /// Smallest / largest element; 0 for the empty set.
    int min_element() const;
    int max_element() const;

    std::vector<int> elements() const;

    constexpr bool subset_of(SubsetWord other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool fits(int n) const { return n >= kMaxGround || (bits_ >> n) == 0; }

    friend constexpr SubsetWord operator&(SubsetWord a, SubsetWord b) { return SubsetWord(a.bits_ & b.bits_); }
    friend constexpr SubsetWord operator|(SubsetWord a, SubsetWord b) { return SubsetWord(a.bits_ | b.bits_); }
    friend constexpr SubsetWord operator^(SubsetWord a, SubsetWord b) { return SubsetWord(a.bits_ ^ b.bits_); }
    friend constexpr SubsetWord operator-(SubsetWord a, SubsetWord b) { return SubsetWord(a.bits_ & ~b.bits_); }

    friend constexpr bool operator==(SubsetWord a, SubsetWord b) { return a.bits_ == b.bits_; }

private:
    constexpr explicit SubsetWord(std::uint64_t bits)
        : bits_(bits), card_(static_cast<std::uint8_t>(std::popcount(bits))) {}

    std::uint64_t bits_ = 0;
    std::uint8_t card_ = 0;
};

constexpr int intersection_size(SubsetWord a, SubsetWord b) { return (a & b).size(); }

/// True iff a precedes b: the smallest element of the symmetric difference lies in a.
/// This is a strict total order on all subsets; on k-sets it is the usual
/// lexicographic order of sorted tuples.
constexpr bool lex_precedes(SubsetWord a, SubsetWord b) {
    const std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    return (a.bits() & (diff & (~diff + 1))) != 0;
}

struct LexLess {
    constexpr bool operator()(SubsetWord a, SubsetWord b) const { return lex_precedes(a, b); }
};

/// "{1,2,4}"
std::string to_string(SubsetWord s);

/// Forward range over all k-subsets of [n] in lex order.
class KSetRange {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = SubsetWord;
        using difference_type = std::ptrdiff_t;
        using pointer = const SubsetWord*;
        using reference = SubsetWord;

        iterator() = default;

        SubsetWord operator*() const { return current_; }
        iterator& operator++();
        iterator operator++(int) {
            iterator copy = *this;
            ++*this;
            return copy;
        }
        friend bool operator==(const iterator& a, const iterator& b) {
            return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_);
        }

    private:
        friend class KSetRange;
        iterator(int n, int k);

        std::vector<int> elems_;
        SubsetWord current_;
        int n_ = 0;
        bool done_ = true;
    };

    KSetRange(int n, int k);

    iterator begin() const { return iterator(n_, k_); }
    iterator end() const { return iterator(); }

private:
    int n_;
    int k_;
};

/// All k-subsets of [n], in lex order.
KSetRange enumerate_ksets(int n, int k);

/// Materialized enumerate_ksets.
std::vector<SubsetWord> all_ksets(int n, int k);

/// All r-subsets of `s`, in lex order.
std::vector<SubsetWord> subsets_of_size(SubsetWord s, int r);

}  // namespace crossint
