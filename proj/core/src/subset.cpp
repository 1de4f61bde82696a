#include "crossint/subset.hpp"

#include "crossint/errors.hpp"

namespace crossint {

GroundParams GroundParams::make(int n, int k, int t) {
    check_ground(n);
    if (!(n > k && k > t && t >= 1)) {
        throw precondition_error("require n > k > t >= 1, got n=" + std::to_string(n) +
                                 " k=" + std::to_string(k) + " t=" + std::to_string(t));
    }
    return GroundParams{n, k, t};
}

void check_ground(int n) {
    if (n < 0 || n > kMaxGround) {
        throw precondition_error("ground size " + std::to_string(n) + " outside [0, " +
                                 std::to_string(kMaxGround) + "]");
    }
}

namespace {

std::uint64_t element_bit(int element) {
    if (element < 1 || element > kMaxGround) {
        throw precondition_error("element " + std::to_string(element) + " outside [1, 64]");
    }
    return std::uint64_t{1} << (element - 1);
}

}  // namespace

SubsetWord SubsetWord::of(std::initializer_list<int> elements) {
    return of(std::span<const int>(elements.begin(), elements.size()));
}

SubsetWord SubsetWord::of(std::span<const int> elements) {
    std::uint64_t bits = 0;
    for (int e : elements) bits |= element_bit(e);
    return SubsetWord(bits);
}

SubsetWord SubsetWord::range(int lo, int hi) {
    std::uint64_t bits = 0;
    for (int e = lo; e <= hi; ++e) bits |= element_bit(e);
    return SubsetWord(bits);
}

bool SubsetWord::contains(int element) const {
    if (element < 1 || element > kMaxGround) return false;
    return (bits_ >> (element - 1)) & 1U;
}

SubsetWord SubsetWord::with(int element) const { return SubsetWord(bits_ | element_bit(element)); }

SubsetWord SubsetWord::without(int element) const { return SubsetWord(bits_ & ~element_bit(element)); }

int SubsetWord::min_element() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

int SubsetWord::max_element() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

std::vector<int> SubsetWord::elements() const {
    std::vector<int> out;
    out.reserve(card_);
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
}

std::string to_string(SubsetWord s) {
    std::string out = "{";
    bool first = true;
    for (int e : s.elements()) {
        if (!first) out += ',';
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

KSetRange::iterator::iterator(int n, int k) : n_(n), done_(false) {
    elems_.resize(k);
    for (int i = 0; i < k; ++i) elems_[i] = i + 1;
    current_ = SubsetWord::of(elems_);
}

KSetRange::iterator& KSetRange::iterator::operator++() {
    const int k = static_cast<int>(elems_.size());
    int i = k - 1;
    while (i >= 0 && elems_[i] == n_ - k + i + 1) --i;
    if (i < 0) {
        done_ = true;
        return *this;
    }
    ++elems_[i];
    for (int j = i + 1; j < k; ++j) elems_[j] = elems_[j - 1] + 1;
    current_ = SubsetWord::of(elems_);
    return *this;
}

KSetRange::KSetRange(int n, int k) : n_(n), k_(k) {
    check_ground(n);
    if (k < 0 || k > n) throw precondition_error("enumerate_ksets: require 0 <= k <= n");
}

KSetRange enumerate_ksets(int n, int k) { return KSetRange(n, k); }

std::vector<SubsetWord> all_ksets(int n, int k) {
    std::vector<SubsetWord> out;
    for (SubsetWord s : enumerate_ksets(n, k)) out.push_back(s);
    return out;
}

std::vector<SubsetWord> subsets_of_size(SubsetWord s, int r) {
    const std::vector<int> elems = s.elements();
    const int m = static_cast<int>(elems.size());
    std::vector<SubsetWord> out;
    if (r < 0 || r > m) return out;
    for (SubsetWord idx : enumerate_ksets(m, r)) {
        std::uint64_t bits = 0;
        for (int pos : idx.elements()) bits |= std::uint64_t{1} << (elems[pos - 1] - 1);
        out.push_back(SubsetWord::from_bits(bits));
    }
    return out;
}

}  // namespace crossint
