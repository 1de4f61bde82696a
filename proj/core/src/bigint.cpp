#include "crossint/bigint.hpp"

#include <array>

#include "crossint/errors.hpp"

namespace crossint {

namespace {

constexpr int kTableSize = 65;

using Row = std::array<std::uint64_t, kTableSize>;

// Every C(m, r) with m <= 64 fits in 64 bits (C(64,32) < 2^61).
std::array<Row, kTableSize> build_pascal() {
    std::array<Row, kTableSize> tab{};
    for (int m = 0; m < kTableSize; ++m) {
        tab[m][0] = 1;
        for (int r = 1; r <= m; ++r) {
            const std::uint64_t a = tab[m - 1][r - 1];
            const std::uint64_t b = tab[m - 1][r];
            tab[m][r] = a + b;
        }
    }
    return tab;
}

const std::array<Row, kTableSize>& pascal() {
    static const auto tab = build_pascal();
    return tab;
}

}  // namespace

BigInt binomial(long long m, long long r) {
    if (m < 0 || r < 0 || r > m) return 0;
    if (r > m - r) r = m - r;
    BigInt result = 1;
    for (long long i = 1; i <= r; ++i) {
        result *= m - r + i;
        result /= i;
    }
    return result;
}

std::uint64_t binomial_u64(int m, int r) {
    if (m < 0 || r < 0 || r > m) return 0;
    if (m >= kTableSize) throw precondition_error("binomial_u64: m exceeds 64");
    return pascal()[m][r];
}

BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw precondition_error("rational with zero denominator");
    if (den < 0) return BigRational(-num, -den);
    return BigRational(num, den);
}

BigInt ipow(long long base, int exponent) {
    if (exponent < 0) throw precondition_error("ipow: negative exponent");
    return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const BigRational& value) {
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

BigRational parse_rational(std::string_view text) {
    auto parse_int = [](std::string_view s) {
        if (s.empty()) throw precondition_error("empty number");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw precondition_error("malformed number: " + std::string(s));
        for (std::size_t j = i; j < s.size(); ++j) {
            if (s[j] < '0' || s[j] > '9') throw precondition_error("malformed number: " + std::string(s));
        }
        return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return BigRational(parse_int(text));
    return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

}  // namespace crossint
