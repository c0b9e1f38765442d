#ifndef PRGFL_BITSTRING_HPP
#define PRGFL_BITSTRING_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "prgfl/errors.hpp"

namespace prgfl {

/// Immutable binary word. Position 0 is the leftmost symbol; the paper's
/// 1-indexed x_1 x_2 ... x_n maps to bit(0) ... bit(n-1).
class BitString {
public:
    BitString() = default;

    /// Parse from ASCII "0"/"1" text.
    explicit BitString(std::string_view text);

    /// Word of the given length whose bits spell `index` MSB-first, so
    /// from_index(i, L) enumerates Sigma^L in lexicographic order.
    static BitString from_index(std::uint64_t index, int length);
    static BitString zeros(int length);

    int length() const { return static_cast<int>(bits_.size()); }
    bool empty() const { return bits_.empty(); }

    int bit(int pos) const {
        if (pos < 0 || pos >= length()) throw BoundsError("bit position out of range");
        return bits_[static_cast<std::size_t>(pos)];
    }

    /// Inverse of from_index. Requires length() <= 63.
    std::uint64_t index() const;

    std::string str() const;

    BitString with_bit_flipped(int pos) const;

    friend BitString operator+(const BitString& a, const BitString& b);
    auto operator<=>(const BitString&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// (sum_i u_i v_i) mod 2. Arguments must have equal length.
int inner_product_parity(const BitString& u, const BitString& v);

/// First i symbols of x.
BitString pref(const BitString& x, int i);
/// Last j symbols of x.
BitString suf(const BitString& x, int j);
/// x with the first i and last |x|-j symbols deleted, i.e. positions i+1..j.
BitString midd(const BitString& x, int i, int j);

/// Two equal-length tracks read in parallel: a binary word above an advice
/// word. Symbol i renders as "s|g".
class PairedString {
public:
    PairedString() = default;
    PairedString(BitString left, std::string right);

    int length() const { return left_.length(); }
    const BitString& left() const { return left_; }
    const std::string& right() const { return right_; }

    std::string symbol(int pos) const;
    std::vector<std::string> symbols() const;

    bool operator==(const PairedString&) const = default;

private:
    BitString left_;
    std::string right_;
};

PairedString track(const BitString& x, std::string_view y);

/// Applies fn to every word of Sigma^length in lexicographic order.
void for_each_word(int length, const std::function<void(const BitString&)>& fn);

/// Throws ResourceError when 2^length exceeds the enumeration budget.
void require_enumerable(int length, std::uint64_t budget);

inline constexpr std::uint64_t kDefaultEnumBudget = std::uint64_t{1} << 26;

} // namespace prgfl

template <>
struct std::hash<prgfl::BitString> {
    std::size_t operator()(const prgfl::BitString& w) const noexcept {
        std::size_t h = 1469598103934665603ull;
        h = (h ^ static_cast<std::size_t>(w.length())) * 1099511628211ull;
        for (int i = 0; i < w.length(); ++i)
            h = (h ^ static_cast<std::size_t>(w.bit(i))) * 1099511628211ull;
        return h;
    }
};

#endif
