#include "prgfl/bitstring.hpp"

namespace prgfl {

BitString::BitString(std::string_view text) {
    bits_.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') throw ConfigError("bit string may contain only '0' and '1'");
        bits_.push_back(static_cast<std::uint8_t>(c - '0'));
    }
}

BitString BitString::from_index(std::uint64_t index, int length) {
    if (length < 0 || length > 63) throw BoundsError("from_index supports lengths 0..63");
    if (length < 64 && index >> length) throw BoundsError("index does not fit in the given length");
    BitString w;
    w.bits_.resize(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i)
        w.bits_[static_cast<std::size_t>(i)] =
            static_cast<std::uint8_t>((index >> (length - 1 - i)) & 1u);
    return w;
}

BitString BitString::zeros(int length) {
    if (length < 0) throw BoundsError("negative length");
    BitString w;
    w.bits_.assign(static_cast<std::size_t>(length), 0);
    return w;
}

std::uint64_t BitString::index() const {
    if (length() > 63) throw BoundsError("word too long for a 64-bit index");
    std::uint64_t v = 0;
    for (std::uint8_t b : bits_) v = (v << 1) | b;
    return v;
}

std::string BitString::str() const {
    std::string s;
    s.reserve(bits_.size());
    for (std::uint8_t b : bits_) s.push_back(static_cast<char>('0' + b));
    return s;
}

BitString BitString::with_bit_flipped(int pos) const {
    if (pos < 0 || pos >= length()) throw BoundsError("flip position out of range");
    BitString r = *this;
    r.bits_[static_cast<std::size_t>(pos)] ^= 1u;
    return r;
}

BitString operator+(const BitString& a, const BitString& b) {
    BitString r = a;
    r.bits_.insert(r.bits_.end(), b.bits_.begin(), b.bits_.end());
    return r;
}

int inner_product_parity(const BitString& u, const BitString& v) {
    if (u.length() != v.length()) throw DimensionError("inner product needs equal lengths");
    int acc = 0;
    for (int i = 0; i < u.length(); ++i) acc ^= u.bit(i) & v.bit(i);
    return acc;
}

BitString pref(const BitString& x, int i) { return midd(x, 0, i); }

BitString suf(const BitString& x, int j) {
    if (j < 0 || j > x.length()) throw BoundsError("suffix length out of range");
    return midd(x, x.length() - j, x.length());
}

BitString midd(const BitString& x, int i, int j) {
    if (i < 0 || j < i || j > x.length()) throw BoundsError("midd indices out of range");
    std::string s;
    s.reserve(static_cast<std::size_t>(j - i));
    for (int p = i; p < j; ++p) s.push_back(static_cast<char>('0' + x.bit(p)));
    return BitString(s);
}

PairedString::PairedString(BitString left, std::string right)
    : left_(std::move(left)), right_(std::move(right)) {
    if (left_.length() != static_cast<int>(right_.size()))
        throw DimensionError("track pairing needs equal lengths");
}

std::string PairedString::symbol(int pos) const {
    if (pos < 0 || pos >= length()) throw BoundsError("paired position out of range");
    std::string s;
    s.push_back(static_cast<char>('0' + left_.bit(pos)));
    s.push_back('|');
    s.push_back(right_[static_cast<std::size_t>(pos)]);
    return s;
}

std::vector<std::string> PairedString::symbols() const {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(length()));
    for (int i = 0; i < length(); ++i) out.push_back(symbol(i));
    return out;
}

PairedString track(const BitString& x, std::string_view y) {
    return PairedString(x, std::string(y));
}

void for_each_word(int length, const std::function<void(const BitString&)>& fn) {
    const std::uint64_t total = std::uint64_t{1} << length;
    for (std::uint64_t i = 0; i < total; ++i) fn(BitString::from_index(i, length));
}

void require_enumerable(int length, std::uint64_t budget) {
    if (length < 0) throw BoundsError("negative length");
    if (length >= 63 || (std::uint64_t{1} << length) > budget)
        throw ResourceError("enumerating 2^" + std::to_string(length) +
                            " words exceeds the configured budget");
}

} // namespace prgfl
