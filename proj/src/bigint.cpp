#include "revlab/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "revlab/errors.hpp"

namespace revlab {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

big_uint::big_uint(u64 v) {
    if (v != 0) limbs_.push_back(v);
}

void big_uint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

big_uint big_uint::from_decimal(std::string_view digits) {
    if (digits.empty()) throw validation_error("empty decimal literal");
    big_uint r;
    for (char c : digits) {
        if (c < '0' || c > '9') throw validation_error("non-digit in decimal literal");
        r = r.times_u64(10);
        u64 d = static_cast<u64>(c - '0');
        if (d != 0) r = r + big_uint(d);
    }
    return r;
}

big_uint big_uint::pow10(int k) {
    big_uint r(1);
    for (int i = 0; i < k; ++i) r = r.times_u64(10);
    return r;
}

int big_uint::bit_length() const {
    if (limbs_.empty()) return 0;
    int top = 64 - std::countl_zero(limbs_.back());
    return static_cast<int>(limbs_.size() - 1) * 64 + top;
}

u64 big_uint::to_u64() const {
    if (!fits_u64()) throw guard_error("big integer does not fit 64 bits");
    return limbs_.empty() ? 0 : limbs_[0];
}

long double big_uint::to_long_double() const {
    long double r = 0.0L;
    for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it)
        r = r * 18446744073709551616.0L + static_cast<long double>(*it);
    return r;
}

double big_uint::log_natural() const {
    if (is_zero()) throw validation_error("log of zero");
    // top two limbs carry far more than double precision
    int n = static_cast<int>(limbs_.size());
    long double top = static_cast<long double>(limbs_[n - 1]);
    if (n > 1) top = top * 18446744073709551616.0L + static_cast<long double>(limbs_[n - 2]);
    int shift = (n > 1 ? n - 2 : 0) * 64;
    return static_cast<double>(std::log(top) + shift * 0.6931471805599453094L);
}

int big_uint::compare(const big_uint& a, const big_uint& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

big_uint operator+(const big_uint& a, const big_uint& b) {
    big_uint r;
    const std::size_t n = std::max(a.limbs_.size(), b.limbs_.size());
    r.limbs_.resize(n, 0);
    u128 carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        u128 s = carry;
        if (i < a.limbs_.size()) s += a.limbs_[i];
        if (i < b.limbs_.size()) s += b.limbs_[i];
        r.limbs_[i] = static_cast<u64>(s);
        carry = s >> 64;
    }
    if (carry) r.limbs_.push_back(static_cast<u64>(carry));
    return r;
}

big_uint operator-(const big_uint& a, const big_uint& b) {
    if (big_uint::compare(a, b) < 0) throw validation_error("big_uint underflow");
    big_uint r;
    r.limbs_.resize(a.limbs_.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        u128 av = a.limbs_[i];
        u128 bv = (i < b.limbs_.size() ? b.limbs_[i] : 0);
        u128 sub = bv + static_cast<u64>(borrow);
        if (av >= sub) {
            r.limbs_[i] = static_cast<u64>(av - sub);
            borrow = 0;
        } else {
            r.limbs_[i] = static_cast<u64>((u128(1) << 64) + av - sub);
            borrow = 1;
        }
    }
    r.trim();
    return r;
}

big_uint big_uint::times_u64(u64 m) const {
    big_uint r;
    if (m == 0 || is_zero()) return r;
    r.limbs_.resize(limbs_.size(), 0);
    u128 carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        u128 s = static_cast<u128>(limbs_[i]) * m + carry;
        r.limbs_[i] = static_cast<u64>(s);
        carry = s >> 64;
    }
    if (carry) r.limbs_.push_back(static_cast<u64>(carry));
    return r;
}

big_uint operator*(const big_uint& a, const big_uint& b) {
    big_uint r;
    if (a.is_zero() || b.is_zero()) return r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        u128 carry = 0;
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            u128 s = static_cast<u128>(a.limbs_[i]) * b.limbs_[j] + r.limbs_[i + j] + carry;
            r.limbs_[i + j] = static_cast<u64>(s);
            carry = s >> 64;
        }
        std::size_t k = i + b.limbs_.size();
        while (carry) {
            u128 s = static_cast<u128>(r.limbs_[k]) + carry;
            r.limbs_[k] = static_cast<u64>(s);
            carry = s >> 64;
            ++k;
        }
    }
    r.trim();
    return r;
}

big_uint big_uint::shifted_left(int bits) const {
    if (is_zero() || bits == 0) return *this;
    big_uint r;
    const int limb_shift = bits / 64;
    const int bit_shift = bits % 64;
    r.limbs_.assign(limbs_.size() + limb_shift + 1, 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        r.limbs_[i + limb_shift] |= bit_shift == 0 ? limbs_[i] : (limbs_[i] << bit_shift);
        if (bit_shift != 0) r.limbs_[i + limb_shift + 1] |= limbs_[i] >> (64 - bit_shift);
    }
    r.trim();
    return r;
}

std::pair<big_uint, big_uint> big_uint::divmod(const big_uint& a, const big_uint& b) {
    if (b.is_zero()) throw validation_error("division by zero");
    if (compare(a, b) < 0) return {big_uint(), a};
    // shift-and-subtract long division; operand sizes here are small
    const int shift = a.bit_length() - b.bit_length();
    big_uint rem = a;
    big_uint quot;
    quot.limbs_.assign(static_cast<std::size_t>(shift / 64 + 1), 0);
    for (int s = shift; s >= 0; --s) {
        big_uint d = b.shifted_left(s);
        if (compare(d, rem) <= 0) {
            rem = rem - d;
            quot.limbs_[static_cast<std::size_t>(s / 64)] |= (u64(1) << (s % 64));
        }
    }
    quot.trim();
    return {quot, rem};
}

std::string big_uint::to_decimal() const {
    if (is_zero()) return "0";
    big_uint v = *this;
    const big_uint base(10000000000000000000ull);  // 10^19
    std::string out;
    while (!v.is_zero()) {
        auto [q, r] = divmod(v, base);
        u64 part = r.limbs_.empty() ? 0 : r.limbs_[0];
        std::string block = std::to_string(part);
        if (!q.is_zero()) block.insert(0, 19 - block.size(), '0');
        out.insert(0, block);
        v = q;
    }
    return out;
}

}  // namespace revlab
