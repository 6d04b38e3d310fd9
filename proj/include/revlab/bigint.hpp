#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace revlab {

// Little-endian base-2^64 unsigned integer.  Just enough exact arithmetic
// for continued-fraction recurrences and cross-multiplied gap comparisons
// with decimal targets of a few hundred digits.
class big_uint {
  public:
    big_uint() = default;
    explicit big_uint(std::uint64_t v);
    static big_uint from_decimal(std::string_view digits);
    static big_uint pow10(int k);

    bool is_zero() const { return limbs_.empty(); }
    int bit_length() const;
    bool fits_u64() const { return limbs_.size() <= 1; }
    std::uint64_t to_u64() const;  // requires fits_u64()
    long double to_long_double() const;
    double log_natural() const;  // requires nonzero
    std::string to_decimal() const;

    static int compare(const big_uint& a, const big_uint& b);
    friend bool operator==(const big_uint& a, const big_uint& b) { return compare(a, b) == 0; }
    friend bool operator<(const big_uint& a, const big_uint& b) { return compare(a, b) < 0; }
    friend bool operator<=(const big_uint& a, const big_uint& b) { return compare(a, b) <= 0; }

    friend big_uint operator+(const big_uint& a, const big_uint& b);
    friend big_uint operator-(const big_uint& a, const big_uint& b);  // requires a >= b
    friend big_uint operator*(const big_uint& a, const big_uint& b);
    big_uint times_u64(std::uint64_t m) const;
    big_uint shifted_left(int bits) const;

    // (quotient, remainder) of a / b; b must be nonzero.
    static std::pair<big_uint, big_uint> divmod(const big_uint& a, const big_uint& b);

  private:
    std::vector<std::uint64_t> limbs_;  // no trailing zero limbs
    void trim();
};

}  // namespace revlab
