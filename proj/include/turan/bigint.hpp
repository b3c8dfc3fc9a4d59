#pragma once

// Arbitrary-precision unsigned integer used for all exact counts.
// Counts never overflow silently: every narrowing accessor checks range.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace turan {

class BigNat {
  public:
    BigNat() = default;
    BigNat(std::uint64_t v);

    BigNat& operator+=(const BigNat& o);
    BigNat& operator-=(const BigNat& o);  // throws on underflow
    BigNat& operator*=(std::uint64_t m);
    BigNat operator*(const BigNat& o) const;

    friend BigNat operator+(BigNat a, const BigNat& b) { return a += b; }
    friend BigNat operator-(BigNat a, const BigNat& b) { return a -= b; }
    friend BigNat operator*(BigNat a, std::uint64_t m) { return a *= m; }

    std::strong_ordering operator<=>(const BigNat& o) const;
    bool operator==(const BigNat& o) const = default;

    bool is_zero() const { return limbs_.empty(); }
    bool fits_uint64() const { return limbs_.size() <= 1; }
    std::uint64_t as_uint64() const;  // throws UnsupportedScale if too large

    // Exact division by a small divisor; throws std::logic_error on a nonzero
    // remainder (callers rely on divisibility theorems).
    BigNat div_exact(std::uint64_t d) const;

    // n * (n-1) * ... * (n-k+1); returns 1 for k == 0 and 0 for k > n.
    static BigNat falling_factorial(std::uint64_t n, std::uint64_t k);

    static BigNat from_uint128(unsigned __int128 v);

    std::string str() const;  // decimal

  private:
    // Base 2^64, little endian, no trailing zero limbs; empty means 0.
    std::vector<std::uint64_t> limbs_;
    void normalize();
};

using Count = BigNat;

}  // namespace turan
