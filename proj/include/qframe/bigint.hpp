#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace qframe {

// Unsigned arbitrary-precision integer, little-endian 32-bit limbs,
// normalized (no trailing zero limbs; zero is an empty limb vector).
// Schoolbook algorithms throughout; operand sizes here stay small
// (a few hundred bits at most).
class BigUint {
public:
    BigUint() = default;
    explicit BigUint(uint64_t v);

    bool is_zero() const { return limbs_.empty(); }
    bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1; }

    // Number of significant bits; 0 for zero.
    size_t bit_length() const;
    bool bit(size_t i) const;
    // Largest e with 2^e dividing the value; 0 for zero.
    size_t trailing_zero_bits() const;

    bool fits_u64() const { return limbs_.size() <= 2; }
    uint64_t to_u64() const; // throws domain_error if it does not fit

    static int compare(const BigUint& a, const BigUint& b);
    friend bool operator==(const BigUint& a, const BigUint& b) { return compare(a, b) == 0; }
    friend std::strong_ordering operator<=>(const BigUint& a, const BigUint& b) {
        int c = compare(a, b);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend BigUint operator+(const BigUint& a, const BigUint& b);
    friend BigUint operator-(const BigUint& a, const BigUint& b); // requires a >= b
    friend BigUint operator*(const BigUint& a, const BigUint& b);

    BigUint shl(size_t bits) const;
    BigUint shr(size_t bits) const;

    struct DivMod;
    // Binary long division; throws domain_error on zero divisor.
    static DivMod divmod(const BigUint& num, const BigUint& den);

    std::string to_string() const; // base 10

    const std::vector<uint32_t>& limbs() const { return limbs_; }

private:
    void trim();
    std::vector<uint32_t> limbs_;
};

struct BigUint::DivMod {
    BigUint quot;
    BigUint rem;
};

// floor(sqrt(n))
BigUint isqrt(const BigUint& n);
BigUint gcd(BigUint a, BigUint b);

// Signed arbitrary-precision integer as sign and magnitude.
class BigInt {
public:
    BigInt() = default;
    BigInt(int64_t v); // NOLINT: implicit by design, mirrors built-in ints
    BigInt(int sign, BigUint mag);

    int sign() const { return sign_; }
    const BigUint& mag() const { return mag_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_odd() const { return !mag_.is_zero() && mag_.bit(0); }

    BigInt operator-() const { return BigInt(-sign_, mag_); }
    BigInt abs() const { return BigInt(sign_ == 0 ? 0 : 1, mag_); }

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    BigInt shl(size_t bits) const { return BigInt(sign_, mag_.shl(bits)); }

    // Truncated division (quotient rounds toward zero).
    struct DivMod;
    static DivMod divmod_trunc(const BigInt& num, const BigInt& den);

    static int compare(const BigInt& a, const BigInt& b);
    friend bool operator==(const BigInt& a, const BigInt& b) { return compare(a, b) == 0; }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        int c = compare(a, b);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::string to_string() const;
    double to_double() const;
    int64_t to_i64() const; // throws domain_error if it does not fit

private:
    int sign_ = 0; // -1, 0, +1; zero iff mag_ is zero
    BigUint mag_;
};

struct BigInt::DivMod {
    BigInt quot;
    BigInt rem;
};

} // namespace qframe
