#include "qframe/bigint.hpp"

#include <algorithm>
#include <cmath>

#include "qframe/errors.hpp"

namespace qframe {

BigUint::BigUint(uint64_t v) {
    if (v != 0) {
        limbs_.push_back(static_cast<uint32_t>(v & 0xffffffffu));
        if (v >> 32) limbs_.push_back(static_cast<uint32_t>(v >> 32));
    }
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

size_t BigUint::bit_length() const {
    if (limbs_.empty()) return 0;
    uint32_t top = limbs_.back();
    size_t n = (limbs_.size() - 1) * 32;
    while (top) {
        ++n;
        top >>= 1;
    }
    return n;
}

bool BigUint::bit(size_t i) const {
    size_t limb = i / 32;
    if (limb >= limbs_.size()) return false;
    return (limbs_[limb] >> (i % 32)) & 1u;
}

size_t BigUint::trailing_zero_bits() const {
    if (limbs_.empty()) return 0;
    size_t n = 0;
    for (uint32_t w : limbs_) {
        if (w == 0) {
            n += 32;
            continue;
        }
        while (!(w & 1u)) {
            ++n;
            w >>= 1;
        }
        break;
    }
    return n;
}

uint64_t BigUint::to_u64() const {
    if (!fits_u64()) throw domain_error("BigUint does not fit in 64 bits");
    uint64_t v = 0;
    if (limbs_.size() > 1) v = static_cast<uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

int BigUint::compare(const BigUint& a, const BigUint& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

BigUint operator+(const BigUint& a, const BigUint& b) {
    BigUint r;
    const size_t n = std::max(a.limbs_.size(), b.limbs_.size());
    r.limbs_.resize(n);
    uint64_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
        uint64_t s = carry;
        if (i < a.limbs_.size()) s += a.limbs_[i];
        if (i < b.limbs_.size()) s += b.limbs_[i];
        r.limbs_[i] = static_cast<uint32_t>(s & 0xffffffffu);
        carry = s >> 32;
    }
    if (carry) r.limbs_.push_back(static_cast<uint32_t>(carry));
    return r;
}

BigUint operator-(const BigUint& a, const BigUint& b) {
    if (BigUint::compare(a, b) < 0) throw domain_error("BigUint subtraction underflow");
    BigUint r;
    r.limbs_.resize(a.limbs_.size());
    int64_t borrow = 0;
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
        int64_t d = static_cast<int64_t>(a.limbs_[i]) - borrow;
        if (i < b.limbs_.size()) d -= b.limbs_[i];
        if (d < 0) {
            d += (1ll << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.limbs_[i] = static_cast<uint32_t>(d);
    }
    r.trim();
    return r;
}

BigUint operator*(const BigUint& a, const BigUint& b) {
    if (a.is_zero() || b.is_zero()) return {};
    BigUint r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.limbs_.size(); ++j) {
            uint64_t cur = r.limbs_[i + j] +
                           static_cast<uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
            r.limbs_[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        size_t k = i + b.limbs_.size();
        while (carry) {
            uint64_t cur = r.limbs_[k] + carry;
            r.limbs_[k] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    r.trim();
    return r;
}

BigUint BigUint::shl(size_t bits) const {
    if (is_zero() || bits == 0) return *this;
    const size_t limb_shift = bits / 32;
    const size_t bit_shift = bits % 32;
    BigUint r;
    r.limbs_.assign(limbs_.size() + limb_shift + 1, 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t v = static_cast<uint64_t>(limbs_[i]) << bit_shift;
        r.limbs_[i + limb_shift] |= static_cast<uint32_t>(v & 0xffffffffu);
        r.limbs_[i + limb_shift + 1] |= static_cast<uint32_t>(v >> 32);
    }
    r.trim();
    return r;
}

BigUint BigUint::shr(size_t bits) const {
    const size_t limb_shift = bits / 32;
    const size_t bit_shift = bits % 32;
    if (limb_shift >= limbs_.size()) return {};
    BigUint r;
    r.limbs_.assign(limbs_.size() - limb_shift, 0);
    for (size_t i = 0; i < r.limbs_.size(); ++i) {
        uint64_t v = limbs_[i + limb_shift] >> bit_shift;
        if (bit_shift && i + limb_shift + 1 < limbs_.size())
            v |= static_cast<uint64_t>(limbs_[i + limb_shift + 1]) << (32 - bit_shift);
        r.limbs_[i] = static_cast<uint32_t>(v);
    }
    r.trim();
    return r;
}

BigUint::DivMod BigUint::divmod(const BigUint& num, const BigUint& den) {
    if (den.is_zero()) throw domain_error("division by zero");
    DivMod out;
    if (compare(num, den) < 0) {
        out.rem = num;
        return out;
    }
    const size_t nbits = num.bit_length();
    out.quot.limbs_.assign((nbits + 31) / 32, 0);
    BigUint rem;
    for (size_t i = nbits; i-- > 0;) {
        rem = rem.shl(1);
        if (num.bit(i)) {
            if (rem.limbs_.empty()) rem.limbs_.push_back(0);
            rem.limbs_[0] |= 1u;
        }
        if (compare(rem, den) >= 0) {
            rem = rem - den;
            out.quot.limbs_[i / 32] |= (1u << (i % 32));
        }
    }
    out.quot.trim();
    out.rem = rem;
    return out;
}

std::string BigUint::to_string() const {
    if (is_zero()) return "0";
    std::string digits;
    BigUint cur = *this;
    const BigUint ten(10);
    while (!cur.is_zero()) {
        auto dm = divmod(cur, ten);
        digits.push_back(static_cast<char>('0' + (dm.rem.is_zero() ? 0 : dm.rem.limbs_[0])));
        cur = dm.quot;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

BigUint isqrt(const BigUint& n) {
    if (n.is_zero()) return {};
    // digit-by-digit: build the root from the top bit down
    BigUint root;
    for (size_t i = (n.bit_length() + 1) / 2; i-- > 0;) {
        BigUint candidate = root;
        BigUint one(1);
        candidate = candidate + one.shl(i);
        if (BigUint::compare(candidate * candidate, n) <= 0) root = candidate;
    }
    return root;
}

BigUint gcd(BigUint a, BigUint b) {
    while (!b.is_zero()) {
        auto dm = BigUint::divmod(a, b);
        a = b;
        b = dm.rem;
    }
    return a;
}

BigInt::BigInt(int64_t v) {
    if (v > 0) {
        sign_ = 1;
        mag_ = BigUint(static_cast<uint64_t>(v));
    } else if (v < 0) {
        sign_ = -1;
        // careful with INT64_MIN
        mag_ = BigUint(static_cast<uint64_t>(-(v + 1)) + 1);
    }
}

BigInt::BigInt(int sign, BigUint mag) : sign_(sign), mag_(std::move(mag)) {
    if (mag_.is_zero()) sign_ = 0;
    else if (sign_ != -1 && sign_ != 1)
        throw domain_error("BigInt sign must be -1 or +1 for nonzero magnitude");
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    if (a.sign_ == b.sign_) return BigInt(a.sign_, a.mag_ + b.mag_);
    int c = BigUint::compare(a.mag_, b.mag_);
    if (c == 0) return {};
    return c > 0 ? BigInt(a.sign_, a.mag_ - b.mag_) : BigInt(b.sign_, b.mag_ - a.mag_);
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return {};
    return BigInt(a.sign_ * b.sign_, a.mag_ * b.mag_);
}

BigInt::DivMod BigInt::divmod_trunc(const BigInt& num, const BigInt& den) {
    if (den.sign_ == 0) throw domain_error("division by zero");
    auto dm = BigUint::divmod(num.mag_, den.mag_);
    DivMod out;
    out.quot = dm.quot.is_zero() ? BigInt() : BigInt(num.sign_ * den.sign_, dm.quot);
    out.rem = dm.rem.is_zero() ? BigInt() : BigInt(num.sign_, dm.rem);
    return out;
}

int BigInt::compare(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    int c = BigUint::compare(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c : -c;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    return sign_ < 0 ? "-" + mag_.to_string() : mag_.to_string();
}

double BigInt::to_double() const {
    if (sign_ == 0) return 0.0;
    double v = 0.0;
    const auto& limbs = mag_.limbs();
    for (size_t i = limbs.size(); i-- > 0;) v = v * 4294967296.0 + limbs[i];
    return sign_ < 0 ? -v : v;
}

int64_t BigInt::to_i64() const {
    if (sign_ == 0) return 0;
    uint64_t m = mag_.to_u64();
    if (sign_ > 0) {
        if (m > static_cast<uint64_t>(INT64_MAX)) throw domain_error("BigInt does not fit in int64");
        return static_cast<int64_t>(m);
    }
    if (m > static_cast<uint64_t>(INT64_MAX) + 1) throw domain_error("BigInt does not fit in int64");
    return -static_cast<int64_t>(m - 1) - 1;
}

} // namespace qframe
