#include "turan/bigint.hpp"

#include <algorithm>
#include <stdexcept>

#include "turan/errors.hpp"

namespace turan {

BigNat::BigNat(std::uint64_t v) {
    if (v != 0) limbs_.push_back(v);
}

void BigNat::normalize() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigNat& BigNat::operator+=(const BigNat& o) {
    if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    unsigned __int128 carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        unsigned __int128 s = carry + limbs_[i];
        if (i < o.limbs_.size()) s += o.limbs_[i];
        limbs_[i] = static_cast<std::uint64_t>(s);
        carry = s >> 64;
    }
    if (carry) limbs_.push_back(static_cast<std::uint64_t>(carry));
    return *this;
}

BigNat& BigNat::operator-=(const BigNat& o) {
    if (*this < o) throw std::logic_error("BigNat subtraction underflow");
    std::uint64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        unsigned __int128 sub = borrow;
        if (i < o.limbs_.size()) sub += o.limbs_[i];
        if (static_cast<unsigned __int128>(limbs_[i]) >= sub) {
            limbs_[i] -= static_cast<std::uint64_t>(sub);
            borrow = 0;
        } else {
            limbs_[i] = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) + limbs_[i] - sub);
            borrow = 1;
        }
    }
    normalize();
    return *this;
}

BigNat& BigNat::operator*=(std::uint64_t m) {
    if (m == 0 || limbs_.empty()) {
        limbs_.clear();
        return *this;
    }
    unsigned __int128 carry = 0;
    for (auto& limb : limbs_) {
        unsigned __int128 p = static_cast<unsigned __int128>(limb) * m + carry;
        limb = static_cast<std::uint64_t>(p);
        carry = p >> 64;
    }
    if (carry) limbs_.push_back(static_cast<std::uint64_t>(carry));
    return *this;
}

BigNat BigNat::operator*(const BigNat& o) const {
    BigNat r;
    if (limbs_.empty() || o.limbs_.empty()) return r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        unsigned __int128 carry = 0;
        for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
            unsigned __int128 p = static_cast<unsigned __int128>(limbs_[i]) * o.limbs_[j] + r.limbs_[i + j] + carry;
            r.limbs_[i + j] = static_cast<std::uint64_t>(p);
            carry = p >> 64;
        }
        r.limbs_[i + o.limbs_.size()] += static_cast<std::uint64_t>(carry);
    }
    r.normalize();
    return r;
}

std::strong_ordering BigNat::operator<=>(const BigNat& o) const {
    if (limbs_.size() != o.limbs_.size()) return limbs_.size() <=> o.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != o.limbs_[i]) return limbs_[i] <=> o.limbs_[i];
    }
    return std::strong_ordering::equal;
}

std::uint64_t BigNat::as_uint64() const {
    if (limbs_.size() > 1) throw UnsupportedScale("count does not fit in 64 bits: " + str());
    return limbs_.empty() ? 0 : limbs_[0];
}

BigNat BigNat::div_exact(std::uint64_t d) const {
    if (d == 0) throw std::logic_error("BigNat division by zero");
    BigNat q;
    q.limbs_.assign(limbs_.size(), 0);
    unsigned __int128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        unsigned __int128 cur = (rem << 64) | limbs_[i];
        q.limbs_[i] = static_cast<std::uint64_t>(cur / d);
        rem = cur % d;
    }
    if (rem != 0) throw std::logic_error("BigNat division expected to be exact");
    q.normalize();
    return q;
}

BigNat BigNat::falling_factorial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return BigNat();
    BigNat r(1);
    for (std::uint64_t i = 0; i < k; ++i) r *= (n - i);
    return r;
}

BigNat BigNat::from_uint128(unsigned __int128 v) {
    BigNat r;
    if (v != 0) {
        r.limbs_.push_back(static_cast<std::uint64_t>(v));
        std::uint64_t hi = static_cast<std::uint64_t>(v >> 64);
        if (hi) r.limbs_.push_back(hi);
    }
    return r;
}

std::string BigNat::str() const {
    if (limbs_.empty()) return "0";
    // Repeated divmod by 10^19, the largest power of ten in a 64-bit limb.
    constexpr std::uint64_t kChunk = 10000000000000000000ull;
    std::vector<std::uint64_t> work = limbs_;
    std::string out;
    while (!work.empty()) {
        unsigned __int128 rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            unsigned __int128 cur = (rem << 64) | work[i];
            work[i] = static_cast<std::uint64_t>(cur / kChunk);
            rem = cur % kChunk;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        std::uint64_t digits = static_cast<std::uint64_t>(rem);
        for (int i = 0; i < 19; ++i) {
            out.push_back(static_cast<char>('0' + digits % 10));
            digits /= 10;
        }
    }
    while (out.size() > 1 && out.back() == '0') out.pop_back();
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace turan
