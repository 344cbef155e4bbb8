#pragma once

/**
 * @file bigint.hpp
 * @brief Arbitrary-precision signed integers (sign + base-1e9 magnitude).
 *
 * Every quantity in this library is exact; BigInt is the ground type that
 * the rationals, polynomials and counting functions are built on. The
 * representation keeps limbs in base 10^9 so decimal I/O is cheap and all
 * intermediate products fit in 64 bits.
 */

#include <algorithm>
#include <cstdint>
#include <compare>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace prismslice {

class BigInt {
public:
    static constexpr std::uint32_t kBase = 1'000'000'000u;

    BigInt() = default;

    BigInt(long long v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        // careful with LLONG_MIN: negate via unsigned
        unsigned long long u = v < 0 ? 0ULL - static_cast<unsigned long long>(v)
                                     : static_cast<unsigned long long>(v);
        while (u > 0) {
            limbs_.push_back(static_cast<std::uint32_t>(u % kBase));
            u /= kBase;
        }
    }

    explicit BigInt(std::string_view dec) {
        std::size_t pos = 0;
        int sign = 1;
        if (pos < dec.size() && (dec[pos] == '+' || dec[pos] == '-')) {
            sign = dec[pos] == '-' ? -1 : 1;
            ++pos;
        }
        if (pos == dec.size())
            throw std::invalid_argument("BigInt: empty numeral");
        for (std::size_t i = pos; i < dec.size(); ++i)
            if (dec[i] < '0' || dec[i] > '9')
                throw std::invalid_argument("BigInt: bad digit in numeral");
        // parse in 9-digit chunks from the least significant end
        std::size_t len = dec.size() - pos;
        limbs_.reserve((len + 8) / 9);
        std::size_t end = dec.size();
        while (end > pos) {
            std::size_t begin = end >= pos + 9 ? end - 9 : pos;
            std::uint32_t limb = 0;
            for (std::size_t i = begin; i < end; ++i)
                limb = limb * 10 + static_cast<std::uint32_t>(dec[i] - '0');
            limbs_.push_back(limb);
            end = begin;
        }
        trim();
        sign_ = limbs_.empty() ? 0 : sign;
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.limbs_, b.limbs_);
            if (c == 0) return BigInt{};
            if (c > 0) {
                r.limbs_ = sub_mag(a.limbs_, b.limbs_);
                r.sign_ = a.sign_;
            } else {
                r.limbs_ = sub_mag(b.limbs_, a.limbs_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt{};
        BigInt r;
        r.limbs_ = mul_mag(a.limbs_, b.limbs_);
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    /// Truncated division, C++ semantics: (-7)/2 == -3, (-7)%2 == -1.
    friend BigInt operator/(const BigInt& a, const BigInt& b) { return divmod(a, b).first; }
    friend BigInt operator%(const BigInt& a, const BigInt& b) { return divmod(a, b).second; }

    static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        if (cmp_mag(a.limbs_, b.limbs_) < 0) return {BigInt{}, a};
        auto [qm, rm] = divmod_mag(a.limbs_, b.limbs_);
        BigInt q, r;
        q.limbs_ = std::move(qm);
        q.trim();
        q.sign_ = q.limbs_.empty() ? 0 : a.sign_ * b.sign_;
        r.limbs_ = std::move(rm);
        r.trim();
        r.sign_ = r.limbs_.empty() ? 0 : a.sign_;
        return {q, r};
    }

    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }
    BigInt& operator/=(const BigInt& o) { *this = *this / o; return *this; }
    BigInt& operator%=(const BigInt& o) { *this = *this % o; return *this; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
    }

    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (a.sign_ < 0) c = -c;
        return c <=> 0;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a.sign_ = a.limbs_.empty() ? 0 : 1;
        b.sign_ = b.limbs_.empty() ? 0 : 1;
        while (!b.is_zero()) {
            BigInt r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    static BigInt pow(const BigInt& base, unsigned long long exp) {
        BigInt acc(1), sq = base;
        while (exp > 0) {
            if (exp & 1) acc *= sq;
            exp >>= 1;
            if (exp) sq *= sq;
        }
        return acc;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::string s = sign_ < 0 ? "-" : "";
        s += std::to_string(limbs_.back());
        for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
            std::string part = std::to_string(limbs_[i]);
            s += std::string(9 - part.size(), '0') + part;
        }
        return s;
    }

    double to_double() const { return scaled_to_double(0); }

    /// value / kBase^dropped_limbs, rounded; lets ratios of huge numbers be
    /// formed without overflowing double on both sides.
    double scaled_to_double(std::size_t dropped_limbs) const {
        double v = 0.0;
        for (std::size_t i = limbs_.size(); i-- > dropped_limbs;)
            v = v * static_cast<double>(kBase) + static_cast<double>(limbs_[i]);
        return sign_ < 0 ? -v : v;
    }

    std::size_t limb_count() const { return limbs_.size(); }

    bool fits_long_long() const {
        static const BigInt lo(std::numeric_limits<long long>::min());
        static const BigInt hi(std::numeric_limits<long long>::max());
        return lo <= *this && *this <= hi;
    }

    long long to_long_long() const {
        if (!fits_long_long()) throw std::overflow_error("BigInt: value exceeds long long");
        long long v = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;)
            v = v * static_cast<long long>(kBase) + static_cast<long long>(limbs_[i]);
        return sign_ < 0 ? -v : v;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v) {
        return os << v.to_string();
    }

private:
    int sign_ = 0;                     // -1, 0, +1; 0 iff limbs_ empty
    std::vector<std::uint32_t> limbs_; // little-endian base 1e9, no leading zeros

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) sign_ = 0;
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> r(big.size() + 1, 0);
        std::uint32_t carry = 0;
        for (std::size_t i = 0; i < big.size(); ++i) {
            std::uint32_t s = big[i] + carry;
            if (i < small.size()) s += small[i];
            carry = s >= kBase ? 1 : 0;
            r[i] = carry ? s - kBase : s;
        }
        r[big.size()] = carry;
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size(), 0);
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow -
                             (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            if (d < 0) {
                d += kBase;
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<std::uint32_t>(d);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint64_t> acc(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t carry = 0;
            std::uint64_t ai = a[i];
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t cur = acc[i + j] + ai * b[j] + carry;
                acc[i + j] = cur % kBase;
                carry = cur / kBase;
            }
            std::size_t j = i + b.size();
            while (carry > 0) {
                std::uint64_t cur = acc[j] + carry;
                acc[j] = cur % kBase;
                carry = cur / kBase;
                ++j;
            }
        }
        std::vector<std::uint32_t> r(acc.size());
        for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<std::uint32_t>(acc[i]);
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // Knuth algorithm D on base-1e9 limbs; requires |u| >= |v| > 0.
    static std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>
    divmod_mag(std::vector<std::uint32_t> u, std::vector<std::uint32_t> v) {
        if (v.size() == 1) {
            std::uint64_t d = v[0], rem = 0;
            std::vector<std::uint32_t> q(u.size());
            for (std::size_t i = u.size(); i-- > 0;) {
                std::uint64_t cur = rem * kBase + u[i];
                q[i] = static_cast<std::uint32_t>(cur / d);
                rem = cur % d;
            }
            return {std::move(q), {static_cast<std::uint32_t>(rem)}};
        }
        // normalize so the divisor's top limb is >= base/2
        std::uint32_t d = static_cast<std::uint32_t>(kBase / (static_cast<std::uint64_t>(v.back()) + 1));
        if (d > 1) {
            u = mul_small(u, d);
            v = mul_small(v, d);
        }
        const std::size_t n = v.size(), m = u.size() - n;
        u.push_back(0);
        std::vector<std::uint32_t> q(m + 1, 0);
        for (std::size_t j = m + 1; j-- > 0;) {
            std::uint64_t top = static_cast<std::uint64_t>(u[j + n]) * kBase + u[j + n - 1];
            std::uint64_t qhat = top / v[n - 1];
            std::uint64_t rhat = top % v[n - 1];
            while (qhat >= kBase ||
                   qhat * v[n - 2] > rhat * kBase + u[j + n - 2]) {
                --qhat;
                rhat += v[n - 1];
                if (rhat >= kBase) break;
            }
            // multiply-subtract qhat*v from u[j..j+n]
            std::int64_t borrow = 0;
            std::uint64_t carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t prod = qhat * v[i] + carry;
                carry = prod / kBase;
                std::int64_t diff = static_cast<std::int64_t>(u[i + j]) -
                                    static_cast<std::int64_t>(prod % kBase) - borrow;
                if (diff < 0) {
                    diff += kBase;
                    borrow = 1;
                } else {
                    borrow = 0;
                }
                u[i + j] = static_cast<std::uint32_t>(diff);
            }
            std::int64_t diff = static_cast<std::int64_t>(u[j + n]) -
                                static_cast<std::int64_t>(carry) - borrow;
            if (diff < 0) {
                // qhat was one too large: add v back
                diff += kBase;
                --qhat;
                std::uint32_t c2 = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint32_t s = u[i + j] + v[i] + c2;
                    c2 = s >= kBase ? 1 : 0;
                    u[i + j] = c2 ? s - kBase : s;
                }
                diff += c2;
                if (diff >= kBase) diff -= kBase;
            }
            u[j + n] = static_cast<std::uint32_t>(diff);
            q[j] = static_cast<std::uint32_t>(qhat);
        }
        u.resize(n);
        if (d > 1) u = div_small(u, d);
        while (!q.empty() && q.back() == 0) q.pop_back();
        while (!u.empty() && u.back() == 0) u.pop_back();
        return {std::move(q), std::move(u)};
    }

    static std::vector<std::uint32_t> mul_small(const std::vector<std::uint32_t>& a, std::uint32_t s) {
        std::vector<std::uint32_t> r(a.size() + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * s + carry;
            r[i] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        r[a.size()] = static_cast<std::uint32_t>(carry);
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static std::vector<std::uint32_t> div_small(const std::vector<std::uint32_t>& a, std::uint32_t s) {
        std::vector<std::uint32_t> r(a.size());
        std::uint64_t rem = 0;
        for (std::size_t i = a.size(); i-- > 0;) {
            std::uint64_t cur = rem * kBase + a[i];
            r[i] = static_cast<std::uint32_t>(cur / s);
            rem = cur % s;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

} // namespace prismslice
