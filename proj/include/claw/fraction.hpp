#pragma once

#include <cstdint>
#include <stdexcept>

namespace claw {

/// Exact nonnegative rational on 128-bit words. Arithmetic throws
/// std::overflow_error instead of silently losing exactness; callers with
/// genuinely large instances should switch to a floating approximation
/// upstream (see caro_wei_sum_approx).
class Fraction {
    using u128 = unsigned __int128;

public:
    Fraction() = default;

    Fraction(std::uint64_t num, std::uint64_t den = 1) : num_(num), den_(den) {
        if (den == 0) throw std::invalid_argument("Fraction: zero denominator");
        reduce();
    }

    static Fraction of(unsigned __int128 num, unsigned __int128 den) {
        if (den == 0) throw std::invalid_argument("Fraction: zero denominator");
        Fraction f;
        f.num_ = num;
        f.den_ = den;
        f.reduce();
        return f;
    }

    /// Reduced numerator/denominator, if they fit a 64-bit word.
    std::uint64_t num() const { return narrow(num_); }
    std::uint64_t den() const { return narrow(den_); }

    bool is_zero() const { return num_ == 0; }

    double as_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// Three-way exact comparison without overflow: compare integer parts,
    /// then recurse on the reciprocals of the remainders (Euclidean descent).
    static int cmp(const Fraction& x, const Fraction& y) {
        u128 a = x.num_, b = x.den_, c = y.num_, d = y.den_;
        for (;;) {
            const u128 q1 = a / b, q2 = c / d;
            if (q1 != q2) return q1 < q2 ? -1 : 1;
            const u128 r1 = a % b, r2 = c % d;
            if (r1 == 0 && r2 == 0) return 0;
            if (r1 == 0) return -1;
            if (r2 == 0) return 1;
            // r1/b vs r2/d == d/r2 vs b/r1
            const u128 nb = r2, nc = b, nd = r1;
            a = d;
            b = nb;
            c = nc;
            d = nd;
        }
    }

    friend bool operator==(const Fraction& a, const Fraction& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const Fraction& a, const Fraction& b) { return cmp(a, b) != 0; }
    friend bool operator<(const Fraction& a, const Fraction& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Fraction& a, const Fraction& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Fraction& a, const Fraction& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Fraction& a, const Fraction& b) { return cmp(a, b) >= 0; }

    Fraction& operator+=(const Fraction& o) {
        const u128 g = gcd128(den_, o.den_);
        const u128 scale_this = o.den_ / g;
        const u128 scale_other = den_ / g;
        const u128 num = checked_add(checked_mul(num_, scale_this), checked_mul(o.num_, scale_other));
        const u128 den = checked_mul(den_, scale_this);
        num_ = num;
        den_ = den;
        reduce();
        return *this;
    }

    friend Fraction operator+(Fraction a, const Fraction& b) {
        a += b;
        return a;
    }

private:
    static u128 gcd128(u128 a, u128 b) {
        while (b != 0) {
            const u128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static u128 checked_mul(u128 a, u128 b) {
        if (a != 0 && b > static_cast<u128>(-1) / a)
            throw std::overflow_error("Fraction: value out of 128-bit range");
        return a * b;
    }

    static u128 checked_add(u128 a, u128 b) {
        if (a > static_cast<u128>(-1) - b)
            throw std::overflow_error("Fraction: value out of 128-bit range");
        return a + b;
    }

    static std::uint64_t narrow(u128 v) {
        if (v > static_cast<u128>(~std::uint64_t{0}))
            throw std::overflow_error("Fraction: component exceeds 64 bits");
        return static_cast<std::uint64_t>(v);
    }

    void reduce() {
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        const u128 g = gcd128(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    u128 num_ = 0;
    u128 den_ = 1;
};

}  // namespace claw
