#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace golden {

using BigInt = boost::multiprecision::cpp_int;

// Element a*phi + b of the ring Z[phi], phi = (1+sqrt(5))/2.
// The representation is unique: a*phi + b == 0 iff a == 0 and b == 0.
struct GoldenInt {
    BigInt a;
    BigInt b;

    GoldenInt() : a(0), b(0) {}
    GoldenInt(BigInt coeff_phi, BigInt constant)
        : a(std::move(coeff_phi)), b(std::move(constant)) {}

    static GoldenInt of_int(BigInt n) { return GoldenInt(0, std::move(n)); }
    static GoldenInt phi() { return GoldenInt(1, 0); }

    GoldenInt operator+(const GoldenInt& o) const { return {a + o.a, b + o.b}; }
    GoldenInt operator-(const GoldenInt& o) const { return {a - o.a, b - o.b}; }
    GoldenInt operator-() const { return {-a, -b}; }

    // phi^2 = phi + 1 reduces the cross terms.
    GoldenInt operator*(const GoldenInt& o) const {
        return {a * o.a + a * o.b + b * o.a, a * o.a + b * o.b};
    }

    bool operator==(const GoldenInt& o) const { return a == o.a && b == o.b; }
    bool operator!=(const GoldenInt& o) const { return !(*this == o); }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }

    // Exact sign of a*phi + b.  Writing 2(a*phi+b) = a*sqrt(5) + c with
    // c = a + 2b, agreeing signs decide directly; otherwise the term with
    // the larger square dominates (5a^2 vs c^2, never equal for nonzero a).
    int sign() const {
        const BigInt c = a + 2 * b;
        const int sa = a.sign();
        const int sc = c.sign();
        if (sa == 0 && sc == 0) return 0;
        if (sa >= 0 && sc >= 0) return 1;
        if (sa <= 0 && sc <= 0) return -1;
        const int big_a = (5 * a * a > c * c) ? 1 : -1;
        return sa > 0 ? big_a : -big_a;
    }

    bool operator<(const GoldenInt& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const GoldenInt& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const GoldenInt& o) const { return (*this - o).sign() > 0; }
    bool operator>=(const GoldenInt& o) const { return (*this - o).sign() >= 0; }

    // Evaluates (a*sqrt(5) + c)/2.  When a and c disagree in sign the direct
    // sum cancels, so the value is taken through its conjugate: the numerator
    // 5a^2 - c^2 is computed exactly and the denominator is cancellation-free.
    double to_double() const {
        const BigInt c = a + 2 * b;
        const double sqrt5 = std::sqrt(5.0);
        const double ad = a.convert_to<double>();
        const double cd = c.convert_to<double>();
        if (a.sign() * c.sign() >= 0) return (ad * sqrt5 + cd) / 2.0;
        const BigInt num = 5 * a * a - c * c;
        return num.convert_to<double>() / (ad * sqrt5 - cd) / 2.0;
    }

    std::string str() const {
        std::string out = a.str() + "*phi";
        if (b.sign() < 0) {
            out += "-" + BigInt(-b).str();
        } else {
            out += "+" + b.str();
        }
        return out;
    }
};

inline GoldenInt operator*(const BigInt& k, const GoldenInt& x) {
    return {k * x.a, k * x.b};
}

// F_n with F_1 = F_2 = 1.
inline BigInt fib(long n) {
    if (n < 1) throw std::domain_error("fib: index must be >= 1");
    BigInt prev = 0, cur = 1;
    for (long i = 1; i < n; ++i) {
        BigInt next = prev + cur;
        prev = cur;
        cur = next;
    }
    return cur;
}

// phi^n = F_n*phi + F_{n-1}, extended down to phi^{-1} = phi - 1.
inline GoldenInt phi_power(long n) {
    if (n < -1) throw std::domain_error("phi_power: exponent must be >= -1");
    if (n == -1) return {1, -1};
    BigInt fn = 0, fnm1 = 1;
    for (long i = 0; i < n; ++i) {
        BigInt next = fn + fnm1;
        fnm1 = fn;
        fn = next;
    }
    return {fn, fnm1};
}

// Quotient of GoldenInts with a strictly positive denominator.  No canonical
// reduction is performed; equality and ordering are by cross-multiplication.
class GoldenRational {
  public:
    GoldenRational() : num_(0, 0), den_(0, 1) {}

    GoldenRational(GoldenInt num, GoldenInt den)
        : num_(std::move(num)), den_(std::move(den)) {
        const int s = den_.sign();
        if (s == 0) throw std::domain_error("GoldenRational: zero denominator");
        if (s < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    GoldenRational(const GoldenInt& whole) : num_(whole), den_(0, 1) {}

    static GoldenRational of_int(long n) {
        return GoldenRational(GoldenInt::of_int(n));
    }

    const GoldenInt& num() const { return num_; }
    const GoldenInt& den() const { return den_; }

    int cmp(const GoldenRational& o) const {
        return (num_ * o.den_ - o.num_ * den_).sign();
    }

    int sign() const { return num_.sign(); }

    bool operator==(const GoldenRational& o) const { return cmp(o) == 0; }
    bool operator!=(const GoldenRational& o) const { return cmp(o) != 0; }
    bool operator<(const GoldenRational& o) const { return cmp(o) < 0; }
    bool operator<=(const GoldenRational& o) const { return cmp(o) <= 0; }
    bool operator>(const GoldenRational& o) const { return cmp(o) > 0; }
    bool operator>=(const GoldenRational& o) const { return cmp(o) >= 0; }

    GoldenRational operator+(const GoldenRational& o) const {
        return GoldenRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    GoldenRational operator-(const GoldenRational& o) const {
        return GoldenRational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    GoldenRational operator*(const GoldenRational& o) const {
        return GoldenRational(num_ * o.num_, den_ * o.den_);
    }
    GoldenRational operator-() const { return GoldenRational(-num_, den_); }

    double to_double() const { return num_.to_double() / den_.to_double(); }

    std::string str() const { return num_.str() + " / " + den_.str(); }

  private:
    GoldenInt num_;
    GoldenInt den_;
};

}  // namespace golden
