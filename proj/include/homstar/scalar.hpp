#ifndef HOMSTAR_SCALAR_HPP
#define HOMSTAR_SCALAR_HPP

#include <gmpxx.h>

#include <string>

#include "homstar/common.hpp"

namespace homstar {

using Rational = mpq_class;

/// Element of the Gaussian rationals, re + i*im. All arithmetic is exact.
struct Scalar {
    Rational re{0};
    Rational im{0};

    Scalar() = default;
    Scalar(long n) : re(n) {}                       // NOLINT: implicit by design
    Scalar(long num, long den) : re(num, den) { re.canonicalize(); }
    explicit Scalar(Rational r) : re(std::move(r)) {}
    Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Scalar operator-() const { return Scalar(-re, -im); }
    Scalar conj() const { return Scalar(re, -im); }

    Scalar& operator+=(const Scalar& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    Scalar& operator/=(const Scalar& o) {
        if (o.is_zero()) throw StructuralError("Scalar: division by zero");
        Rational n = o.re * o.re + o.im * o.im;
        Rational r = (re * o.re + im * o.im) / n;
        Rational i = (im * o.re - re * o.im) / n;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Total order used only to keep containers and output deterministic.
    friend bool operator<(const Scalar& a, const Scalar& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }

    /// Canonical text form: "a/b", "c/d*i" or "a/b+c/d*i" (minus signs folded in).
    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        if (re != 0) s = re.get_str();
        if (im != 0) {
            if (im > 0 && !s.empty()) s += "+";
            if (im == -1)
                s += "-";
            else if (im != 1)
                s += im.get_str() + "*";
            s += "i";
        }
        return s;
    }
};

inline Scalar rational_scalar(long num, long den = 1) { return Scalar(num, den); }

/// Exact n! as a Rational.
inline Rational factorial(int n) {
    Rational r(1);
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

/// Exact binomial coefficient.
inline Rational binomial(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    Rational r(1);
    for (int j = 1; j <= k; ++j) {
        r *= (n - k + j);
        r /= j;
    }
    return r;
}

} // namespace homstar

#endif
