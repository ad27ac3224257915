#pragma once

// Exact scalars: arbitrary-precision rationals (GMP) and Gaussian rationals
// a + b*i with rational a, b.  Gaussian rationals form the coefficient field
// of every polynomial in this library.

#include <complex>
#include <sstream>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace bifur {

using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline int rat_sign(const Rat& r) { return sgn(r); }

struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() : re(0), im(0) {}
    GaussRat(long v) : re(v), im(0) {}          // NOLINT(google-explicit-constructor)
    GaussRat(Rat r) : re(std::move(r)), im(0) {} // NOLINT(google-explicit-constructor)
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat unit_i() { return GaussRat(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRat conj() const { return GaussRat(re, Rat(-im)); }

    // |z|^2, an exact rational.
    Rat norm_sq() const { return Rat(re * re + im * im); }

    GaussRat operator-() const { return GaussRat(Rat(-re), Rat(-im)); }

    GaussRat& operator+=(const GaussRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o) {
        Rat r(re * o.re - im * o.im);
        Rat i(re * o.im + im * o.re);
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    GaussRat inverse() const {
        if (is_zero()) throw std::domain_error("GaussRat: division by zero");
        Rat n = norm_sq();
        return GaussRat(Rat(re / n), Rat(-im / n));
    }

    GaussRat& operator/=(const GaussRat& o) { return *this *= o.inverse(); }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    // Canonical textual form, always re-parseable as an expression:
    //   0, 3/2, -2, i, -i, 2*i, (1-2/3*i)
    // Mixed values are parenthesized so the caller can splice them into
    // products without precedence surprises.
    std::string str() const {
        if (is_zero()) return "0";
        if (im == 0) return rat_str(re);
        std::string imag_part;
        if (im == 1)
            imag_part = "i";
        else if (im == -1)
            imag_part = "-i";
        else
            imag_part = rat_str(im) + "*i";
        if (re == 0) return imag_part;
        std::string out = "(" + rat_str(re);
        if (sgn(im) > 0)
            out += "+" + imag_part;
        else {
            // imag_part already starts with '-'
            out += imag_part;
        }
        out += ")";
        return out;
    }
};

} // namespace bifur
