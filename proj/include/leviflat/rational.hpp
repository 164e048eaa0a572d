#ifndef LEVIFLAT_RATIONAL_HPP
#define LEVIFLAT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "leviflat/errors.hpp"

namespace lf {

// Element of the field Q(i): a + b*i with exact rational a, b.
// Both components are kept in canonical reduced form (lowest terms,
// positive denominator), which mpq_class maintains for all arithmetic.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long n) : re_(n), im_(0) {}
    GaussianRational(const mpq_class& re) : re_(re), im_(0) { canonical(re_); }
    GaussianRational(const mpq_class& re, const mpq_class& im) : re_(re), im_(im) {
        canonical(re_);
        canonical(im_);
    }

    static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    // re^2 + im^2, a nonnegative rational; zero only for the zero element.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class i2 = re_ * o.im_ + im_ * o.re_;
        re_ = r;
        im_ = i2;
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero()) throw InputError("division by zero in Q(i)");
        mpq_class n = o.norm();
        mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
        mpq_class i2 = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = r;
        im_ = i2;
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    // Stable total order used only for deterministic sorting of values.
    int cmp(const GaussianRational& o) const {
        int c = ::cmp(re_, o.re_);
        if (c != 0) return c;
        return ::cmp(im_, o.im_);
    }

    // Canonical display form: "0", "3", "-2/3", "i", "-i", "2*i",
    // "1+2*i", "1/2-3*i".  Parenthesisation is left to the polynomial
    // printer, which knows whether the value multiplies a monomial.
    std::string str() const;

private:
    static void canonical(mpq_class& q) { q.canonicalize(); }

    mpq_class re_;
    mpq_class im_;
};

} // namespace lf

#endif
