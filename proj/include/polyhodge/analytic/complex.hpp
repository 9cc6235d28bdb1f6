#pragma once

#include "polyhodge/real.hpp"

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace polyhodge::analytic {

// Complex number over the working-precision Real. std::complex is not
// specified for non-arithmetic types, hence the small hand-rolled type.
class Complex {
public:
    Complex() : re_(0), im_(0) {}
    Complex(Real re) : re_(std::move(re)), im_(0) {}  // NOLINT(implicit)
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
    Complex(double re, double im = 0.0) : re_(re), im_(im) {}  // NOLINT(implicit)
    Complex(int re) : re_(re), im_(0) {}  // NOLINT(implicit)

    static Complex i() { return {Real(0), Real(1)}; }
    static Complex polar(const Real& r, const Real& theta) { return {r * cos(theta), r * sin(theta)}; }

    const Real& real() const { return re_; }
    const Real& imag() const { return im_; }

    Complex conj() const { return {re_, -im_}; }
    Real norm() const { return re_ * re_ + im_ * im_; }
    Real abs() const { return sqrt(norm()); }
    Real arg() const { return atan2(im_, re_); }
    bool is_finite() const {
        return boost::multiprecision::isfinite(re_) && boost::multiprecision::isfinite(im_);
    }
    std::complex<double> to_std() const { return {re_.convert_to<double>(), im_.convert_to<double>()}; }

    Complex operator-() const { return {-re_, -im_}; }
    Complex& operator+=(const Complex& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Complex& operator*=(const Complex& o) {
        Real re = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        return *this;
    }
    Complex& operator*=(const Real& s) {
        re_ *= s;
        im_ *= s;
        return *this;
    }
    Complex& operator/=(const Complex& o) {
        const Real d = o.norm();
        Real re = (re_ * o.re_ + im_ * o.im_) / d;
        im_ = (im_ * o.re_ - re_ * o.im_) / d;
        re_ = std::move(re);
        return *this;
    }
    Complex& operator/=(const Real& s) {
        re_ /= s;
        im_ /= s;
        return *this;
    }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator*(Complex a, const Real& s) { return a *= s; }
    friend Complex operator*(const Real& s, Complex a) { return a *= s; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    friend Complex operator/(Complex a, const Real& s) { return a /= s; }
    friend bool operator==(const Complex& a, const Complex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

private:
    Real re_;
    Real im_;
};

inline Real abs(const Complex& z) { return z.abs(); }

Complex two_pi_i();

// Dense row-major square matrix of Complex.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n) {}

    static ComplexMatrix identity(int n);

    int size() const { return n_; }
    Complex& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * n_ + c]; }
    const Complex& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * n_ + c]; }

    Real max_abs() const;
    bool is_finite() const;

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    int n_ = 0;
    std::vector<Complex> data_;
};

// Largest entrywise |a - b|.
Real max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);

std::pair<std::string, std::string> to_decimal_pair(const Complex& z);

}  // namespace polyhodge::analytic
