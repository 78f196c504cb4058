#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace aztec {

/// Exact Gaussian dyadic number (re_num + i*im_num) / 2^exp.
///
/// Always normalized: either exp == 0 or at least one numerator is odd.
/// Zero is (0, 0, 0). Every operation returns a normalized value, so two
/// values are equal iff their triples are equal.
class DyadicGaussian {
public:
    DyadicGaussian() = default;
    DyadicGaussian(long re, long im = 0) : re_(re), im_(im) {}  // NOLINT: implicit from integers
    DyadicGaussian(mpz_class re, mpz_class im, std::uint64_t exp);

    /// (re + i im) / 2^exp.
    static DyadicGaussian from_parts(long re, long im, std::uint64_t exp);

    const mpz_class& re_num() const noexcept { return re_; }
    const mpz_class& im_num() const noexcept { return im_; }
    std::uint64_t exp() const noexcept { return exp_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const noexcept { return sgn(im_) == 0; }
    int sign_re() const noexcept { return sgn(re_); }
    int sign_im() const noexcept { return sgn(im_); }

    DyadicGaussian real() const;
    DyadicGaussian imag() const;
    DyadicGaussian conj() const;
    DyadicGaussian mul_i() const;     // i * x
    DyadicGaussian halved() const;    // x / 2
    DyadicGaussian scaled_pow2(std::int64_t k) const;  // x * 2^k
    /// |x|^2 as a real dyadic.
    DyadicGaussian norm2() const;

    DyadicGaussian operator-() const;
    DyadicGaussian& operator+=(const DyadicGaussian& o);
    DyadicGaussian& operator-=(const DyadicGaussian& o);
    DyadicGaussian& operator*=(const DyadicGaussian& o);

    friend DyadicGaussian operator+(DyadicGaussian a, const DyadicGaussian& b) { return a += b; }
    friend DyadicGaussian operator-(DyadicGaussian a, const DyadicGaussian& b) { return a -= b; }
    friend DyadicGaussian operator*(DyadicGaussian a, const DyadicGaussian& b) { return a *= b; }
    friend bool operator==(const DyadicGaussian& a, const DyadicGaussian& b) {
        return a.exp_ == b.exp_ && a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Correctly rounded conversion. Throws OverflowError outside double range.
    std::complex<double> to_complex() const;

    /// Exact text form "(<re_num>)+(<im_num>)i / 2^<exp>".
    std::string to_string() const;
    /// Inverse of to_string(). Accepts non-normalized triples and normalizes.
    static DyadicGaussian parse(std::string_view text);

    /// Raw, possibly non-normalized triple. Only normalized() should follow.
    static DyadicGaussian unnormalized(mpz_class re, mpz_class im, std::uint64_t exp);
    DyadicGaussian normalized() const;
    bool is_normalized() const;

    /// Bytes held by the numerators, used for memory budgeting.
    std::size_t heap_bytes() const noexcept;

    /// out = (a + b + c + d) / 2 - e, the discrete wave-equation update.
    friend void wave_update(DyadicGaussian& out, const DyadicGaussian& a, const DyadicGaussian& b,
                            const DyadicGaussian& c, const DyadicGaussian& d,
                            const DyadicGaussian& e);

private:
    struct Raw {};
    DyadicGaussian(Raw, mpz_class re, mpz_class im, std::uint64_t exp)
        : re_(std::move(re)), im_(std::move(im)), exp_(exp) {}
    void normalize();

    mpz_class re_;
    mpz_class im_;
    std::uint64_t exp_ = 0;
};

/// Cross product Im(conj(a) * b) = a.x * b.y - a.y * b.x as a real dyadic.
DyadicGaussian cross(const DyadicGaussian& a, const DyadicGaussian& b);
/// Dot product Re(conj(a) * b).
DyadicGaussian dot(const DyadicGaussian& a, const DyadicGaussian& b);

/// Exact rational complex number with independent lowest-terms parts.
class RationalGaussian {
public:
    RationalGaussian() = default;
    RationalGaussian(long re, long im = 0) : re_(re), im_(im) {}  // NOLINT
    RationalGaussian(mpq_class re, mpq_class im);
    explicit RationalGaussian(const DyadicGaussian& d);

    const mpq_class& re() const noexcept { return re_; }
    const mpq_class& im() const noexcept { return im_; }
    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }

    RationalGaussian conj() const { return {re_, -im_}; }
    mpq_class norm2() const { return re_ * re_ + im_ * im_; }

    RationalGaussian operator-() const { return {-re_, -im_}; }
    RationalGaussian& operator+=(const RationalGaussian& o);
    RationalGaussian& operator-=(const RationalGaussian& o);
    RationalGaussian& operator*=(const RationalGaussian& o);
    /// Throws DivisionByZeroError when o == 0.
    RationalGaussian& operator/=(const RationalGaussian& o);

    friend RationalGaussian operator+(RationalGaussian a, const RationalGaussian& b) { return a += b; }
    friend RationalGaussian operator-(RationalGaussian a, const RationalGaussian& b) { return a -= b; }
    friend RationalGaussian operator*(RationalGaussian a, const RationalGaussian& b) { return a *= b; }
    friend RationalGaussian operator/(RationalGaussian a, const RationalGaussian& b) { return a /= b; }
    friend bool operator==(const RationalGaussian& a, const RationalGaussian& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// True when both denominators are powers of two.
    bool is_dyadic() const;
    /// Throws ArgumentError unless is_dyadic().
    DyadicGaussian to_dyadic() const;
    std::complex<double> to_complex() const;
    std::string to_string() const;

private:
    mpq_class re_;
    mpq_class im_;
};

/// Exact quotient a / b. Throws DivisionByZeroError when b == 0.
RationalGaussian rational_div(const DyadicGaussian& a, const DyadicGaussian& b);

}  // namespace aztec
