#include "aztec/dyadic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include <mpfr.h>

#include "aztec/errors.hpp"

namespace aztec {

namespace {

mp_bitcnt_t trailing_zeros(const mpz_class& x) {
    return sgn(x) == 0 ? std::numeric_limits<mp_bitcnt_t>::max() : mpz_scan1(x.get_mpz_t(), 0);
}

// dst = src * 2^shift
void shl(mpz_class& dst, const mpz_class& src, std::uint64_t shift) {
    mpz_mul_2exp(dst.get_mpz_t(), src.get_mpz_t(), shift);
}

double round_to_double(const mpz_class& num, std::uint64_t exp) {
    if (sgn(num) == 0) return 0.0;
    mpfr_t x;
    mpfr_init2(x, 53);
    mpfr_set_z_2exp(x, num.get_mpz_t(), -static_cast<mpfr_exp_t>(exp), MPFR_RNDN);
    const bool overflow = mpfr_get_exp(x) > 1024;
    const double d = mpfr_get_d(x, MPFR_RNDN);
    mpfr_clear(x);
    if (overflow || std::isinf(d)) {
        throw OverflowError("dyadic value exceeds double range");
    }
    return d;
}

}  // namespace

DyadicGaussian::DyadicGaussian(mpz_class re, mpz_class im, std::uint64_t exp)
    : re_(std::move(re)), im_(std::move(im)), exp_(exp) {
    normalize();
}

DyadicGaussian DyadicGaussian::from_parts(long re, long im, std::uint64_t exp) {
    return DyadicGaussian(mpz_class(re), mpz_class(im), exp);
}

DyadicGaussian DyadicGaussian::unnormalized(mpz_class re, mpz_class im, std::uint64_t exp) {
    return DyadicGaussian(Raw{}, std::move(re), std::move(im), exp);
}

DyadicGaussian DyadicGaussian::normalized() const {
    DyadicGaussian r = *this;
    r.normalize();
    return r;
}

bool DyadicGaussian::is_normalized() const {
    if (is_zero()) return exp_ == 0;
    return exp_ == 0 || std::min(trailing_zeros(re_), trailing_zeros(im_)) == 0;
}

void DyadicGaussian::normalize() {
    if (is_zero()) {
        exp_ = 0;
        return;
    }
    if (exp_ == 0) return;
    const mp_bitcnt_t tz = std::min(trailing_zeros(re_), trailing_zeros(im_));
    const std::uint64_t k = std::min<std::uint64_t>(tz, exp_);
    if (k == 0) return;
    mpz_tdiv_q_2exp(re_.get_mpz_t(), re_.get_mpz_t(), k);
    mpz_tdiv_q_2exp(im_.get_mpz_t(), im_.get_mpz_t(), k);
    exp_ -= k;
}

DyadicGaussian DyadicGaussian::real() const { return DyadicGaussian(re_, 0, exp_); }
DyadicGaussian DyadicGaussian::imag() const { return DyadicGaussian(im_, 0, exp_); }
DyadicGaussian DyadicGaussian::conj() const { return DyadicGaussian(Raw{}, re_, -im_, exp_); }
DyadicGaussian DyadicGaussian::mul_i() const { return DyadicGaussian(Raw{}, -im_, re_, exp_); }

DyadicGaussian DyadicGaussian::halved() const {
    if (is_zero()) return {};
    DyadicGaussian out(Raw{}, re_, im_, exp_ + 1);
    if (exp_ == 0) out.normalize();
    return out;
}

DyadicGaussian DyadicGaussian::scaled_pow2(std::int64_t k) const {
    if (is_zero()) return {};
    if (k <= 0) {
        DyadicGaussian out(Raw{}, re_, im_, exp_ + static_cast<std::uint64_t>(-k));
        if (exp_ == 0) out.normalize();
        return out;
    }
    const auto uk = static_cast<std::uint64_t>(k);
    if (uk <= exp_) return DyadicGaussian(Raw{}, re_, im_, exp_ - uk);
    mpz_class re, im;
    shl(re, re_, uk - exp_);
    shl(im, im_, uk - exp_);
    return DyadicGaussian(Raw{}, std::move(re), std::move(im), 0);
}

DyadicGaussian DyadicGaussian::norm2() const {
    return DyadicGaussian(re_ * re_ + im_ * im_, 0, 2 * exp_);
}

DyadicGaussian DyadicGaussian::operator-() const { return DyadicGaussian(Raw{}, -re_, -im_, exp_); }

DyadicGaussian& DyadicGaussian::operator+=(const DyadicGaussian& o) {
    if (exp_ == o.exp_) {
        re_ += o.re_;
        im_ += o.im_;
    } else if (exp_ > o.exp_) {
        mpz_class t;
        shl(t, o.re_, exp_ - o.exp_);
        re_ += t;
        shl(t, o.im_, exp_ - o.exp_);
        im_ += t;
    } else {
        shl(re_, re_, o.exp_ - exp_);
        shl(im_, im_, o.exp_ - exp_);
        re_ += o.re_;
        im_ += o.im_;
        exp_ = o.exp_;
    }
    normalize();
    return *this;
}

DyadicGaussian& DyadicGaussian::operator-=(const DyadicGaussian& o) { return *this += -o; }

DyadicGaussian& DyadicGaussian::operator*=(const DyadicGaussian& o) {
    mpz_class re = re_ * o.re_ - im_ * o.im_;
    mpz_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    exp_ += o.exp_;
    normalize();
    return *this;
}

std::complex<double> DyadicGaussian::to_complex() const {
    return {round_to_double(re_, exp_), round_to_double(im_, exp_)};
}

std::string DyadicGaussian::to_string() const {
    return "(" + re_.get_str() + ")+(" + im_.get_str() + ")i / 2^" + std::to_string(exp_);
}

DyadicGaussian DyadicGaussian::parse(std::string_view text) {
    auto fail = [&]() -> ArgumentError {
        return ArgumentError("malformed dyadic literal: '" + std::string(text) + "'");
    };
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto expect = [&](std::string_view token) {
        skip_ws();
        if (text.substr(pos, token.size()) != token) throw fail();
        pos += token.size();
    };
    auto integer = [&]() {
        skip_ws();
        const std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        const std::size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) throw fail();
        std::string s(text.substr(start, pos - start));
        if (s.front() == '+') s.erase(0, 1);
        return mpz_class(s, 10);
    };
    expect("(");
    mpz_class re = integer();
    expect(")+(");
    mpz_class im = integer();
    expect(")i");
    expect("/");
    expect("2^");
    mpz_class e = integer();
    skip_ws();
    if (pos != text.size() || sgn(e) < 0 || !e.fits_ulong_p()) throw fail();
    return DyadicGaussian(std::move(re), std::move(im), e.get_ui());
}

std::size_t DyadicGaussian::heap_bytes() const noexcept {
    return sizeof(mp_limb_t) * (mpz_size(re_.get_mpz_t()) + mpz_size(im_.get_mpz_t()));
}

void wave_update(DyadicGaussian& out, const DyadicGaussian& a, const DyadicGaussian& b,
                 const DyadicGaussian& c, const DyadicGaussian& d, const DyadicGaussian& e) {
    thread_local mpz_class re, im, t;
    const std::uint64_t top = std::max({a.exp_, b.exp_, c.exp_, d.exp_}) + 1;
    const std::uint64_t f = std::max(top, e.exp_);
    re = 0;
    im = 0;
    auto add = [&](const DyadicGaussian& x, std::uint64_t denom_exp, bool subtract) {
        if (x.is_zero()) return;
        const std::uint64_t s = f - denom_exp;
        for (int part = 0; part < 2; ++part) {
            const mpz_class& num = part == 0 ? x.re_ : x.im_;
            mpz_class& acc = part == 0 ? re : im;
            if (sgn(num) == 0) continue;
            const mpz_class* term = &num;
            if (s != 0) {
                shl(t, num, s);
                term = &t;
            }
            if (subtract)
                mpz_sub(acc.get_mpz_t(), acc.get_mpz_t(), term->get_mpz_t());
            else
                mpz_add(acc.get_mpz_t(), acc.get_mpz_t(), term->get_mpz_t());
        }
    };
    // (x / 2^ex) / 2 == x / 2^(ex+1)
    add(a, a.exp_ + 1, false);
    add(b, b.exp_ + 1, false);
    add(c, c.exp_ + 1, false);
    add(d, d.exp_ + 1, false);
    add(e, e.exp_, true);
    mpz_swap(out.re_.get_mpz_t(), re.get_mpz_t());
    mpz_swap(out.im_.get_mpz_t(), im.get_mpz_t());
    out.exp_ = f;
    out.normalize();
}

DyadicGaussian cross(const DyadicGaussian& a, const DyadicGaussian& b) {
    return DyadicGaussian(a.re_num() * b.im_num() - a.im_num() * b.re_num(), 0, a.exp() + b.exp());
}

DyadicGaussian dot(const DyadicGaussian& a, const DyadicGaussian& b) {
    return DyadicGaussian(a.re_num() * b.re_num() + a.im_num() * b.im_num(), 0, a.exp() + b.exp());
}

// --- RationalGaussian -------------------------------------------------------

RationalGaussian::RationalGaussian(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

RationalGaussian::RationalGaussian(const DyadicGaussian& d) {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, d.exp());
    re_ = mpq_class(d.re_num(), den);
    im_ = mpq_class(d.im_num(), den);
    re_.canonicalize();
    im_.canonicalize();
}

RationalGaussian& RationalGaussian::operator+=(const RationalGaussian& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

RationalGaussian& RationalGaussian::operator-=(const RationalGaussian& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

RationalGaussian& RationalGaussian::operator*=(const RationalGaussian& o) {
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

RationalGaussian& RationalGaussian::operator/=(const RationalGaussian& o) {
    const mpq_class n2 = o.norm2();
    if (sgn(n2) == 0) throw DivisionByZeroError("rational Gaussian division by zero");
    mpq_class re = (re_ * o.re_ + im_ * o.im_) / n2;
    mpq_class im = (im_ * o.re_ - re_ * o.im_) / n2;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

bool RationalGaussian::is_dyadic() const {
    auto pow2 = [](const mpz_class& d) { return mpz_popcount(d.get_mpz_t()) == 1; };
    return pow2(re_.get_den()) && pow2(im_.get_den());
}

DyadicGaussian RationalGaussian::to_dyadic() const {
    if (!is_dyadic()) throw ArgumentError("rational value " + to_string() + " is not dyadic");
    const std::uint64_t er = mpz_sizeinbase(re_.get_den_mpz_t(), 2) - 1;
    const std::uint64_t ei = mpz_sizeinbase(im_.get_den_mpz_t(), 2) - 1;
    const std::uint64_t e = std::max(er, ei);
    mpz_class re, im;
    shl(re, re_.get_num(), e - er);
    shl(im, im_.get_num(), e - ei);
    return DyadicGaussian(std::move(re), std::move(im), e);
}

std::complex<double> RationalGaussian::to_complex() const {
    auto conv = [](const mpq_class& q) {
        mpfr_t x;
        mpfr_init2(x, 53);
        mpfr_set_q(x, q.get_mpq_t(), MPFR_RNDN);
        const double d = mpfr_get_d(x, MPFR_RNDN);
        mpfr_clear(x);
        if (std::isinf(d)) throw OverflowError("rational value exceeds double range");
        return d;
    };
    return {conv(re_), conv(im_)};
}

std::string RationalGaussian::to_string() const {
    return "(" + re_.get_str() + ")+(" + im_.get_str() + ")i";
}

RationalGaussian rational_div(const DyadicGaussian& a, const DyadicGaussian& b) {
    if (b.is_zero()) throw DivisionByZeroError("division of dyadic values by zero");
    return RationalGaussian(a) / RationalGaussian(b);
}

}  // namespace aztec
