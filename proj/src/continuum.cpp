#include "aztec/continuum.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "aztec/errors.hpp"

namespace aztec::continuum {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfSqrt2 = std::numbers::sqrt2 / 2;

std::string point_text(double x, double y) { return "(" + std::to_string(x) + ", " + std::to_string(y) + ")"; }

void require_disk(Complex zeta) {
    if (!(std::abs(zeta) < 1.0)) throw ArgumentError("zeta must lie in the open unit disk");
}

// Adaptive Simpson on [a, b].
double simpson(const std::function<double(double)>& f, double a, double b, double fa, double fm, double fb,
               double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6 * (fa + 4 * flm + fm);
    const double right = (b - m) / 6 * (fm + 4 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15 * tol) return left + right + delta / 15;
    return simpson(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
           simpson(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    if (b <= a) return 0.0;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    return simpson(f, a, b, fa, fm, fb, (b - a) / 6 * (fa + 4 * fm + fb), tol, 50);
}

}  // namespace

const char* to_string(Region r) {
    switch (r) {
        case Region::Liquid: return "liquid";
        case Region::FrozenE: return "frozen-E";
        case Region::FrozenN: return "frozen-N";
        case Region::FrozenW: return "frozen-W";
        case Region::FrozenS: return "frozen-S";
        case Region::Boundary: return "boundary";
    }
    return "?";
}

Region classify(double x, double y) {
    if (x * x + y * y < 0.5) return Region::Liquid;
    if (x > 0.5) return Region::FrozenE;
    if (y > 0.5) return Region::FrozenN;
    if (x < -0.5) return Region::FrozenW;
    if (y < -0.5) return Region::FrozenS;
    return Region::Boundary;
}

PlanePoint PlanePoint::at(double x, double y) {
    if (!(std::abs(x) + std::abs(y) < 1.0)) throw ArgumentError("point " + point_text(x, y) + " is outside |x|+|y| < 1");
    return {x, y, classify(x, y)};
}

double radial_rho(double r) {
    if (!(r >= 0.0 && r <= kHalfSqrt2 + 1e-15)) throw ArgumentError("radial_rho needs 0 <= r <= sqrt(2)/2");
    if (r == 0.0) return 0.0;
    const double disc = std::max(0.0, 1.0 - 2.0 * r * r);
    // (1 - sqrt(disc)) / (sqrt2 r) rewritten to avoid cancellation at small r.
    return std::numbers::sqrt2 * r / (1.0 + std::sqrt(disc));
}

double radial_r(double rho) { return std::numbers::sqrt2 * rho / (1.0 + rho * rho); }

Complex map_zeta(const PlanePoint& p) {
    if (p.region != Region::Liquid) throw ArgumentError("map_zeta needs a liquid point, got " + point_text(p.x, p.y));
    const double r = std::hypot(p.x, p.y);
    if (r == 0.0) return 0.0;
    return Complex(p.x, p.y) * (radial_rho(r) / r);
}

Complex unmap_zeta(Complex zeta) {
    require_disk(zeta);
    const double rho = std::abs(zeta);
    if (rho == 0.0) return 0.0;
    return zeta * (radial_r(rho) / rho);
}

double harmonic_measure(Complex zeta, double alpha, double beta) {
    require_disk(zeta);
    if (!(alpha < beta && beta < alpha + 2 * kPi)) throw ArgumentError("harmonic_measure needs alpha < beta < alpha + 2pi");
    double d = std::arg(std::polar(1.0, beta) - zeta) - std::arg(std::polar(1.0, alpha) - zeta);
    if (d < 0) d += 2 * kPi;
    return d / kPi - (beta - alpha) / (2 * kPi);
}

std::pair<double, double> arc_bounds(Arc a) {
    const double c = static_cast<int>(a) * kPi / 2;
    return {c - kPi / 4, c + kPi / 4};
}

std::array<double, 4> arc_measures(Complex zeta) {
    std::array<double, 4> out{};
    for (int a = 0; a < 4; ++a) {
        const auto [lo, hi] = arc_bounds(Arc(a));
        out[static_cast<std::size_t>(a)] = harmonic_measure(zeta, lo, hi);
    }
    return out;
}

SurfacePoint surface_from_zeta(Complex zeta) {
    const auto h = arc_measures(zeta);
    SurfacePoint s;
    s.z = Complex(h[0] - h[2], h[1] - h[3]);
    s.theta = kHalfSqrt2 * (h[0] - h[1] + h[2] - h[3]);
    const Complex p = unmap_zeta(zeta);
    s.x = p.real();
    s.y = p.imag();
    s.zeta = zeta;
    return s;
}

SurfacePoint surface_map(const PlanePoint& p) {
    if (!(std::abs(p.x) + std::abs(p.y) < 1.0)) throw ArgumentError("point " + point_text(p.x, p.y) + " is outside the diamond");
    const Region region = classify(p.x, p.y);
    if (region == Region::Liquid) {
        SurfacePoint s = surface_from_zeta(map_zeta({p.x, p.y, region}));
        s.x = p.x;
        s.y = p.y;
        return s;
    }
    SurfacePoint s;
    s.x = p.x;
    s.y = p.y;
    switch (region) {
        case Region::FrozenE: s.z = 1.0; s.theta = kHalfSqrt2; break;
        case Region::FrozenN: s.z = Complex(0, 1); s.theta = -kHalfSqrt2; break;
        case Region::FrozenW: s.z = -1.0; s.theta = kHalfSqrt2; break;
        case Region::FrozenS: s.z = Complex(0, -1); s.theta = -kHalfSqrt2; break;
        default: throw ArgumentError("no surface value on the boundary point " + point_text(p.x, p.y));
    }
    return s;
}

Wirtinger wirtinger(Complex zeta) {
    require_disk(zeta);
    std::array<Complex, 4> d{};
    for (int a = 0; a < 4; ++a) {
        const auto [lo, hi] = arc_bounds(Arc(a));
        d[static_cast<std::size_t>(a)] =
            Complex(0, -1 / (2 * kPi)) * (1.0 / (zeta - std::polar(1.0, hi)) - 1.0 / (zeta - std::polar(1.0, lo)));
    }
    const Complex i(0, 1);
    Wirtinger w;
    w.dz = d[0] + i * d[1] - d[2] - i * d[3];
    w.dzbar = d[0] - i * d[1] - d[2] + i * d[3];
    w.dtheta = kHalfSqrt2 * (d[0] - d[1] + d[2] - d[3]);
    w.residual = w.dz * w.dzbar - w.dtheta * w.dtheta;
    return w;
}

double psi0(double x, double y, double t) {
    if (!(t > 0)) throw ArgumentError("psi0 needs t > 0");
    const double g = t * t - 2 * x * x - 2 * y * y;
    if (g < 0) return 0.0;
    if (g == 0) return std::numeric_limits<double>::infinity();
    return 1.0 / (kPi * std::sqrt(g));
}

double psiE_oracle(double x, double y) {
    if (!(std::abs(x) + std::abs(y) < 1.0)) throw ArgumentError("psiE_oracle: point " + point_text(x, y) + " is outside the diamond");
    const double r = std::hypot(x, y);
    if (std::abs(r - kHalfSqrt2) < 1e-6) throw ArgumentError("psiE_oracle: point " + point_text(x, y) + " is within 1e-6 of the arctic circle");
    if (r > kHalfSqrt2 && std::abs(x - 0.5) < 1e-6) throw ArgumentError("psiE_oracle: point " + point_text(x, y) + " is on the frozen jump line");

    // Under the integral, (1-s)^2 - 2(x-s)^2 - 2y^2 = (s - a)(b - s).
    const double disc = 2 * ((1 - x) * (1 - x) - y * y);
    if (disc <= 0) return 0.0;
    const double a = (2 * x - 1) - std::sqrt(disc);
    const double b = (2 * x - 1) + std::sqrt(disc);
    const double lo = std::max(0.0, a);
    const double hi = std::min(1.0, b);
    if (hi <= lo) return 0.0;

    const double tol = 1e-12;
    auto direct = [&](double s) { return 1.0 / std::sqrt((s - a) * (b - s)); };
    // s = end +- L sin^2 u turns the singular endpoint into a smooth integrand.
    auto substituted = [&](double len) {
        return [=](double u) {
            const double sn = std::sin(u);
            return 2 * std::sqrt(len) * std::cos(u) / std::sqrt(b - a - len * sn * sn);
        };
    };
    const double mid = 0.5 * (lo + hi);
    double total = 0.0;
    if (lo == a) total += integrate(substituted(mid - a), 0.0, kPi / 2, tol);
    else total += integrate(direct, lo, mid, tol);
    if (hi == b) total += integrate(substituted(b - mid), 0.0, kPi / 2, tol);
    else total += integrate(direct, mid, hi, tol);
    return total / kPi;
}

std::array<std::pair<Complex, double>, 4> contour_vertices() {
    return {{{Complex(1, 0), kHalfSqrt2}, {Complex(0, 1), -kHalfSqrt2}, {Complex(-1, 0), kHalfSqrt2},
             {Complex(0, -1), -kHalfSqrt2}}};
}

SurfaceSample sample_surface(const GridSpec& grid, int contour_steps) {
    if (grid.n < 1 || grid.stride < 1) throw ArgumentError("sample_surface needs n >= 1 and stride >= 1");
    if (contour_steps < 1) throw ArgumentError("sample_surface needs contour_steps >= 1");
    SurfaceSample out;
    out.grid = grid;
    const int s = grid.stride;
    for (int j = -(grid.n / s) * s; j <= grid.n; j += s) {
        for (int k = -(grid.n / s) * s; k <= grid.n; k += s) {
            if (((j + k) / s) % 2 != 0) continue;
            if (std::abs(j) + std::abs(k) >= grid.n) continue;
            const double x = double(j) / grid.n, y = double(k) / grid.n;
            out.points.push_back(surface_map(PlanePoint::at(x, y)));
        }
    }
    const auto v = contour_vertices();
    for (std::size_t seg = 0; seg < 4; ++seg) {
        const auto& [z0, t0] = v[seg];
        const auto& [z1, t1] = v[(seg + 1) % 4];
        for (int i = 0; i <= contour_steps; ++i) {
            const double u = double(i) / contour_steps;
            out.contour[seg].emplace_back(z0 + (z1 - z0) * u, t0 + (t1 - t0) * u);
        }
    }
    return out;
}

int winding_number(std::span<const Complex> closed, Complex target) {
    double total = 0.0;
    for (std::size_t i = 0; i < closed.size(); ++i) {
        const Complex a = closed[i] - target;
        const Complex b = closed[(i + 1) % closed.size()] - target;
        total += std::arg(b / a);
    }
    return static_cast<int>(std::lround(total / (2 * kPi)));
}

bool IdentityReport::ok() const {
    return max_conformal_residual <= 1e-12 && max_measure_sum_error <= 1e-14 &&
           std::abs(hm_east_at_axis - 0.5) <= 1e-14 && std::abs(psiE_origin - 0.25) <= 1e-8 &&
           max_psiE_hm_gap <= 1e-6 && contour_exact;
}

IdentityReport check_identities(std::size_t random_points, std::uint64_t seed) {
    IdentityReport r;
    for (int a = 1; a <= 19; ++a) {
        for (int b = 0; b < 64; ++b) {
            const Complex zeta = std::polar(a * 0.05, b * 2 * kPi / 64);
            const Wirtinger w = wirtinger(zeta);
            const double scale = std::abs(w.dz) * std::abs(w.dzbar) + std::norm(w.dtheta);
            r.max_conformal_residual = std::max(r.max_conformal_residual, std::abs(w.residual) / scale);
            const auto h = arc_measures(zeta);
            r.max_measure_sum_error = std::max(r.max_measure_sum_error, std::abs(h[0] + h[1] + h[2] + h[3] - 1.0));
        }
    }
    const auto [lo, hi] = arc_bounds(Arc::E);
    r.hm_east_at_axis = harmonic_measure(std::numbers::sqrt2 - 1, lo, hi);
    r.psiE_origin = psiE_oracle(0, 0);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-kHalfSqrt2, kHalfSqrt2);
    while (r.random_points < random_points) {
        const double x = coord(rng), y = coord(rng);
        const double rad = std::hypot(x, y);
        if (rad >= kHalfSqrt2 - 1e-3) continue;
        const double hm = harmonic_measure(map_zeta(PlanePoint::at(x, y)), lo, hi);
        r.max_psiE_hm_gap = std::max(r.max_psiE_hm_gap, std::abs(psiE_oracle(x, y) - hm));
        ++r.random_points;
    }

    const auto v = contour_vertices();
    r.contour_exact = v[0] == std::pair<Complex, double>{1.0, kHalfSqrt2} &&
                      v[1] == std::pair<Complex, double>{Complex(0, 1), -kHalfSqrt2} &&
                      v[2] == std::pair<Complex, double>{-1.0, kHalfSqrt2} &&
                      v[3] == std::pair<Complex, double>{Complex(0, -1), -kHalfSqrt2};
    return r;
}

}  // namespace aztec::continuum
