#pragma once

#include <array>
#include <cstdint>
#include <complex>
#include <optional>
#include <span>
#include <vector>

// Closed-form limit objects on the square diamond |x|+|y| < 1: the radial
// change of variables onto the unit disk, harmonic measures of the four
// quarter arcs, the limit surface (z, theta) and the continuous wave kernels.
// Everything here is double precision.
namespace aztec::continuum {

using Complex = std::complex<double>;

enum class Region { Liquid, FrozenE, FrozenN, FrozenW, FrozenS, Boundary };

const char* to_string(Region r);

/// Liquid iff x^2+y^2 < 1/2; frozen-E iff outside that disk and x > 1/2, and
/// likewise for the other sides.
Region classify(double x, double y);

struct PlanePoint {
    double x = 0.0;
    double y = 0.0;
    Region region = Region::Liquid;

    /// Throws ArgumentError unless |x|+|y| < 1.
    static PlanePoint at(double x, double y);
};

/// Inverse of r = sqrt(2) rho / (1 + rho^2) on [0, sqrt(2)/2].
double radial_rho(double r);
/// Forward map rho -> r.
double radial_r(double rho);

/// zeta = rho(|p|) e^{i arg p}. Throws ArgumentError for non-liquid points.
Complex map_zeta(const PlanePoint& p);
/// Inverse of map_zeta: x + iy for |zeta| < 1.
Complex unmap_zeta(Complex zeta);

/// Harmonic measure of the arc (e^{i alpha}, e^{i beta}) seen from zeta,
/// alpha < beta < alpha + 2 pi. Throws ArgumentError if |zeta| >= 1.
double harmonic_measure(Complex zeta, double alpha, double beta);

enum class Arc { E = 0, N = 1, W = 2, S = 3 };

/// (alpha, beta) of the quarter arc centered at angle 0, pi/2, pi, 3pi/2.
std::pair<double, double> arc_bounds(Arc a);

/// Harmonic measures of the four quarter arcs, indexed by Arc.
std::array<double, 4> arc_measures(Complex zeta);

struct SurfacePoint {
    Complex z;
    double theta = 0.0;
    double x = 0.0;
    double y = 0.0;
    std::optional<Complex> zeta;  // set for liquid points
};

/// z = psi_E + i psi_N - psi_W - i psi_S and
/// theta = (psi_E - psi_N + psi_W - psi_S) / sqrt(2).
SurfacePoint surface_map(const PlanePoint& p);
SurfacePoint surface_from_zeta(Complex zeta);

struct Wirtinger {
    Complex dz;
    Complex dzbar;
    Complex dtheta;
    Complex residual;  // dz * dzbar - dtheta^2
};

/// d/dzeta of z, conj(z) and theta. Throws ArgumentError if |zeta| >= 1.
Wirtinger wirtinger(Complex zeta);

/// Continuous fundamental solution (t^2 - 2x^2 - 2y^2)^{-1/2} / pi inside
/// the light cone, 0 outside, +infinity exactly on it. Requires t > 0.
double psi0(double x, double y, double t);

/// integral_0^1 psi0(x - s, y, 1 - s) ds by adaptive quadrature after
/// removing the endpoint singularities. Throws ArgumentError within 1e-6 of
/// the arctic circle or outside the diamond.
double psiE_oracle(double x, double y);

/// Vertices of the boundary contour in (z, theta): E, N, W, S corners.
std::array<std::pair<Complex, double>, 4> contour_vertices();

struct GridSpec {
    int n = 100;      // lattice scale: samples at (j/n, k/n)
    int stride = 4;   // j, k in stride*Z with j + k in 2*stride*Z
};

struct SurfaceSample {
    GridSpec grid;
    std::vector<SurfacePoint> points;
    /// The four contour segments, E->N, N->W, W->S, S->E, as polylines.
    std::array<std::vector<std::pair<Complex, double>>, 4> contour;
};

SurfaceSample sample_surface(const GridSpec& grid, int contour_steps = 32);

/// Winding number of a closed polyline around a target point.
int winding_number(std::span<const Complex> closed, Complex target);

struct IdentityReport {
    double max_conformal_residual = 0.0;  // |dz dzbar - dtheta^2| / (|dz||dzbar| + |dtheta|^2), polar grid
    double max_measure_sum_error = 0.0;   // |sum of the four arc measures - 1|
    double hm_east_at_axis = 0.0;         // harmonic measure of the E arc at zeta = sqrt2 - 1
    double psiE_origin = 0.0;
    double max_psiE_hm_gap = 0.0;         // |psiE_oracle - hm_E| on random liquid points
    std::size_t random_points = 0;
    bool contour_exact = false;

    bool ok() const;
};

/// Evaluates the closed-form identities on a 19 x 64 polar grid and on
/// `random_points` liquid points drawn with `seed`.
IdentityReport check_identities(std::size_t random_points = 500, std::uint64_t seed = 1);

}  // namespace aztec::continuum
