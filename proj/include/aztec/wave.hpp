#pragma once

#include <complex>
#include <cstdlib>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "aztec/dyadic.hpp"
#include "aztec/errors.hpp"

// Discrete wave equation on the half-space of integer triples (j, k, n)
// with j + k + n odd:
//
//   f(j,k,n+1) + f(j,k,n-1) = (f(j+1,k,n) + f(j-1,k,n) + f(j,k+1,n) + f(j,k-1,n)) / 2
//
// The slice at time n is supported on |j| + |k| <= n - 1. In rotated
// coordinates u = j + k, v = j - k that support is an n x n square, which is
// how slices are stored.
namespace aztec::wave {

using Complex = std::complex<double>;

enum class Direction { East = 0, North = 1, West = 2, South = 3 };

/// Unit step (dj, dk) for a direction.
constexpr std::pair<int, int> step_of(Direction d) {
    switch (d) {
        case Direction::East: return {1, 0};
        case Direction::North: return {0, 1};
        case Direction::West: return {-1, 0};
        case Direction::South: return {0, -1};
    }
    return {0, 0};
}

const char* to_string(Direction d);

struct LatticePoint {
    int j = 0;
    int k = 0;
    int n = 0;

    /// Member of the half-space: n >= 0 and j + k + n odd.
    bool valid() const { return n >= 0 && ((j + k + n) % 2 + 2) % 2 == 1; }
};

/// Tip value b0 and the four edge sources of a cone problem.
template <class V>
struct Boundary {
    V b0{};
    V bE{};
    V bN{};
    V bW{};
    V bS{};

    const V& edge(Direction d) const {
        switch (d) {
            case Direction::East: return bE;
            case Direction::North: return bN;
            case Direction::West: return bW;
            case Direction::South: return bS;
        }
        return bE;
    }
};

using BoundaryConditions = Boundary<DyadicGaussian>;

/// (0; 1, i, -1, -i), the symmetric t-embedding.
BoundaryConditions temb_bc();
/// (0; 1, i, 1, i), the origami map.
BoundaryConditions origami_bc();
/// (1; 0, 0, 0, 0).
BoundaryConditions tip_bc();
/// Unit source on one edge, zero elsewhere.
BoundaryConditions edge_bc(Direction d);
/// "b0;bE,bN,bW,bS" with each entry a Gaussian integer such as 1, -i, 2+3i
/// or an exact dyadic literal.
BoundaryConditions parse_bc(const std::string& text);
std::string format_bc(const BoundaryConditions& bc);

Boundary<Complex> to_float(const BoundaryConditions& bc);

/// Values of one time slice. Cells outside |j|+|k| <= n-1 are implicitly 0.
template <class V>
class Slice {
public:
    Slice() = default;
    explicit Slice(int n) : n_(n), cells_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}

    int time() const noexcept { return n_; }
    std::size_t size() const noexcept { return cells_.size(); }

    /// Parity j + k + n odd.
    bool on_lattice(int j, int k) const noexcept { return ((j + k + n_) % 2 + 2) % 2 == 1; }
    bool in_support(int j, int k) const noexcept {
        return on_lattice(j, k) && std::abs(j) + std::abs(k) <= n_ - 1;
    }

    /// Value at (j, k); zero outside the support. Throws ArgumentError on
    /// wrong parity.
    V value(int j, int k) const;
    /// Pointer to the stored cell or nullptr outside the support.
    const V* find(int j, int k) const noexcept;
    V* find(int j, int k) noexcept;

    const V& at_index(int a, int b) const { return cells_[static_cast<std::size_t>(a) * n_ + b]; }
    V& at_index(int a, int b) { return cells_[static_cast<std::size_t>(a) * n_ + b]; }

    /// Calls f(j, k, value) for every stored cell in index order.
    template <class F>
    void for_each(F&& f) const {
        for (int a = 0; a < n_; ++a) {
            for (int b = 0; b < n_; ++b) {
                const int u = 2 * a - (n_ - 1);
                const int v = 2 * b - (n_ - 1);
                f((u + v) / 2, (u - v) / 2, at_index(a, b));
            }
        }
    }

    void resize(int n) {
        n_ = n;
        cells_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    }

    friend bool operator==(const Slice& a, const Slice& b) { return a.n_ == b.n_ && a.cells_ == b.cells_; }

private:
    int n_ = 0;
    std::vector<V> cells_;
};

template <class V>
const V* Slice<V>::find(int j, int k) const noexcept {
    if (!in_support(j, k)) return nullptr;
    return &at_index((j + k + n_ - 1) / 2, (j - k + n_ - 1) / 2);
}

template <class V>
V* Slice<V>::find(int j, int k) noexcept {
    if (!in_support(j, k)) return nullptr;
    return &at_index((j + k + n_ - 1) / 2, (j - k + n_ - 1) / 2);
}

template <class V>
V Slice<V>::value(int j, int k) const {
    if (!on_lattice(j, k)) {
        throw ArgumentError("(" + std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(n_) +
                            ") is off the lattice: j+k+n must be odd");
    }
    const V* p = find(j, k);
    return p ? *p : V{};
}

enum class History { Rolling, Full };

struct SolverOptions {
    History history = History::Rolling;
    std::size_t memory_cap = std::size_t{4} << 30;
    unsigned threads = 1;
};

/// Rough resident size of one slice at time n, used for budgeting.
template <class V>
std::size_t estimate_slice_bytes(int n);
/// Bytes needed to run a solver to n_max with the given history mode.
template <class V>
std::size_t estimate_solve_bytes(int n_max, History history);

/// Incremental cone solver. Starts at time 0; advance() moves to n+1 using the
/// uniform recursion with implicit zeros outside the cone, plus half the
/// edge source at the four axis-edge cells (+-n,0), (0,+-n) of time n+1.
template <class V>
class ConeSolver {
public:
    explicit ConeSolver(Boundary<V> bc, SolverOptions opts = {});

    int time() const noexcept { return current_.time(); }
    const Slice<V>& current() const noexcept { return current_; }
    const Slice<V>& previous() const noexcept { return previous_; }
    const Boundary<V>& bc() const noexcept { return bc_; }

    void advance();
    void advance_to(int n);

private:
    Boundary<V> bc_;
    SolverOptions opts_;
    Slice<V> previous_;
    Slice<V> current_;
    Slice<V> scratch_;
};

/// Time slices of a wave field. In rolling mode only the last two slices are
/// retained.
template <class V>
class WaveField {
public:
    WaveField() = default;
    WaveField(std::string source, History history) : source_(std::move(source)), history_(history) {}

    /// "fundamental" or the boundary conditions of the cone problem.
    const std::string& source() const noexcept { return source_; }
    int n_max() const noexcept { return n_max_; }
    History history() const noexcept { return history_; }

    bool has_slice(int n) const noexcept;
    /// Throws ArgumentError if n > n_max or the slice was not retained.
    const Slice<V>& slice(int n) const;
    /// f(j, k, n); zero outside the support.
    V at(int j, int k, int n) const { return slice(n).value(j, k); }
    V at(const LatticePoint& p) const { return at(p.j, p.k, p.n); }

    /// Appends the slice for time n_max + 1. The first slice of a full-history
    /// field is time 0; a rolling field may start at any time.
    void push(Slice<V> s);

    const std::vector<Slice<V>>& slices() const noexcept { return slices_; }

private:
    std::string source_;
    int n_max_ = -1;
    History history_ = History::Rolling;
    std::vector<Slice<V>> slices_;  // full: index == time; rolling: last two
};

using ExactField = WaveField<DyadicGaussian>;
using FloatField = WaveField<Complex>;

/// Half-space fundamental solution f0 with f0(0,0,1) = 1. Computed on a
/// plain (j, k) grid with no cone bookkeeping, so it is an independent route
/// to cone_solve(tip_bc()).
ExactField fundamental_solution(int n_max, const SolverOptions& opts = {});

ExactField cone_solve(const BoundaryConditions& bc, int n_max, const SolverOptions& opts = {});
FloatField cone_solve_float(const BoundaryConditions& bc, int n_max, const SolverOptions& opts = {});

/// f_D(j,k,n) = 1/2 sum_{s=1}^{n-1} f0((j,k) - s*e_D, n - s). Needs the f0
/// slices up to n-1 (full history).
DyadicGaussian convolve_moving_source(Direction d, const LatticePoint& p, const ExactField& f0);

/// Same sum for a whole slice, accumulated along the source direction:
/// f_D(., n) = shift_{e_D}(f0(., n-1) / 2 + f_D(., n-1)).
Slice<DyadicGaussian> moving_source_step(Direction d, const Slice<DyadicGaussian>& fd_prev,
                                         const Slice<DyadicGaussian>& f0_prev);

/// max |f(j,k,n)| over the slice, in double precision.
template <class V>
double slice_max(const Slice<V>& s);
template <class V>
double slice_max(const WaveField<V>& f, int n) {
    return slice_max(f.slice(n));
}

struct DriftReport {
    int n = 0;
    double max_abs_drift = 0.0;   // max |float - exact| over slice n
    double max_abs_value = 0.0;   // max |exact| over slice n
};

/// Runs both solvers to time n and measures the floating-point drift.
DriftReport measure_float_drift(const BoundaryConditions& bc, int n, const SolverOptions& opts = {});

/// Exact wave-equation residual check of a full-history field: every stored
/// cell with n >= 2 not on an axis edge satisfies the recursion. Returns the
/// number of violating cells.
std::size_t count_recursion_violations(const ExactField& f, bool cone);

}  // namespace aztec::wave
