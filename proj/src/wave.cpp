#include "aztec/wave.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <regex>

#include "parallel.hpp"

namespace aztec::wave {

namespace {

inline void wave_update(Complex& out, const Complex& a, const Complex& b, const Complex& c, const Complex& d,
                        const Complex& e) {
    out = 0.5 * (a + b + c + d) - e;
}

inline DyadicGaussian half(const DyadicGaussian& x) { return x.halved(); }
inline Complex half(const Complex& x) { return 0.5 * x; }

std::string format_bytes(std::size_t bytes) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f MiB", static_cast<double>(bytes) / (1024.0 * 1024.0));
    return buf;
}

void require_budget(std::size_t bytes, std::size_t cap, const char* what) {
    if (bytes > cap) {
        throw ResourceError(std::string(what) + " needs about " + format_bytes(bytes) + ", memory cap is " +
                            format_bytes(cap));
    }
}

DyadicGaussian parse_entry(std::string text) {
    text.erase(std::remove_if(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }),
               text.end());
    if (text.find("2^") != std::string::npos) return DyadicGaussian::parse(text);
    static const std::regex gaussian(R"(^([+-]?\d+)?(?:([+-]?)(\d*)i)?$)");
    std::smatch m;
    if (text.empty() || !std::regex_match(text, m, gaussian)) {
        throw ArgumentError("cannot parse boundary value '" + text + "'");
    }
    mpz_class re = m[1].matched ? mpz_class(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str()) : 0;
    mpz_class im = 0;
    if (text.back() == 'i') {
        im = m[3].length() > 0 ? mpz_class(m[3].str()) : mpz_class(1);
        if (m[2].str() == "-") im = -im;
        if (m[1].matched && m[2].length() == 0) throw ArgumentError("cannot parse boundary value '" + text + "'");
    }
    return DyadicGaussian(re, im, 0);
}

std::string format_entry(const DyadicGaussian& v) {
    if (v.exp() != 0) return v.to_string();
    const mpz_class& re = v.re_num();
    const mpz_class& im = v.im_num();
    std::string out;
    if (sgn(re) != 0 || sgn(im) == 0) out = re.get_str();
    if (sgn(im) != 0) {
        std::string coef = abs(im) == 1 ? "" : mpz_class(abs(im)).get_str();
        if (sgn(im) < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        out += coef + "i";
    }
    return out;
}

}  // namespace

const char* to_string(Direction d) {
    switch (d) {
        case Direction::East: return "E";
        case Direction::North: return "N";
        case Direction::West: return "W";
        case Direction::South: return "S";
    }
    return "?";
}

BoundaryConditions temb_bc() { return {0, 1, {0, 1}, -1, {0, -1}}; }
BoundaryConditions origami_bc() { return {0, 1, {0, 1}, 1, {0, 1}}; }
BoundaryConditions tip_bc() { return {1, 0, 0, 0, 0}; }

BoundaryConditions edge_bc(Direction d) {
    BoundaryConditions bc;
    switch (d) {
        case Direction::East: bc.bE = 1; break;
        case Direction::North: bc.bN = 1; break;
        case Direction::West: bc.bW = 1; break;
        case Direction::South: bc.bS = 1; break;
    }
    return bc;
}

BoundaryConditions parse_bc(const std::string& raw) {
    // Entries never end in ')', so a trailing one closes the format_bc wrapper.
    const std::string text =
        raw.size() >= 2 && raw.front() == '(' && raw.back() == ')' ? raw.substr(1, raw.size() - 2) : raw;
    const auto semi = text.find(';');
    if (semi == std::string::npos) throw ArgumentError("boundary conditions must look like 'b0;bE,bN,bW,bS'");
    std::vector<std::string> edges;
    std::string rest = text.substr(semi + 1);
    std::size_t start = 0;
    for (;;) {
        const auto comma = rest.find(',', start);
        edges.push_back(rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (edges.size() != 4) throw ArgumentError("expected four edge values after ';' in '" + text + "'");
    return {parse_entry(text.substr(0, semi)), parse_entry(edges[0]), parse_entry(edges[1]), parse_entry(edges[2]),
            parse_entry(edges[3])};
}

std::string format_bc(const BoundaryConditions& bc) {
    return "(" + format_entry(bc.b0) + ";" + format_entry(bc.bE) + "," + format_entry(bc.bN) + "," +
           format_entry(bc.bW) + "," + format_entry(bc.bS) + ")";
}

Boundary<Complex> to_float(const BoundaryConditions& bc) {
    return {bc.b0.to_complex(), bc.bE.to_complex(), bc.bN.to_complex(), bc.bW.to_complex(), bc.bS.to_complex()};
}

template <class V>
std::size_t estimate_slice_bytes(int n) {
    const auto cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    if constexpr (std::is_same_v<V, DyadicGaussian>) {
        // Two numerators of about n + 8 bits each, plus malloc headers.
        const std::size_t limbs = (static_cast<std::size_t>(n) + 8 + 63) / 64;
        return cells * (sizeof(V) + 2 * (16 + 8 * limbs));
    } else {
        return cells * sizeof(V);
    }
}

template <class V>
std::size_t estimate_solve_bytes(int n_max, History history) {
    std::size_t total = 3 * estimate_slice_bytes<V>(n_max + 1);
    if (history == History::Full) {
        for (int t = 0; t <= n_max; ++t) total += estimate_slice_bytes<V>(t);
    }
    return total;
}

template <class V>
ConeSolver<V>::ConeSolver(Boundary<V> bc, SolverOptions opts) : bc_(std::move(bc)), opts_(opts) {}

template <class V>
void ConeSolver<V>::advance() {
    const int n = current_.time();
    const int m = n + 1;
    require_budget(3 * estimate_slice_bytes<V>(m), opts_.memory_cap, "cone solver");
    scratch_.resize(m);
    if (m == 1) {
        scratch_.at_index(0, 0) = bc_.b0;
    } else {
        static const V zero{};
        const Slice<V>& cur = current_;
        const Slice<V>& prev = previous_;
        auto at_cur = [&](int a, int b) -> const V& {
            return (a >= 0 && a < n && b >= 0 && b < n) ? cur.at_index(a, b) : zero;
        };
        auto at_prev = [&](int a, int b) -> const V& {
            return (a >= 0 && a < n - 1 && b >= 0 && b < n - 1) ? prev.at_index(a, b) : zero;
        };
        detail::parallel_for(m, opts_.threads, [&](int begin, int end) {
            for (int a = begin; a < end; ++a) {
                for (int b = 0; b < m; ++b) {
                    // (a,b) j+1, (a-1,b-1) j-1, (a,b-1) k+1, (a-1,b) k-1
                    wave_update(scratch_.at_index(a, b), at_cur(a, b), at_cur(a - 1, b - 1), at_cur(a, b - 1),
                                at_cur(a - 1, b), at_prev(a - 1, b - 1));
                }
            }
        });
        // Axis edges (+-n, 0), (0, +-n) of time n+1 sit at the grid corners.
        scratch_.at_index(m - 1, m - 1) += half(bc_.bE);
        scratch_.at_index(m - 1, 0) += half(bc_.bN);
        scratch_.at_index(0, 0) += half(bc_.bW);
        scratch_.at_index(0, m - 1) += half(bc_.bS);
    }
    std::swap(previous_, current_);
    std::swap(current_, scratch_);
}

template <class V>
void ConeSolver<V>::advance_to(int n) {
    while (time() < n) advance();
}

template <class V>
bool WaveField<V>::has_slice(int n) const noexcept {
    if (n < 0 || n > n_max_) return false;
    if (history_ == History::Full) return true;
    return n >= n_max_ - static_cast<int>(slices_.size()) + 1;
}

template <class V>
const Slice<V>& WaveField<V>::slice(int n) const {
    if (n < 0 || n > n_max_) {
        throw ArgumentError("time " + std::to_string(n) + " outside computed range [0, " + std::to_string(n_max_) +
                            "]");
    }
    if (!has_slice(n)) {
        throw ArgumentError("time " + std::to_string(n) + " not retained (rolling history)");
    }
    if (history_ == History::Full) return slices_[static_cast<std::size_t>(n)];
    return slices_[slices_.size() - 1 - static_cast<std::size_t>(n_max_ - n)];
}

template <class V>
void WaveField<V>::push(Slice<V> s) {
    const bool first = n_max_ < 0;
    const bool ok = first ? (history_ == History::Rolling ? s.time() >= 0 : s.time() == 0) : s.time() == n_max_ + 1;
    if (!ok) throw ArgumentError("slices must be pushed in time order");
    n_max_ = s.time();
    slices_.push_back(std::move(s));
    if (history_ == History::Rolling && slices_.size() > 2) slices_.erase(slices_.begin());
}

template <class V>
double slice_max(const Slice<V>& s) {
    double m = 0.0;
    s.for_each([&](int, int, const V& v) {
        if constexpr (std::is_same_v<V, DyadicGaussian>) {
            m = std::max(m, std::abs(v.to_complex()));
        } else {
            m = std::max(m, std::abs(v));
        }
    });
    return m;
}

namespace {

template <class V>
WaveField<V> run_cone(const Boundary<V>& bc, std::string source, int n_max, const SolverOptions& opts) {
    if (n_max < 1) throw ArgumentError("n_max must be >= 1, got " + std::to_string(n_max));
    require_budget(estimate_solve_bytes<V>(n_max, opts.history), opts.memory_cap, "cone solve");
    WaveField<V> field(std::move(source), opts.history);
    ConeSolver<V> solver(bc, opts);
    field.push(solver.current());
    while (solver.time() < n_max) {
        solver.advance();
        field.push(solver.current());
    }
    return field;
}

}  // namespace

ExactField cone_solve(const BoundaryConditions& bc, int n_max, const SolverOptions& opts) {
    return run_cone(bc, "cone" + format_bc(bc), n_max, opts);
}

FloatField cone_solve_float(const BoundaryConditions& bc, int n_max, const SolverOptions& opts) {
    return run_cone(to_float(bc), "cone" + format_bc(bc), n_max, opts);
}

ExactField fundamental_solution(int n_max, const SolverOptions& opts) {
    if (n_max < 1) throw ArgumentError("n_max must be >= 1, got " + std::to_string(n_max));
    // Working squares of side 2n+1 cost about four times a cone slice.
    require_budget(estimate_solve_bytes<DyadicGaussian>(n_max, opts.history) +
                       12 * estimate_slice_bytes<DyadicGaussian>(n_max + 1),
                   opts.memory_cap, "fundamental solution");

    // Square grid |j|,|k| <= r stored row-major; cells of the wrong parity stay 0.
    struct Square {
        int r = -1;
        std::vector<DyadicGaussian> v;
        const DyadicGaussian* get(int j, int k) const {
            if (std::abs(j) > r || std::abs(k) > r) return nullptr;
            return &v[static_cast<std::size_t>(j + r) * (2 * r + 1) + (k + r)];
        }
        DyadicGaussian& ref(int j, int k) { return v[static_cast<std::size_t>(j + r) * (2 * r + 1) + (k + r)]; }
    };
    static const DyadicGaussian zero{};
    auto read = [](const Square& s, int j, int k) -> const DyadicGaussian& {
        const DyadicGaussian* p = s.get(j, k);
        return p ? *p : zero;
    };
    auto to_slice = [](const Square& s, int n) {
        Slice<DyadicGaussian> out(n);
        for (int j = -s.r; j <= s.r; ++j) {
            for (int k = -s.r; k <= s.r; ++k) {
                if (((j + k + n) % 2 + 2) % 2 != 1) continue;
                const DyadicGaussian& x = *s.get(j, k);
                if (DyadicGaussian* cell = out.find(j, k)) {
                    *cell = x;
                } else if (!x.is_zero()) {
                    throw IntegrityError("fundamental solution leaves its light cone at (" + std::to_string(j) +
                                         "," + std::to_string(k) + "," + std::to_string(n) + ")");
                }
            }
        }
        return out;
    };

    ExactField field("fundamental", opts.history);
    Square prev, cur;
    cur.r = 0;
    cur.v.resize(1);  // time 0: the single cell (0,0) has the wrong parity and is 0
    field.push(Slice<DyadicGaussian>(0));
    for (int n = 1; n <= n_max; ++n) {
        Square next;
        next.r = n;
        next.v.resize(static_cast<std::size_t>(2 * n + 1) * (2 * n + 1));
        if (n == 1) {
            next.ref(0, 0) = 1;
        } else {
            detail::parallel_for(2 * n + 1, opts.threads, [&](int begin, int end) {
                for (int j = begin - n; j < end - n; ++j) {
                    for (int k = -n; k <= n; ++k) {
                        if (((j + k + n) % 2 + 2) % 2 != 1) continue;
                        wave_update(next.ref(j, k), read(cur, j + 1, k), read(cur, j - 1, k), read(cur, j, k + 1),
                                    read(cur, j, k - 1), read(prev, j, k));
                    }
                }
            });
        }
        prev = std::move(cur);
        cur = std::move(next);
        field.push(to_slice(cur, n));
    }
    return field;
}

DyadicGaussian convolve_moving_source(Direction d, const LatticePoint& p, const ExactField& f0) {
    if (!p.valid()) throw ArgumentError("point is not on the half-space lattice");
    if (p.n > f0.n_max()) {
        throw ArgumentError("time " + std::to_string(p.n) + " exceeds the fundamental solution range " +
                            std::to_string(f0.n_max()));
    }
    const auto [dj, dk] = step_of(d);
    DyadicGaussian sum;
    for (int s = 1; s <= p.n - 1; ++s) {
        const Slice<DyadicGaussian>& sl = f0.slice(p.n - s);
        if (const DyadicGaussian* v = sl.find(p.j - s * dj, p.k - s * dk)) sum += *v;
    }
    return sum.halved();
}

Slice<DyadicGaussian> moving_source_step(Direction d, const Slice<DyadicGaussian>& fd_prev,
                                         const Slice<DyadicGaussian>& f0_prev) {
    if (fd_prev.time() != f0_prev.time()) throw ArgumentError("moving_source_step: slices at different times");
    const int n = fd_prev.time() + 1;
    const auto [dj, dk] = step_of(d);
    Slice<DyadicGaussian> out(n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const int u = 2 * a - (n - 1);
            const int v = 2 * b - (n - 1);
            const int j = (u + v) / 2 - dj;
            const int k = (u - v) / 2 - dk;
            DyadicGaussian acc;
            if (const auto* x = f0_prev.find(j, k)) acc = x->halved();
            if (const auto* y = fd_prev.find(j, k)) acc += *y;
            out.at_index(a, b) = std::move(acc);
        }
    }
    return out;
}

DriftReport measure_float_drift(const BoundaryConditions& bc, int n, const SolverOptions& opts) {
    if (n < 1) throw ArgumentError("drift measurement needs n >= 1");
    ConeSolver<DyadicGaussian> exact(bc, opts);
    ConeSolver<Complex> approx(to_float(bc), opts);
    exact.advance_to(n);
    approx.advance_to(n);
    DriftReport r;
    r.n = n;
    const auto& e = exact.current();
    const auto& f = approx.current();
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const Complex ev = e.at_index(a, b).to_complex();
            r.max_abs_drift = std::max(r.max_abs_drift, std::abs(ev - f.at_index(a, b)));
            r.max_abs_value = std::max(r.max_abs_value, std::abs(ev));
        }
    }
    return r;
}

std::size_t count_recursion_violations(const ExactField& f, bool cone) {
    std::size_t bad = 0;
    for (int n = 1; n + 1 <= f.n_max(); ++n) {
        if (!f.has_slice(n - 1) || !f.has_slice(n + 1)) continue;
        const auto& next = f.slice(n + 1);
        const auto& cur = f.slice(n);
        const auto& prev = f.slice(n - 1);
        next.for_each([&](int j, int k, const DyadicGaussian& v) {
            if (cone && std::abs(j) + std::abs(k) == n && (j == 0 || k == 0)) return;
            const DyadicGaussian rhs =
                (cur.value(j + 1, k) + cur.value(j - 1, k) + cur.value(j, k + 1) + cur.value(j, k - 1)).halved();
            if (v + prev.value(j, k) != rhs) ++bad;
        });
    }
    return bad;
}

template class ConeSolver<DyadicGaussian>;
template class ConeSolver<Complex>;
template class WaveField<DyadicGaussian>;
template class WaveField<Complex>;
template double slice_max(const Slice<DyadicGaussian>&);
template double slice_max(const Slice<Complex>&);
template std::size_t estimate_slice_bytes<DyadicGaussian>(int);
template std::size_t estimate_slice_bytes<Complex>(int);
template std::size_t estimate_solve_bytes<DyadicGaussian>(int, History);
template std::size_t estimate_solve_bytes<Complex>(int, History);

}  // namespace aztec::wave
