#include "aztec/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "aztec/continuum.hpp"
#include "aztec/embedding.hpp"
#include "aztec/errors.hpp"

namespace aztec::convergence {

namespace {

void require_ascending(const std::vector<int>& n_list) {
    if (n_list.empty()) throw ArgumentError("n list is empty");
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        if (n_list[i] < 1) throw ArgumentError("n values must be >= 1");
        if (i > 0 && n_list[i] <= n_list[i - 1]) throw ArgumentError("n list must be strictly ascending");
    }
}

double distance_to_segment(double px, double py, double ax, double ay, double bx, double by) {
    const double dx = bx - ax, dy = by - ay;
    const double t = std::clamp(((px - ax) * dx + (py - ay) * dy) / (dx * dx + dy * dy), 0.0, 1.0);
    return std::hypot(px - (ax + t * dx), py - (ay + t * dy));
}

}  // namespace

bool Table::decreasing() const {
    for (std::size_t i = 1; i < rows.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!(rows[i].value < rows[j].value)) return false;
    return true;
}

bool ConvergenceReport::all_decreasing() const {
    return std::all_of(tables.begin(), tables.end(), [](const Table& t) { return t.decreasing(); });
}

double distance_to_discontinuity(double x, double y) {
    double d = std::abs(std::hypot(x, y) - std::numbers::sqrt2 / 2);
    // Lines separating the frozen zones: x = +-1/2 for |y| >= 1/2 and
    // y = +-1/2 for |x| >= 1/2, clipped to the closed diamond.
    for (double sx : {-0.5, 0.5}) {
        for (double sy : {-0.5, 0.5}) {
            d = std::min(d, distance_to_segment(x, y, sx, sy, sx, 2 * sy));
            d = std::min(d, distance_to_segment(x, y, sx, sy, 2 * sx, sy));
        }
    }
    return d;
}

bool in_region(double x, double y, const SampleRegion& region) {
    return std::abs(x) + std::abs(y) <= region.compact && distance_to_discontinuity(x, y) >= region.band;
}

ConvergenceReport check_f0_decay(const std::vector<int>& n_list, const wave::SolverOptions& opts) {
    require_ascending(n_list);
    ConvergenceReport r;
    r.check = "f0-decay";
    r.n_list = n_list;
    Table t{"max|f0|", {}};
    wave::ConeSolver<DyadicGaussian> solver(wave::tip_bc(), opts);
    for (int n : n_list) {
        solver.advance_to(n);
        t.rows.push_back({n, wave::slice_max(solver.current()), solver.current().size()});
    }
    r.tables.push_back(std::move(t));
    return r;
}

ConvergenceReport check_fE_limit(const std::vector<int>& n_list, double band, const wave::SolverOptions& opts) {
    require_ascending(n_list);
    if (!(band > 0)) throw ArgumentError("band must be positive");
    ConvergenceReport r;
    r.check = "fE-limit";
    r.n_list = n_list;
    r.region.band = band;
    Table t{"|fE-psiE|", {}};
    wave::ConeSolver<DyadicGaussian> solver(wave::edge_bc(wave::Direction::East), opts);
    for (int n : n_list) {
        solver.advance_to(n);
        Row row{n, 0.0, 0};
        solver.current().for_each([&](int j, int k, const DyadicGaussian& v) {
            const double x = double(j) / n, y = double(k) / n;
            if (!in_region(x, y, r.region)) return;
            row.value = std::max(row.value, std::abs(v.to_complex().real() - continuum::psiE_oracle(x, y)));
            ++row.samples;
        });
        t.rows.push_back(row);
    }
    r.tables.push_back(std::move(t));
    return r;
}

ConvergenceReport check_embedding_limit(const std::vector<int>& n_list, double band, const wave::SolverOptions& opts) {
    require_ascending(n_list);
    if (!(band > 0)) throw ArgumentError("band must be positive");
    using embedding::EmbeddingKind;
    ConvergenceReport r;
    r.check = "embedding-limit";
    r.n_list = n_list;
    r.region.band = band;
    Table tz{"|T-z|", {}};
    Table tre{"|ReO'+theta|", {}};
    Table tim{"max|ImO'|", {}};
    wave::ConeSolver<DyadicGaussian> t_solver(embedding::cone_bc(EmbeddingKind::T), opts);
    wave::ConeSolver<DyadicGaussian> o_solver(embedding::cone_bc(EmbeddingKind::O), opts);
    wave::ConeSolver<DyadicGaussian> f0_solver(wave::tip_bc(), opts);
    const double inv_sqrt2 = 1 / std::numbers::sqrt2;

    for (int n : n_list) {
        t_solver.advance_to(n + 1);
        o_solver.advance_to(n + 1);
        f0_solver.advance_to(n + 1);
        const auto t = embedding::embedding_from_slices(EmbeddingKind::T, t_solver.previous(), t_solver.current());
        const auto o = embedding::embedding_from_slices(EmbeddingKind::O, o_solver.previous(), o_solver.current());
        const auto f0 = embedding::embedding_from_slices(EmbeddingKind::T, f0_solver.previous(), f0_solver.current());
        const auto q = embedding::origami_prime(o);

        Row rz{n, 0.0, 0}, rre{n, 0.0, 0}, rim{n, 0.0, 0};
        double f0_max = 0.0;
        std::size_t mismatches = 0;
        t.pos.for_each_inner([&](int j, int k, const DyadicGaussian& tv) {
            const DyadicGaussian& qv = q.q.inner(j, k);
            if (!(qv.imag() == f0.pos.inner(j, k))) ++mismatches;
            rim.value = std::max(rim.value, std::abs(qv.imag().to_complex().real()) * inv_sqrt2);
            f0_max = std::max(f0_max, std::abs(f0.pos.inner(j, k).to_complex().real()));
            ++rim.samples;
            const double x = double(j) / n, y = double(k) / n;
            if (!in_region(x, y, r.region)) return;
            const auto s = continuum::surface_map(continuum::PlanePoint::at(x, y));
            rz.value = std::max(rz.value, std::abs(tv.to_complex() - s.z));
            rre.value = std::max(rre.value, std::abs(qv.real().to_complex().real() * inv_sqrt2 + s.theta));
            ++rz.samples;
            ++rre.samples;
        });
        if (mismatches) {
            r.consistency_failures.push_back("n=" + std::to_string(n) + ": Im q differs from f0 at " +
                                             std::to_string(mismatches) + " faces");
        }
        if (rim.value != f0_max * inv_sqrt2) {
            r.consistency_failures.push_back("n=" + std::to_string(n) + ": ImO' sup differs from f0 sup / sqrt2");
        }
        tz.rows.push_back(rz);
        tre.rows.push_back(rre);
        tim.rows.push_back(rim);
    }
    r.tables.push_back(std::move(tz));
    r.tables.push_back(std::move(tre));
    r.tables.push_back(std::move(tim));
    return r;
}

std::string format_report(const ConvergenceReport& r) {
    std::ostringstream out;
    char buf[160];
    out << r.check << "  (|x|+|y| <= " << r.region.compact << ", band " << r.region.band << ")\n";
    for (const auto& t : r.tables) {
        std::snprintf(buf, sizeof buf, "  %-14s %8s %24s %10s\n", t.name.c_str(), "n", "sup error", "samples");
        out << buf;
        for (const auto& row : t.rows) {
            std::snprintf(buf, sizeof buf, "  %-14s %8d %24.17g %10zu\n", "", row.n, row.value, row.samples);
            out << buf;
        }
        out << "  " << t.name << ": " << (t.decreasing() ? "decreasing" : "NOT decreasing") << "\n";
    }
    for (const auto& f : r.consistency_failures) out << "  consistency: " << f << "\n";
    return out.str();
}

}  // namespace aztec::convergence
