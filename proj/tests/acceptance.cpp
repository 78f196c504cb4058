// One PASS/FAIL line per acceptance criterion. Artifacts of criterion 7 go to
// the directory given as the first argument (default: acceptance_out).

#include <sys/resource.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include "aztec/continuum.hpp"
#include "aztec/convergence.hpp"
#include "aztec/embedding.hpp"
#include "aztec/errors.hpp"
#include "aztec/io.hpp"
#include "aztec/render.hpp"
#include "aztec/wave.hpp"

using namespace aztec;
using embedding::EmbeddingKind;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::ostringstream notes;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes << " [" << what << "]";
        }
    }
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

DyadicGaussian dy(long re, long im, std::uint64_t e) { return DyadicGaussian::from_parts(re, im, e); }

wave::SolverOptions full_history() {
    wave::SolverOptions o;
    o.history = wave::History::Full;
    return o;
}

// 1. Exact hand values, the edge closed form and the initial embeddings.
void exact_values(Outcome& r) {
    const auto f = wave::cone_solve(wave::temb_bc(), 4, full_history());
    r.require(f.at(1, 0, 2) == dy(1, 0, 1), "f(1,0,2)");
    r.require(f.at(2, 0, 3) == dy(3, 0, 2), "f(2,0,3)");
    r.require(f.at(1, 1, 3) == dy(1, 1, 2), "f(1,1,3)");
    r.require(f.at(0, 0, 3) == DyadicGaussian(0), "f(0,0,3)");
    r.require(f.at(1, 0, 4) == dy(1, 0, 3), "f(1,0,4)");

    const auto bc = wave::parse_bc("3-i;1+2i,0,0,0");
    wave::ConeSolver<DyadicGaussian> s(bc);
    bool edge_ok = true;
    for (int n = 0; n <= 200; ++n) {
        s.advance_to(n + 1);
        const DyadicGaussian p = DyadicGaussian(1).scaled_pow2(-n);
        edge_ok = edge_ok && s.current().value(n, 0) == p * bc.b0 + (DyadicGaussian(1) - p) * bc.bE;
    }
    r.require(edge_ok, "edge closed form");
    r.require(embedding::build_t_embedding(1).pos.inner(0, 0) == DyadicGaussian(0), "T1(0,0)");
    r.require(embedding::build_origami(1).pos.inner(0, 0) == DyadicGaussian(0), "O1(0,0)");
}

// 2. Independent routes to the same exact objects.
void oracle_equivalences(Outcome& r) {
    const int n_max = 200;
    const auto f0 = wave::fundamental_solution(n_max, full_history());
    wave::ConeSolver<DyadicGaussian> tip(wave::tip_bc());
    wave::ConeSolver<DyadicGaussian> east(wave::edge_bc(wave::Direction::East));
    wave::Slice<DyadicGaussian> accumulated(0);
    bool tip_ok = true, conv_ok = true;
    for (int n = 1; n <= n_max; ++n) {
        tip.advance();
        east.advance();
        tip_ok = tip_ok && tip.current() == f0.slice(n);
        accumulated = wave::moving_source_step(wave::Direction::East, accumulated, f0.slice(n - 1));
        conv_ok = conv_ok && accumulated == east.current();
        // The direct sum at every cell for small n and along the axes for all n.
        east.current().for_each([&](int j, int k, const DyadicGaussian& v) {
            if (n <= 40 || k == 0 || k == 1 || j == 0 || j == 1)
                conv_ok = conv_ok && wave::convolve_moving_source(wave::Direction::East, {j, k, n}, f0) == v;
        });
    }
    r.require(tip_ok, "fundamental == cone(1;0,0,0,0)");
    r.require(conv_ok, "convolution == cone(0;1,0,0,0)");

    using wave::Direction;
    wave::ConeSolver<DyadicGaussian> e(wave::edge_bc(Direction::East)), no(wave::edge_bc(Direction::North));
    wave::ConeSolver<DyadicGaussian> w(wave::edge_bc(Direction::West)), so(wave::edge_bc(Direction::South));
    wave::ConeSolver<DyadicGaussian> t(wave::temb_bc()), o(wave::origami_bc());
    bool lin_ok = true;
    for (int n = 1; n <= 101; ++n) {
        for (auto* x : {&e, &no, &w, &so, &t, &o}) x->advance();
        t.current().for_each([&](int j, int k, const DyadicGaussian& v) {
            const auto& fe = *e.current().find(j, k);
            const auto& fn = *no.current().find(j, k);
            const auto& fw = *w.current().find(j, k);
            const auto& fs = *so.current().find(j, k);
            lin_ok = lin_ok && v == fe + fn.mul_i() - fw - fs.mul_i();
            lin_ok = lin_ok && *o.current().find(j, k) == fe + fn.mul_i() + fw + fs.mul_i();
        });
    }
    r.require(lin_ok, "linearity of T and O");

    embedding::EmbeddingSequence ts(EmbeddingKind::T), os(EmbeddingKind::O);
    bool exact_fold = true, float_fold = true;
    double worst = 0.0;
    for (int n = 1; n <= 200; ++n) {
        const auto tn = ts.next();
        const auto on = os.next();
        const auto m = embedding::build_combinatorial_map(n);
        if (n <= 30) exact_fold = exact_fold && embedding::compare_fold(embedding::origami_fold(tn, m), on).mismatches == 0;
        const auto c = embedding::compare_fold(embedding::origami_fold_float(tn, m, 1e-9), on, 1e-9);
        float_fold = float_fold && c.mismatches == 0;
        worst = std::max(worst, c.max_error);
    }
    r.require(exact_fold, "exact fold n<=30");
    r.require(float_fold, "float fold n<=200");
    r.notes << " float fold max error " << worst << ";";
}

// 3. Exact algebraic identities.
void algebraic_identities(Outcome& r) {
    embedding::EmbeddingSequence ts(EmbeddingKind::T), os(EmbeddingKind::O);
    bool xf_ok = true, miquel_ok = true;
    auto prev = ts.next();
    for (int n = 1; n <= 100; ++n) {
        const auto on = os.next();
        for (const embedding::TEmbedding* e : std::initializer_list<const embedding::TEmbedding*>{&prev, &on}) {
            for (int j = -(n - 2); j <= n - 2; ++j)
                for (int k = -(n - 2 - std::abs(j)); k <= n - 2 - std::abs(j); ++k)
                    xf_ok = xf_ok && embedding::xf_residual(*e, j, k).is_zero();
        }
        auto next = ts.next();
        miquel_ok = miquel_ok && embedding::check_miquel(prev, next).ok();
        prev = std::move(next);
    }
    r.require(xf_ok, "X_f identity");
    r.require(miquel_ok, "Miquel identity");

    wave::ConeSolver<DyadicGaussian> o(embedding::cone_bc(EmbeddingKind::O)), tip(wave::tip_bc());
    bool im_ok = true;
    for (int n = 1; n <= 200; ++n) {
        o.advance_to(n + 1);
        tip.advance_to(n + 1);
        const auto q = embedding::origami_prime(embedding::embedding_from_slices(EmbeddingKind::O, o.previous(), o.current()));
        const auto f0 = embedding::embedding_from_slices(EmbeddingKind::T, tip.previous(), tip.current());
        q.q.for_each_inner([&](int j, int k, const DyadicGaussian& v) { im_ok = im_ok && v.imag() == f0.pos.inner(j, k); });
    }
    r.require(im_ok, "sqrt2 Im O' == f0");
}

// 4. Convexity, orientation, angle condition and non-expansion.
void geometric_validity(Outcome& r) {
    embedding::EmbeddingSequence ts(EmbeddingKind::T), os(EmbeddingKind::O);
    bool convex = true, angles = true, expansion = true;
    double worst_angle = 0.0;
    for (int n = 1; n <= 100; ++n) {
        const auto t = ts.next();
        const auto o = os.next();
        const auto m = embedding::build_combinatorial_map(n);
        const auto rep = embedding::verify_embedding(t, m, 4);
        convex = convex && rep.nonconvex_faces == 0 && rep.misoriented_faces == 0 && rep.degenerate_edges == 0;
        angles = angles && rep.max_angle_deviation <= 1e-9;
        worst_angle = std::max(worst_angle, rep.max_angle_deviation);
        expansion = expansion && embedding::check_non_expansion(t, o, 10000, static_cast<std::uint64_t>(n)).ok();
    }
    r.require(convex, "convex and oriented");
    r.require(angles, "angle condition");
    r.require(expansion, "non-expansion");
    r.notes << " max angle deviation " << worst_angle << ";";
}

// 5. Closed-form continuum identities.
void continuum_identities(Outcome& r) {
    const auto rep = continuum::check_identities(500, 2024);
    r.require(rep.max_conformal_residual <= 1e-12, "conformal residual");
    r.require(rep.max_measure_sum_error <= 1e-14, "measure sum");
    r.require(std::abs(rep.hm_east_at_axis - 0.5) <= 1e-14, "hm(sqrt2-1)");
    r.require(std::abs(rep.psiE_origin - 0.25) <= 1e-8, "psiE(0,0)");
    r.require(rep.max_psiE_hm_gap <= 1e-6, "psiE vs hm");
    r.require(rep.contour_exact, "contour vertices");
    const auto sample = continuum::sample_surface({64, 4}, 8);
    const auto v = continuum::contour_vertices();
    for (std::size_t s = 0; s < 4; ++s) r.require(sample.contour[s].front() == v[s], "contour endpoints");
}

// 6. Convergence trends with the regression values of the first oracle run.
struct Regression {
    const char* table;
    double values[4];
};

constexpr Regression kRegression[] = {
    {"max|f0|", {0.11227517265921705, 0.079589237387178768, 0.056348479009256422, 0.03986930196379293}},
    {"|fE-psiE|", {0.05376178555208555, 0.024763993500339532, 0.01431720701192396, 0.0077234236959659031}},
    {"|T-z|", {0.071830603329326864, 0.035498562654763255, 0.023180644743499294, 0.012375817071217494}},
    {"|ReO'+theta|", {0.074051492287112053, 0.035736696513317331, 0.023611874184209014, 0.012604276007324167}},
    {"max|ImO'|", {0.079390535946222821, 0.056278089465939998, 0.039844391616993047, 0.028191853779772114}},
};

void convergence_trends(Outcome& r) {
    const std::vector<int> n_list{50, 100, 200, 400};
    wave::SolverOptions opts;
    opts.memory_cap = std::size_t{2} << 30;
    opts.threads = 4;
    std::vector<convergence::Table> tables;
    bool consistent = true;
    for (const auto& rep : {convergence::check_f0_decay(n_list, opts), convergence::check_fE_limit(n_list, 0.05, opts),
                            convergence::check_embedding_limit(n_list, 0.05, opts)}) {
        consistent = consistent && rep.consistency_failures.empty();
        for (const auto& t : rep.tables) tables.push_back(t);
    }
    r.require(consistent, "Im O' consistency");
    for (const auto& reg : kRegression) {
        const auto it = std::find_if(tables.begin(), tables.end(), [&](const auto& t) { return t.name == reg.table; });
        if (it == tables.end()) {
            r.require(false, std::string("missing table ") + reg.table);
            continue;
        }
        r.require(it->decreasing(), std::string(reg.table) + " decreasing");
        for (std::size_t i = 0; i < 4; ++i) {
            const double got = it->rows[i].value;
            r.require(std::abs(got - reg.values[i]) <= 1e-9 * reg.values[i],
                      std::string(reg.table) + " regression at n=" + std::to_string(n_list[i]));
        }
    }
    rusage usage{};
    getrusage(RUSAGE_SELF, &usage);
    const double peak_gib = static_cast<double>(usage.ru_maxrss) / (1024.0 * 1024.0);
    r.require(peak_gib < 2.0, "peak memory");
    r.notes << " peak RSS " << peak_gib << " GiB;";
}

// 7. Figures at desk scale.
void figures(Outcome& r, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    for (int n : {26, 101}) {
        render::RenderSpec spec;
        spec.n = n;
        spec.arctic = n == 101;
        const auto t = embedding::build_t_embedding(n);
        const auto m = embedding::build_combinatorial_map(n);
        const auto svg = render::render_svg(t, m, spec);
        io::write_text((dir / ("embedding_" + std::to_string(n) + ".svg")).string(), svg);
        r.require(svg.find("viewBox=\"-1.05 -1.05 2.1 2.1\"") != std::string::npos, "view box");
        r.require(svg == render::render_svg(t, m, spec), "deterministic SVG");
        if (spec.arctic) {
            // Every drawn edge obeys the threshold rule with the (n-1)^2 = 10^4 scale.
            std::size_t red = 0, blue = 0;
            for (const auto& e : m.edges()) {
                auto r2 = [](const embedding::DualVertex& v) {
                    return v.is_outer() ? 1e300 : double(v.j()) * v.j() + double(v.k()) * v.k();
                };
                red += r2(e.a) <= 4900 && r2(e.b) <= 4900;
                blue += r2(e.a) >= 5000 && r2(e.b) >= 5000;
            }
            std::size_t lines = 0;
            for (auto p = svg.find("<line"); p != std::string::npos; p = svg.find("<line", p + 1)) ++lines;
            r.require(lines == red + blue, "arctic edge count");
        } else {
            std::size_t polys = 0;
            for (auto p = svg.find("<polygon fill="); p != std::string::npos; p = svg.find("<polygon fill=", p + 1)) ++polys;
            r.require(polys == m.faces().size(), "one polygon per face");
        }
    }

    render::RenderSpec spec;
    spec.target = render::Target::SurfaceMesh;
    spec.n = 401;
    spec.stride = 8;
    spec.overlay_continuum = true;
    const auto t = embedding::build_t_embedding(401);
    const auto q = embedding::origami_prime(embedding::build_origami(401));
    const auto obj = render::render_surface(t, q, spec);
    io::write_text((dir / "surface_401.obj").string(), obj);
    const auto st = render::mesh_stats(obj);
    r.require(st.triangles > 0, "mesh triangles");
    r.require(st.max_abs_height <= std::numbers::sqrt2 / 2 + 1e-9, "|Re O'| bound");
    // Saddle: near the E and W corners the graph rises to +sqrt2/2, near N and S it falls to -sqrt2/2.
    const int far = 8 * 2 * ((401 - 1) / 16);
    const double h = std::numbers::sqrt2 / 2;
    const std::pair<int, int> corners[] = {{far, 0}, {0, far}, {-far, 0}, {0, -far}};
    const auto contour = continuum::contour_vertices();
    for (std::size_t c = 0; c < 4; ++c) {
        const auto v = embedding::DualVertex::inner(corners[c].first, corners[c].second);
        const embedding::Complex z = t.to_complex(v);
        const double height = -q.value(v).real();
        r.require(std::abs(z - contour[c].first) < 0.05, "frozen corner collapses");
        r.require(std::abs(height - (c % 2 == 0 ? h : -h)) < 0.05, "saddle height");
    }
}

}  // namespace

int main(int argc, char** argv) {
    const std::filesystem::path out_dir = argc > 1 ? argv[1] : "acceptance_out";
    struct Criterion {
        int id;
        const char* title;
        double budget_s;
        std::function<void(Outcome&)> run;
    };
    const Criterion criteria[] = {
        {1, "exact value suite", 1, exact_values},
        {2, "oracle equivalences", 60, oracle_equivalences},
        {3, "exact algebraic identities", 60, algebraic_identities},
        {4, "geometric validity", 60, geometric_validity},
        {5, "continuum identities", 10, continuum_identities},
        {6, "convergence trends", 600, convergence_trends},
        {7, "figure reproduction", 300, [&](Outcome& r) { figures(r, out_dir); }},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome r;
        const auto start = Clock::now();
        try {
            c.run(r);
        } catch (const std::exception& e) {
            r.require(false, std::string("exception: ") + e.what());
        }
        const double secs = seconds_since(start);
        r.require(secs < c.budget_s, "over time budget");
        std::printf("%s criterion %d: %s (%.2f s of %.0f s)%s\n", r.ok ? "PASS" : "FAIL", c.id, c.title, secs,
                    c.budget_s, r.notes.str().c_str());
        std::fflush(stdout);
        failed += r.ok ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
