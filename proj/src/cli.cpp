#include "aztec/cli.hpp"

#include <cctype>
#include <cstdio>
#include <iostream>
#include <new>
#include <sstream>

#include <CLI11.hpp>

#include "aztec/continuum.hpp"
#include "aztec/convergence.hpp"
#include "aztec/embedding.hpp"
#include "aztec/errors.hpp"
#include "aztec/io.hpp"
#include "aztec/render.hpp"
#include "aztec/wave.hpp"

namespace aztec {

namespace {

constexpr int kLargeN = 1000;

using embedding::EmbeddingKind;
using json = io::json;

struct Common {
    int n = -1;
    std::string mode = "exact";
    std::string out = "-";
    std::string format;
    std::string memory_cap = "4G";
    unsigned threads = 1;
    bool large = false;

    bool exact() const { return mode == "exact"; }
    wave::SolverOptions solver() const {
        wave::SolverOptions o;
        o.memory_cap = parse_byte_size(memory_cap);
        o.threads = threads;
        return o;
    }
};

struct Options {
    Common common;
    std::string field = "cone";
    std::string bc = "0;1,i,-1,-i";
    bool all_slices = false;
    std::string kind = "T";
    std::string check = "all";
    std::string n_list = "50,100,200,400";
    double band = 0.05;
    std::optional<double> x, y;
    int stride = -1;
    std::string target = "embedding-svg";
    bool arctic = false;
    double r_red = 0.49;
    double r_blue = 0.50;
    bool overlay = false;
    double tolerance = 1e-9;
};

std::string mib(std::size_t bytes) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.1f MiB", static_cast<double>(bytes) / (1024.0 * 1024.0));
    return buf;
}

void add_common(CLI::App* sub, Common& c, bool needs_n, const std::vector<std::string>& formats) {
    auto* n = sub->add_option("--n", c.n, "Time / diamond size");
    if (needs_n) n->required();
    sub->add_option("--mode", c.mode, "Arithmetic")->check(CLI::IsMember({"exact", "float"}));
    sub->add_option("--out", c.out, "Output path, - for stdout");
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--memory-cap", c.memory_cap, "Memory budget, e.g. 4G");
    sub->add_option("--threads", c.threads, "Worker threads")->check(CLI::Range(1u, 256u));
    sub->add_flag("--large", c.large, "Allow n > 1000");
}

// Refuses large runs without --large and checks the budget. `fields` counts
// extra slice-sized buffers kept alongside the solver.
void gate_size(const Common& c, int n, std::size_t fields) {
    const std::size_t bytes = wave::estimate_solve_bytes<DyadicGaussian>(n + 1, wave::History::Rolling) +
                              fields * wave::estimate_slice_bytes<DyadicGaussian>(n + 1);
    if (n > kLargeN && !c.large) {
        throw ArgumentError("n=" + std::to_string(n) + " needs --large (estimated memory " + mib(bytes) + ")");
    }
    if (c.large) std::cerr << "estimated memory for n=" << n << ": " << mib(bytes) << "\n";
    const std::size_t cap = parse_byte_size(c.memory_cap);
    if (bytes > cap) throw ResourceError("estimated " + mib(bytes) + " exceeds the memory cap " + mib(cap));
}

void require_n(int n, int min) {
    if (n < min) throw ArgumentError("--n must be >= " + std::to_string(min));
}

std::string pass(bool ok) { return ok ? "PASS" : "FAIL"; }

EmbeddingKind parse_kind(const std::string& k) {
    if (k == "T") return EmbeddingKind::T;
    if (k == "O" || k == "Oprime") return EmbeddingKind::O;
    throw ArgumentError("unknown kind '" + k + "'");
}

// --- wave -------------------------------------------------------------------

int run_wave(const Options& o) {
    const Common& c = o.common;
    require_n(c.n, 0);
    gate_size(c, c.n, o.all_slices ? static_cast<std::size_t>(c.n) : 0);
    const std::string format = c.format.empty() ? (c.exact() ? "json" : "csv") : c.format;
    wave::SolverOptions opts = c.solver();
    if (o.all_slices) opts.history = wave::History::Full;

    if (!c.exact()) {
        if (format != "csv") throw ArgumentError("float mode writes csv only");
        const auto bc = o.field == "fundamental" ? wave::tip_bc() : wave::parse_bc(o.bc);
        const auto f = wave::cone_solve_float(bc, c.n, opts);
        std::string text;
        for (const auto& s : f.slices()) {
            if (!o.all_slices && s.time() != c.n) continue;
            std::string part = io::slice_to_csv(s);
            if (!text.empty()) part.erase(0, part.find('\n') + 1);
            text += part;
        }
        io::write_text(c.out, text);
        return kExitOk;
    }

    const auto f = o.field == "fundamental" ? wave::fundamental_solution(c.n, opts)
                                            : wave::cone_solve(wave::parse_bc(o.bc), c.n, opts);
    std::string text;
    if (format == "json") {
        text = (o.all_slices ? io::field_to_json(f) : io::slice_to_json(f.slice(c.n), f.source())).dump(1) + "\n";
    } else {
        for (const auto& s : f.slices()) {
            if (!o.all_slices && s.time() != c.n) continue;
            std::string part = io::slice_to_csv(s);
            if (!text.empty()) part.erase(0, part.find('\n') + 1);
            text += part;
        }
    }
    io::write_text(c.out, text);
    return kExitOk;
}

// --- embed ------------------------------------------------------------------

int run_embed(const Options& o) {
    const Common& c = o.common;
    require_n(c.n, 1);
    gate_size(c, c.n, 4);
    const EmbeddingKind kind = parse_kind(o.kind);
    const std::string format = c.format.empty() ? (c.exact() ? "json" : "csv") : c.format;
    if (!c.exact() && format != "csv") throw ArgumentError("float mode writes csv only");
    const auto e = embedding::build_embedding(kind, c.n, c.solver());

    std::string text;
    if (o.kind == "Oprime") {
        const auto q = embedding::origami_prime(e);
        if (format == "json") {
            text = io::origami_prime_to_json(q).dump(1) + "\n";
        } else {
            text = "vertex,j,k,re,im\n";
            for (const auto& v : q.q.vertices()) {
                const auto z = q.value(v);
                text += (v.is_outer() ? std::string(embedding::to_string(v.side())) + ",," : "inner," + std::to_string(v.j()) + "," + std::to_string(v.k()) + ",") +
                        io::format_double(z.real()) + "," + io::format_double(z.imag()) + "\n";
            }
        }
    } else {
        text = format == "json" ? io::embedding_to_json(e).dump(1) + "\n" : io::embedding_to_csv(e);
    }
    io::write_text(c.out, text);
    return kExitOk;
}

// --- fold -------------------------------------------------------------------

int run_fold(const Options& o) {
    const Common& c = o.common;
    require_n(c.n, 1);
    gate_size(c, c.n, 8);
    const std::string format = c.format.empty() ? "table" : c.format;
    const auto t = embedding::build_t_embedding(c.n, c.solver());
    const auto origami = embedding::build_origami(c.n, c.solver());
    const auto m = embedding::build_combinatorial_map(c.n);
    const auto cmp = c.exact() ? embedding::compare_fold(embedding::origami_fold(t, m), origami)
                               : embedding::compare_fold(embedding::origami_fold_float(t, m, o.tolerance), origami, o.tolerance);
    const bool ok = cmp.mismatches == 0;
    std::string text;
    if (format == "json") {
        text = json{{"schema", io::kSchema},
                    {"kind", "fold"},
                    {"n", c.n},
                    {"mode", c.mode},
                    {"faces", m.faces().size()},
                    {"compared", cmp.compared},
                    {"mismatches", cmp.mismatches},
                    {"max_error", cmp.max_error},
                    {"ok", ok}}
                   .dump(1) +
               "\n";
    } else {
        std::ostringstream out;
        out << "fold of T_" << c.n << " (" << c.mode << ", " << m.faces().size() << " faces)\n"
            << "  compared " << cmp.compared << " dual vertices with O_" << c.n << ": " << cmp.mismatches
            << " mismatches, max error " << io::format_double(cmp.max_error) << "\n"
            << "  " << pass(ok) << "\n";
        text = out.str();
    }
    io::write_text(c.out, text);
    return ok ? kExitOk : kExitVerification;
}

// --- verify -----------------------------------------------------------------

int run_verify(const Options& o) {
    const Common& c = o.common;
    require_n(c.n, 1);
    gate_size(c, c.n, 10);
    const std::string format = c.format.empty() ? "table" : c.format;
    const auto opts = c.solver();

    embedding::EmbeddingSequence seq(EmbeddingKind::T, opts);
    embedding::TEmbedding t = seq.next();
    while (t.n() < c.n) t = seq.next();
    const auto t_next = seq.next();
    const auto origami = embedding::build_origami(c.n, opts);
    const auto m = embedding::build_combinatorial_map(c.n);

    const auto report = embedding::verify_embedding(t, m, c.threads);
    const auto miquel = embedding::check_miquel(t, t_next);
    std::size_t o_xf_checked = 0, o_xf_failures = 0;
    for (int j = -(c.n - 2); j <= c.n - 2; ++j) {
        for (int k = -(c.n - 2 - std::abs(j)); k <= c.n - 2 - std::abs(j); ++k) {
            ++o_xf_checked;
            if (!embedding::xf_residual(origami, j, k).is_zero()) ++o_xf_failures;
        }
    }
    const bool exact_fold = c.exact() && c.n <= 60;
    const auto fold = exact_fold ? embedding::compare_fold(embedding::origami_fold(t, m), origami)
                                 : embedding::compare_fold(embedding::origami_fold_float(t, m, o.tolerance), origami, o.tolerance);
    const auto expansion = embedding::check_non_expansion(t, origami, 10000, static_cast<std::uint64_t>(c.n));
    const auto fat = embedding::fatness_stats(t, m);

    const bool ok = report.ok() && miquel.ok() && o_xf_failures == 0 && fold.mismatches == 0 && expansion.ok();
    std::string text;
    if (format == "json") {
        json j = io::verify_to_json(report);
        j["ok"] = ok;
        j["embedding_ok"] = report.ok();
        j["origami_xf"] = {{"checked", o_xf_checked}, {"failures", o_xf_failures}};
        j["miquel"] = io::miquel_to_json(miquel);
        j["fold"] = {{"exact", exact_fold}, {"compared", fold.compared}, {"mismatches", fold.mismatches}, {"max_error", fold.max_error}};
        j["non_expansion"] = {{"pairs", expansion.pairs}, {"violations", expansion.violations}, {"max_ratio", expansion.max_ratio}};
        j["fatness"] = io::fatness_to_json(fat);
        text = j.dump(1) + "\n";
    } else {
        std::ostringstream out;
        out << "verify T_" << c.n << "\n";
        out << "  " << pass(report.degenerate_edges == 0) << " edges nondegenerate (" << report.edges_checked << ")\n";
        out << "  " << pass(report.nonconvex_faces == 0 && report.misoriented_faces == 0)
            << " faces strictly convex, counterclockwise (" << report.faces_checked << ")\n";
        out << "  " << pass(report.max_angle_deviation <= 1e-9) << " angle condition at " << report.angle_vertices
            << " vertices, max deviation " << io::format_double(report.max_angle_deviation) << "\n";
        out << "  " << pass(report.xf_failures == 0) << " X_f identity for T (" << report.xf_checked << " faces)\n";
        out << "  " << pass(o_xf_failures == 0) << " X_f identity for O (" << o_xf_checked << " faces)\n";
        out << "  " << pass(miquel.ok()) << " Miquel step to T_" << c.n + 1 << " (" << miquel.renewed << " renewed, "
            << miquel.carried << " carried)\n";
        out << "  " << pass(fold.mismatches == 0) << " fold of T_" << c.n << " equals O_" << c.n << " ("
            << (exact_fold ? "exact" : "float") << ", max error " << io::format_double(fold.max_error) << ")\n";
        out << "  " << pass(expansion.ok()) << " origami non-expansion on " << expansion.pairs << " pairs (max ratio "
            << io::format_double(expansion.max_ratio) << ")\n";
        out << "  info fatness: min inradius/diameter " << io::format_double(fat.min_ratio) << ", near circle "
            << io::format_double(fat.min_ratio_annulus) << " over " << fat.annulus_faces << " faces\n";
        for (const auto& f : report.findings) out << "  finding: " << f << "\n";
        for (const auto& f : miquel.findings) out << "  finding: " << f << "\n";
        for (const auto& f : expansion.findings) out << "  finding: " << f << "\n";
        out << (ok ? "all checks passed\n" : "verification FAILED\n");
        text = out.str();
    }
    io::write_text(c.out, text);
    return ok ? kExitOk : kExitVerification;
}

// --- continuum --------------------------------------------------------------

int run_continuum(const Options& o) {
    const Common& c = o.common;
    const std::string format = c.format.empty() ? "table" : c.format;
    if (o.x.has_value() != o.y.has_value()) throw ArgumentError("--x and --y go together");

    if (format == "obj") {
        continuum::GridSpec grid;
        if (c.n >= 0) grid.n = c.n;
        if (o.stride >= 0) grid.stride = o.stride;
        const auto sample = continuum::sample_surface(grid);
        std::ostringstream out;
        out << "# aztec-lab continuum surface\n# n " << grid.n << "\n# stride " << grid.stride << "\n# mode float\n";
        out << "o surface\n";
        for (const auto& p : sample.points) {
            out << "v " << io::format_double(p.z.real()) << " " << io::format_double(p.z.imag()) << " "
                << io::format_double(p.theta) << "\n";
        }
        out << "o contour\n";
        std::size_t base = sample.points.size() + 1;
        for (const auto& seg : sample.contour) {
            for (const auto& [z, theta] : seg) {
                out << "v " << io::format_double(z.real()) << " " << io::format_double(z.imag()) << " "
                    << io::format_double(theta) << "\n";
            }
            out << "l";
            for (std::size_t i = 0; i < seg.size(); ++i) out << " " << base + i;
            out << "\n";
            base += seg.size();
        }
        io::write_text(c.out, out.str());
        return kExitOk;
    }

    if (o.x) {
        const auto p = continuum::PlanePoint::at(*o.x, *o.y);
        json j{{"x", p.x}, {"y", p.y}, {"region", continuum::to_string(p.region)}};
        if (p.region != continuum::Region::Boundary) {
            const auto s = continuum::surface_map(p);
            j["z"] = {s.z.real(), s.z.imag()};
            j["theta"] = s.theta;
        }
        if (p.region == continuum::Region::Liquid) {
            const auto zeta = continuum::map_zeta(p);
            const auto h = continuum::arc_measures(zeta);
            const auto w = continuum::wirtinger(zeta);
            j["zeta"] = {zeta.real(), zeta.imag()};
            j["harmonic_measures"] = {{"E", h[0]}, {"N", h[1]}, {"W", h[2]}, {"S", h[3]}};
            j["conformal_residual"] = std::abs(w.residual);
        }
        const double r = std::hypot(p.x, p.y);
        if (std::abs(r - std::sqrt(0.5)) >= 1e-6 && !(r > std::sqrt(0.5) && std::abs(p.x - 0.5) < 1e-6)) {
            j["psiE"] = continuum::psiE_oracle(p.x, p.y);
        }
        std::string text;
        if (format == "json") {
            text = j.dump(1) + "\n";
        } else {
            std::ostringstream out;
            for (auto it = j.begin(); it != j.end(); ++it) out << "  " << it.key() << ": " << it.value().dump() << "\n";
            text = out.str();
        }
        io::write_text(c.out, text);
        return kExitOk;
    }

    const auto r = continuum::check_identities();
    std::string text;
    if (format == "json") {
        text = json{{"schema", io::kSchema},
                    {"kind", "continuum"},
                    {"max_conformal_residual", r.max_conformal_residual},
                    {"max_measure_sum_error", r.max_measure_sum_error},
                    {"hm_east_at_axis", r.hm_east_at_axis},
                    {"psiE_origin", r.psiE_origin},
                    {"max_psiE_hm_gap", r.max_psiE_hm_gap},
                    {"random_points", r.random_points},
                    {"contour_exact", r.contour_exact},
                    {"ok", r.ok()}}
                   .dump(1) +
               "\n";
    } else {
        std::ostringstream out;
        out << "continuum identities\n"
            << "  " << pass(r.max_conformal_residual <= 1e-12) << " conformal residual " << io::format_double(r.max_conformal_residual) << "\n"
            << "  " << pass(r.max_measure_sum_error <= 1e-14) << " harmonic measures sum to 1, max error " << io::format_double(r.max_measure_sum_error) << "\n"
            << "  " << pass(std::abs(r.hm_east_at_axis - 0.5) <= 1e-14) << " hm_E(sqrt2-1) = " << io::format_double(r.hm_east_at_axis) << "\n"
            << "  " << pass(std::abs(r.psiE_origin - 0.25) <= 1e-8) << " psiE(0,0) = " << io::format_double(r.psiE_origin) << "\n"
            << "  " << pass(r.max_psiE_hm_gap <= 1e-6) << " psiE vs hm_E on " << r.random_points << " points, max gap " << io::format_double(r.max_psiE_hm_gap) << "\n"
            << "  " << pass(r.contour_exact) << " contour vertices\n";
        text = out.str();
    }
    io::write_text(c.out, text);
    return r.ok() ? kExitOk : kExitVerification;
}

// --- converge ---------------------------------------------------------------

std::vector<int> parse_n_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::logic_error&) {
            throw ArgumentError("bad --n-list entry '" + item + "'");
        }
    }
    return out;
}

int run_converge(const Options& o) {
    const Common& c = o.common;
    const std::string format = c.format.empty() ? "table" : c.format;
    if (!c.exact()) throw ArgumentError("converge runs the exact solver only");
    const auto n_list = parse_n_list(o.n_list);
    if (!n_list.empty()) gate_size(c, n_list.back(), 6);
    const auto opts = c.solver();

    std::vector<convergence::ConvergenceReport> reports;
    if (o.check == "f0" || o.check == "all") reports.push_back(convergence::check_f0_decay(n_list, opts));
    if (o.check == "fE" || o.check == "all") reports.push_back(convergence::check_fE_limit(n_list, o.band, opts));
    if (o.check == "embedding" || o.check == "all") reports.push_back(convergence::check_embedding_limit(n_list, o.band, opts));

    bool ok = true;
    std::string text;
    json arr = json::array();
    for (const auto& r : reports) {
        ok = ok && r.ok();
        arr.push_back(io::convergence_to_json(r));
        text += convergence::format_report(r);
    }
    if (format == "json") text = json{{"schema", io::kSchema}, {"kind", "convergence-set"}, {"ok", ok}, {"reports", arr}}.dump(1) + "\n";
    else text += ok ? "all tables decreasing\n" : "convergence check FAILED\n";
    io::write_text(c.out, text);
    return ok ? kExitOk : kExitVerification;
}

// --- render -----------------------------------------------------------------

int run_render(const Options& o) {
    const Common& c = o.common;
    render::RenderSpec spec;
    spec.target = render::parse_target(o.target);
    spec.n = c.n;
    spec.r_red = o.r_red;
    spec.r_blue = o.r_blue;
    if (o.stride >= 0) spec.stride = o.stride;
    spec.arctic = o.arctic;
    spec.overlay_continuum = o.overlay;
    spec.out = c.out;
    spec.validate();
    const std::string want = spec.target == render::Target::SurfaceMesh ? "obj" : "svg";
    if (!c.format.empty() && c.format != want) {
        throw ArgumentError(std::string("target ") + render::to_string(spec.target) + " writes " + want);
    }
    gate_size(c, c.n, 8);
    const auto opts = c.solver();

    std::string text;
    switch (spec.target) {
        case render::Target::EmbeddingSvg:
            text = render::render_svg(embedding::build_t_embedding(c.n, opts), embedding::build_combinatorial_map(c.n), spec);
            break;
        case render::Target::OrigamiSvg:
            text = render::render_svg(embedding::build_origami(c.n, opts), embedding::build_combinatorial_map(c.n), spec);
            break;
        case render::Target::SurfaceMesh:
            text = render::render_surface(embedding::build_t_embedding(c.n, opts),
                                          embedding::origami_prime(embedding::build_origami(c.n, opts)), spec);
            break;
        case render::Target::GridImage:
            text = render::render_grid_image(embedding::build_t_embedding(c.n, opts), spec);
            break;
    }
    io::write_text(c.out, text);
    return kExitOk;
}

}  // namespace

std::size_t parse_byte_size(const std::string& text) {
    if (text.empty()) throw ArgumentError("empty byte size");
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(text, &used);
    } catch (const std::logic_error&) {
        throw ArgumentError("bad byte size '" + text + "'");
    }
    const std::string suffix = text.substr(used);
    int shift = 0;
    if (suffix.empty()) shift = 0;
    else if (suffix == "K" || suffix == "k") shift = 10;
    else if (suffix == "M" || suffix == "m") shift = 20;
    else if (suffix == "G" || suffix == "g") shift = 30;
    else if (suffix == "T" || suffix == "t") shift = 40;
    else throw ArgumentError("bad byte size suffix '" + suffix + "'");
    if (shift && value > (~0ull >> shift)) throw ArgumentError("byte size '" + text + "' overflows");
    return static_cast<std::size_t>(value << shift);
}

int cli_run(const std::vector<std::string>& args) {
    CLI::App app{"Exact wave-equation lab for t-embeddings of the Aztec diamond", "aztec_lab"};
    app.require_subcommand(1);
    Options o;
    Common& c = o.common;

    auto* wave_cmd = app.add_subcommand("wave", "Solve the discrete wave equation and export a slice");
    add_common(wave_cmd, c, true, {"json", "csv"});
    wave_cmd->add_option("--field", o.field, "cone or fundamental")->check(CLI::IsMember({"cone", "fundamental"}));
    wave_cmd->add_option("--bc", o.bc, "Cone data b0;bE,bN,bW,bS");
    wave_cmd->add_flag("--all", o.all_slices, "Export every slice up to n");

    auto* embed_cmd = app.add_subcommand("embed", "Build T_n, O_n or O'_n");
    add_common(embed_cmd, c, true, {"json", "csv"});
    embed_cmd->add_option("--kind", o.kind, "T, O or Oprime")->check(CLI::IsMember({"T", "O", "Oprime"}));

    auto* fold_cmd = app.add_subcommand("fold", "Fold T_n into an origami map and compare with O_n");
    add_common(fold_cmd, c, true, {"json", "table"});
    fold_cmd->add_option("--tolerance", o.tolerance, "Float mode gluing tolerance");

    auto* verify_cmd = app.add_subcommand("verify", "Check the t-embedding invariants of T_n");
    add_common(verify_cmd, c, true, {"json", "table"});
    verify_cmd->add_option("--tolerance", o.tolerance, "Float fold tolerance");

    auto* cont_cmd = app.add_subcommand("continuum", "Closed-form continuum objects");
    add_common(cont_cmd, c, false, {"json", "table", "obj"});
    cont_cmd->add_option("--x", o.x, "Point x");
    cont_cmd->add_option("--y", o.y, "Point y");
    cont_cmd->add_option("--stride", o.stride, "Sampling stride for obj output");

    auto* conv_cmd = app.add_subcommand("converge", "Convergence tables against the continuum limits");
    add_common(conv_cmd, c, false, {"json", "table"});
    conv_cmd->add_option("--check", o.check, "f0, fE, embedding or all")->check(CLI::IsMember({"f0", "fE", "embedding", "all"}));
    conv_cmd->add_option("--n-list", o.n_list, "Ascending comma-separated sizes");
    conv_cmd->add_option("--band", o.band, "Distance kept from the discontinuity set");

    auto* render_cmd = app.add_subcommand("render", "Render figures as SVG or OBJ");
    add_common(render_cmd, c, true, {"svg", "obj"});
    render_cmd->add_option("--target", o.target, "embedding-svg, origami-svg, surface-mesh or grid-image");
    render_cmd->add_option("--stride", o.stride, "Sample stride");
    render_cmd->add_flag("--arctic", o.arctic, "Red/blue edge coloring");
    render_cmd->add_option("--r-red", o.r_red, "Red threshold, fraction of (n-1)^2");
    render_cmd->add_option("--r-blue", o.r_blue, "Blue threshold, fraction of (n-1)^2");
    render_cmd->add_flag("--overlay-continuum", o.overlay, "Add the continuum surface to the mesh");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitArgument;
    }

    try {
        if (*wave_cmd) return run_wave(o);
        if (*embed_cmd) return run_embed(o);
        if (*fold_cmd) return run_fold(o);
        if (*verify_cmd) return run_verify(o);
        if (*cont_cmd) return run_continuum(o);
        if (*conv_cmd) return run_converge(o);
        if (*render_cmd) return run_render(o);
    } catch (const IntegrityError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kExitVerification;
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return kExitResource;
    } catch (const OverflowError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::bad_alloc&) {
        std::cerr << "resource error: out of memory\n";
        return kExitResource;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitArgument;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitArgument;
    }
    return kExitArgument;
}

int cli_run(int argc, char** argv) { return cli_run(std::vector<std::string>(argv, argv + argc)); }

}  // namespace aztec
