#include <algorithm>
#include <array>
#include <limits>
#include <cmath>
#include <mutex>
#include <numbers>
#include <random>

#include "aztec/embedding.hpp"
#include "aztec/errors.hpp"
#include "parallel.hpp"

namespace aztec::embedding {

namespace {

constexpr std::size_t kMaxFindings = 20;

void note(std::vector<std::string>& findings, std::string msg) {
    if (findings.size() < kMaxFindings) findings.push_back(std::move(msg));
}

std::size_t bit_length(const mpz_class& z) { return sgn(z) == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2); }

}  // namespace

double exact_arg(const DyadicGaussian& z) {
    if (z.is_zero()) return 0.0;
    const std::size_t len = std::max(bit_length(z.re_num()), bit_length(z.im_num()));
    const Complex w = DyadicGaussian::unnormalized(z.re_num(), z.im_num(), len).to_complex();
    return std::arg(w);
}

double corner_angle(const DyadicGaussian& prev, const DyadicGaussian& v, const DyadicGaussian& next) {
    const DyadicGaussian to_prev = prev - v;
    const DyadicGaussian to_next = next - v;
    double a = exact_arg(to_next.conj() * to_prev);
    if (a < 0) a += 2 * std::numbers::pi;
    return a;
}

DyadicGaussian xf_residual(const TEmbedding& t, int j, int k) {
    const DyadicGaussian& c = t.pos.inner(j, k);
    return (c - t.pos.inner(j + 1, k)) * (c - t.pos.inner(j - 1, k)) +
           (c - t.pos.inner(j, k + 1)) * (c - t.pos.inner(j, k - 1));
}

VerifyReport verify_embedding(const TEmbedding& t, const CombinatorialMap& m, unsigned threads) {
    const int n = t.n();
    if (m.n() != n) {
        throw ArgumentError("verify: embedding is for n=" + std::to_string(n) + " but map is for n=" +
                            std::to_string(m.n()));
    }
    VerifyReport r;
    r.n = n;
    std::mutex mu;

    const auto& edges = m.edges();
    r.edges_checked = edges.size();
    for (const auto& e : edges) {
        if (t[e.a] == t[e.b]) {
            ++r.degenerate_edges;
            note(r.findings, "degenerate edge " + e.a.to_string() + "-" + e.b.to_string());
        }
    }

    const auto& faces = m.faces();
    r.faces_checked = faces.size();
    detail::parallel_for(static_cast<int>(faces.size()), threads, [&](int begin, int end) {
        std::size_t nonconvex = 0;
        std::size_t misoriented = 0;
        std::vector<std::string> local;
        for (int f = begin; f < end; ++f) {
            const auto& cs = faces[static_cast<std::size_t>(f)].corners;
            const std::size_t sz = cs.size();
            int pos = 0;
            int neg = 0;
            double turning = 0.0;
            for (std::size_t i = 0; i < sz; ++i) {
                const DyadicGaussian d1 = t[cs[i]] - t[cs[(i + sz - 1) % sz]];
                const DyadicGaussian d2 = t[cs[(i + 1) % sz]] - t[cs[i]];
                const int s = cross(d1, d2).sign_re();
                pos += s > 0;
                neg += s < 0;
                turning += exact_arg(d1.conj() * d2);
            }
            const std::string name = faces[static_cast<std::size_t>(f)].owner.to_string();
            if (neg == static_cast<int>(sz)) {
                ++misoriented;
                local.push_back("face " + name + " is clockwise");
            } else if (pos != static_cast<int>(sz) || std::abs(turning - 2 * std::numbers::pi) > 1e-6) {
                ++nonconvex;
                local.push_back("face " + name + " is not strictly convex");
            }
        }
        std::lock_guard lock(mu);
        r.nonconvex_faces += nonconvex;
        r.misoriented_faces += misoriented;
        for (auto& s : local) note(r.findings, std::move(s));
    });

    // Angle condition at inner dual vertices: black and white angles each sum to pi.
    std::vector<DualVertex> inner;
    t.pos.for_each_inner([&](int j, int k, const DyadicGaussian&) { inner.push_back(DualVertex::inner(j, k)); });
    r.angle_vertices = inner.size();
    detail::parallel_for(static_cast<int>(inner.size()), threads, [&](int begin, int end) {
        double worst = 0.0;
        std::vector<std::string> local;
        for (int i = begin; i < end; ++i) {
            const DualVertex& v = inner[static_cast<std::size_t>(i)];
            double black = 0.0;
            double white = 0.0;
            for (int f : m.faces_at(v)) {
                const Face& face = faces[static_cast<std::size_t>(f)];
                const auto& cs = face.corners;
                const std::size_t sz = cs.size();
                const auto at = static_cast<std::size_t>(std::find(cs.begin(), cs.end(), v) - cs.begin());
                const double a = corner_angle(t[cs[(at + sz - 1) % sz]], t[v], t[cs[(at + 1) % sz]]);
                (face.color == FaceColor::Black ? black : white) += a;
            }
            const double dev = std::max(std::abs(black - std::numbers::pi), std::abs(white - std::numbers::pi));
            if (dev > 1e-9) {
                char buf[128];
                std::snprintf(buf, sizeof buf, "angle sums at %s: black %.12g white %.12g", v.to_string().c_str(),
                              black, white);
                local.emplace_back(buf);
            }
            worst = std::max(worst, dev);
        }
        std::lock_guard lock(mu);
        r.max_angle_deviation = std::max(r.max_angle_deviation, worst);
        for (auto& s : local) note(r.findings, std::move(s));
    });

    // X_f = 1 at faces whose four neighbors are all inner.
    for (int j = -(n - 2); j <= n - 2; ++j) {
        const int kmax = n - 2 - std::abs(j);
        for (int k = -kmax; k <= kmax; ++k) {
            ++r.xf_checked;
            if (!xf_residual(t, j, k).is_zero()) {
                ++r.xf_failures;
                note(r.findings, "X_f != 1 at " + DualVertex::inner(j, k).to_string());
            }
        }
    }
    return r;
}

MiquelReport check_miquel(const TEmbedding& t_n, const TEmbedding& t_next) {
    const int n = t_n.n();
    if (t_next.n() != n + 1) throw ArgumentError("check_miquel needs consecutive embeddings");
    if (t_n.kind != t_next.kind) throw ArgumentError("check_miquel needs embeddings of the same kind");
    MiquelReport r;
    r.n = n;
    const auto& a = t_next.pos;
    for (int j = -(n - 1); j <= n - 1; ++j) {
        const int kmax = n - 1 - std::abs(j);
        for (int k = -kmax; k <= kmax; ++k) {
            const std::string where = DualVertex::inner(j, k).to_string();
            if (((j + k + n) % 2 + 2) % 2 == 1) {
                ++r.renewed;
                const DyadicGaussian lhs = a.inner(j, k) * t_n.pos.inner(j, k);
                const DyadicGaussian rhs =
                    (a.inner(j + 1, k) * a.inner(j - 1, k) + a.inner(j, k + 1) * a.inner(j, k - 1)).halved();
                if (!(lhs == rhs)) {
                    ++r.product_failures;
                    note(r.findings, "product identity fails at " + where);
                }
            } else {
                ++r.carried;
                if (!(a.inner(j, k) == t_n.pos.inner(j, k))) {
                    ++r.carry_failures;
                    note(r.findings, "value changed on the carried parity at " + where);
                }
            }
        }
    }
    return r;
}

double polygon_diameter(std::span<const Complex> pts) {
    double best = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::max(best, std::abs(pts[i] - pts[j]));
    return best;
}

namespace {

// Signed distance to the nearest edge line; positive inside a CCW polygon.
double polygon_depth(std::span<const Complex> ccw, double x, double y) {
    const std::size_t sz = ccw.size();
    double d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < sz; ++i) {
        const Complex a = ccw[i];
        const Complex e = ccw[(i + 1) % sz] - a;
        const double len = std::abs(e);
        if (len == 0.0) continue;
        d = std::min(d, (e.real() * (y - a.imag()) - e.imag() * (x - a.real())) / len);
    }
    return d;
}

// The optimum is equidistant from three edge lines; try every triple.
double inradius_by_triples(std::span<const Complex> ccw) {
    const std::size_t sz = ccw.size();
    std::vector<std::array<double, 3>> lines;  // inward unit normal (nx, ny) and offset c
    for (std::size_t i = 0; i < sz; ++i) {
        const Complex e = ccw[(i + 1) % sz] - ccw[i];
        const double len = std::abs(e);
        if (len == 0.0) continue;
        const double nx = -e.imag() / len, ny = e.real() / len;
        lines.push_back({nx, ny, nx * ccw[i].real() + ny * ccw[i].imag()});
    }
    double best = 0.0;
    for (std::size_t a = 0; a < lines.size(); ++a)
        for (std::size_t b = a + 1; b < lines.size(); ++b)
            for (std::size_t c = b + 1; c < lines.size(); ++c) {
                // nx x + ny y - r = c_i for the three lines.
                const auto& A = lines[a];
                const auto& B = lines[b];
                const auto& C = lines[c];
                const double det = A[0] * (B[1] * -1 - -1 * C[1]) - A[1] * (B[0] * -1 - -1 * C[0]) +
                                   -1 * (B[0] * C[1] - B[1] * C[0]);
                if (std::abs(det) < 1e-14) continue;
                const double dx = A[2] * (B[1] * -1 - -1 * C[1]) - A[1] * (B[2] * -1 - -1 * C[2]) +
                                  -1 * (B[2] * C[1] - B[1] * C[2]);
                const double dy = A[0] * (B[2] * -1 - -1 * C[2]) - A[2] * (B[0] * -1 - -1 * C[0]) +
                                  -1 * (B[0] * C[2] - B[2] * C[0]);
                best = std::max(best, polygon_depth(ccw, dx / det, dy / det));
            }
    return best;
}

// Depth is concave; nested ternary search over the bounding box.
double inradius_by_search(std::span<const Complex> ccw) {
    double x0 = ccw[0].real(), x1 = x0, y0 = ccw[0].imag(), y1 = y0;
    for (const auto& p : ccw) {
        x0 = std::min(x0, p.real());
        x1 = std::max(x1, p.real());
        y0 = std::min(y0, p.imag());
        y1 = std::max(y1, p.imag());
    }
    auto best_in_column = [&](double x) {
        double lo = y0, hi = y1;
        for (int it = 0; it < 100; ++it) {
            const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
            if (polygon_depth(ccw, x, m1) < polygon_depth(ccw, x, m2)) lo = m1;
            else hi = m2;
        }
        return polygon_depth(ccw, x, 0.5 * (lo + hi));
    };
    double lo = x0, hi = x1;
    for (int it = 0; it < 100; ++it) {
        const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
        if (best_in_column(m1) < best_in_column(m2)) lo = m1;
        else hi = m2;
    }
    return std::max(0.0, best_in_column(0.5 * (lo + hi)));
}

}  // namespace

double polygon_inradius(std::span<const Complex> ccw) {
    if (ccw.size() < 3) return 0.0;
    return ccw.size() <= 8 ? inradius_by_triples(ccw) : inradius_by_search(ccw);
}

FatnessStats fatness_stats(const TEmbedding& t, const CombinatorialMap& m) {
    const int n = t.n();
    if (m.n() != n) throw ArgumentError("fatness: embedding and map disagree on n");
    FatnessStats s;
    s.n = n;
    s.min_ratio = std::numeric_limits<double>::infinity();
    s.min_inradius = std::numeric_limits<double>::infinity();
    double annulus = std::numeric_limits<double>::infinity();
    const auto& faces = m.faces();
    std::vector<Complex> pts;
    for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
        const Face& face = faces[static_cast<std::size_t>(f)];
        // Local coordinates relative to the first corner, scaled by a power of
        // two so tiny faces keep full precision.
        std::vector<DyadicGaussian> diffs;
        long long scale = std::numeric_limits<long long>::min();
        for (const auto& c : face.corners) {
            diffs.push_back(t[c] - t[face.corners[0]]);
            const auto& d = diffs.back();
            if (d.is_zero()) continue;
            const long long mag =
                static_cast<long long>(std::max(bit_length(d.re_num()), bit_length(d.im_num()))) -
                static_cast<long long>(d.exp());
            scale = std::max(scale, mag);
        }
        if (scale == std::numeric_limits<long long>::min()) scale = 0;
        pts.clear();
        for (const auto& d : diffs) pts.push_back(d.scaled_pow2(-scale).to_complex());
        FaceFatness ff;
        ff.face = f;
        ff.inradius = std::ldexp(polygon_inradius(pts), static_cast<int>(scale));
        ff.diameter = std::ldexp(polygon_diameter(pts), static_cast<int>(scale));
        ff.ratio = ff.diameter > 0 ? ff.inradius / ff.diameter : 0.0;
        s.min_ratio = std::min(s.min_ratio, ff.ratio);
        s.min_inradius = std::min(s.min_inradius, ff.inradius);
        if (face.owner.kind == FaceOwner::Kind::Vertex) {
            const double r2 = (double(face.owner.p2) * face.owner.p2 + double(face.owner.q2) * face.owner.q2) / 4.0;
            const double nn = double(n) * n;
            if (r2 >= 0.45 * nn && r2 <= 0.55 * nn) {
                ++s.annulus_faces;
                annulus = std::min(annulus, ff.ratio);
            }
        }
        s.faces.push_back(ff);
    }
    s.min_ratio_annulus = s.annulus_faces ? annulus : 0.0;
    return s;
}

NonExpansionReport check_non_expansion(const TEmbedding& t, const TEmbedding& o, std::size_t pairs,
                                       std::uint64_t seed) {
    if (t.n() != o.n()) throw ArgumentError("check_non_expansion: embeddings have different n");
    if (t.kind != EmbeddingKind::T || o.kind != EmbeddingKind::O) {
        throw ArgumentError("check_non_expansion needs a T embedding and an origami map");
    }
    NonExpansionReport r;
    r.n = t.n();
    const auto verts = t.pos.vertices();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, verts.size() - 1);
    for (std::size_t i = 0; i < pairs; ++i) {
        const DualVertex a = verts[pick(rng)];
        DualVertex b = verts[pick(rng)];
        while (b == a) b = verts[pick(rng)];
        ++r.pairs;
        const DyadicGaussian dt = (t[a] - t[b]).norm2();
        const DyadicGaussian d_o = (o[a] - o[b]).norm2();
        if ((d_o - dt).sign_re() > 0) {
            ++r.violations;
            note(r.findings, "origami expands between " + a.to_string() + " and " + b.to_string());
        }
        const double den = dt.to_complex().real();
        if (den > 0) r.max_ratio = std::max(r.max_ratio, std::sqrt(d_o.to_complex().real() / den));
    }
    return r;
}

}  // namespace aztec::embedding
