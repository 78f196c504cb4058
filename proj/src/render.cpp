#include "aztec/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "aztec/continuum.hpp"
#include "aztec/errors.hpp"

namespace aztec::render {

namespace {

using embedding::Complex;
using embedding::DualVertex;
using embedding::FaceColor;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string point(Complex z) { return num(z.real()) + "," + num(z.imag()); }

void svg_open(std::ostringstream& out, const std::string& view_box, const std::string& title) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << view_box
        << "\" width=\"800\" height=\"800\">\n"
        << "<title>" << title << "</title>\n"
        << "<rect x=\"-100\" y=\"-100\" width=\"200\" height=\"200\" fill=\"white\"/>\n";
}

double signed_area(const std::vector<Complex>& poly) {
    double a = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Complex p = poly[i], q = poly[(i + 1) % poly.size()];
        a += p.real() * q.imag() - p.imag() * q.real();
    }
    return a / 2;
}

// Squared radius j^2+k^2 of a dual vertex; outer vertices count as far out.
double radius2(const DualVertex& v) {
    if (v.is_outer()) return std::numeric_limits<double>::infinity();
    return double(v.j()) * v.j() + double(v.k()) * v.k();
}

void validate_target(const embedding::TEmbedding& t, const RenderSpec& spec, embedding::EmbeddingKind want) {
    spec.validate();
    if (t.n() != spec.n) throw ArgumentError("render: embedding has n=" + std::to_string(t.n()) + ", spec has n=" + std::to_string(spec.n));
    if (t.kind != want) throw ArgumentError(std::string("render: ") + to_string(spec.target) + " needs a " + embedding::to_string(want) + " embedding");
}

}  // namespace

const char* to_string(Target t) {
    switch (t) {
        case Target::EmbeddingSvg: return "embedding-svg";
        case Target::OrigamiSvg: return "origami-svg";
        case Target::SurfaceMesh: return "surface-mesh";
        case Target::GridImage: return "grid-image";
    }
    return "?";
}

Target parse_target(const std::string& name) {
    for (Target t : {Target::EmbeddingSvg, Target::OrigamiSvg, Target::SurfaceMesh, Target::GridImage}) {
        if (name == to_string(t)) return t;
    }
    throw ArgumentError("unknown render target '" + name + "'");
}

void RenderSpec::validate() const {
    if (n < 1) throw ArgumentError("render: n must be >= 1");
    if (!(r_red > 0 && r_red < r_blue && r_blue <= 1)) throw ArgumentError("render: need 0 < r_red < r_blue <= 1");
    if (stride < 1) throw ArgumentError("render: stride must be >= 1");
}

std::string render_svg(const embedding::TEmbedding& t, const embedding::CombinatorialMap& m, const RenderSpec& spec) {
    const bool origami = spec.target == Target::OrigamiSvg;
    if (!origami && spec.target != Target::EmbeddingSvg) throw ArgumentError("render_svg: target must be an SVG of faces");
    validate_target(t, spec, origami ? embedding::EmbeddingKind::O : embedding::EmbeddingKind::T);
    if (m.n() != t.n()) throw ArgumentError("render_svg: map and embedding disagree on n");

    std::ostringstream out;
    svg_open(out, "-1.05 -1.05 2.1 2.1", std::string(origami ? "O_" : "T_") + std::to_string(t.n()));
    const double width = 0.004 / std::sqrt(double(t.n()));

    std::size_t collapsed = 0;
    std::ostringstream body;
    if (spec.arctic && !origami) {
        const double scale = double(spec.n - 1) * (spec.n - 1);
        const double red = spec.r_red * scale, blue = spec.r_blue * scale;
        std::ostringstream reds, blues;
        for (const auto& e : m.edges()) {
            const double ra = radius2(e.a), rb = radius2(e.b);
            std::ostringstream* dst = nullptr;
            if (ra <= red && rb <= red) dst = &reds;
            else if (ra >= blue && rb >= blue) dst = &blues;
            if (!dst) continue;
            const Complex a = t.to_complex(e.a), b = t.to_complex(e.b);
            *dst << "<line x1=\"" << num(a.real()) << "\" y1=\"" << num(a.imag()) << "\" x2=\"" << num(b.real())
                 << "\" y2=\"" << num(b.imag()) << "\"/>\n";
        }
        body << "<g stroke=\"#d62728\" stroke-width=\"" << num(width) << "\" stroke-linecap=\"round\">\n"
             << reds.str() << "</g>\n";
        body << "<g stroke=\"#1f5fd6\" stroke-width=\"" << num(width) << "\" stroke-linecap=\"round\">\n"
             << blues.str() << "</g>\n";
    } else {
        const char* opacity = origami ? "0.35" : "1";
        body << "<g stroke=\"#000000\" stroke-width=\"" << num(width) << "\" stroke-linejoin=\"round\" fill-opacity=\""
             << opacity << "\">\n";
        std::vector<Complex> poly;
        for (const auto& f : m.faces()) {
            poly.clear();
            for (const auto& c : f.corners) poly.push_back(t.to_complex(c));
            if (!origami && !(signed_area(poly) > 0)) ++collapsed;
            body << "<polygon fill=\"" << (f.color == FaceColor::Black ? "#000000" : "#ffffff") << "\" points=\"";
            for (std::size_t i = 0; i < poly.size(); ++i) body << (i ? " " : "") << point(poly[i]);
            body << "\"/>\n";
        }
        body << "</g>\n";
    }
    out << "<!-- n=" << t.n() << " target=" << to_string(spec.target) << " mode=" << (spec.arctic ? "arctic" : "faces");
    if (spec.arctic) out << " r_red=" << num(spec.r_red) << " r_blue=" << num(spec.r_blue);
    out << " -->\n";
    if (collapsed) out << "<!-- faces collapsed in double precision: " << collapsed << " -->\n";
    out << "<g transform=\"scale(1,-1)\">\n" << body.str() << "</g>\n</svg>\n";
    return out.str();
}

std::string render_surface(const embedding::TEmbedding& t, const embedding::OrigamiPrime& q, const RenderSpec& spec) {
    validate_target(t, spec, embedding::EmbeddingKind::T);
    if (q.n() != t.n()) throw ArgumentError("render_surface: T and O' disagree on n");
    const int n = t.n(), s = spec.stride;
    if (n < s) throw ArgumentError("render_surface: n=" + std::to_string(n) + " is below the stride " + std::to_string(s));
    // |j|+|k| = 2s max(|a|,|b|) < n
    const int half = (n - 1) / (2 * s);
    const int side = 2 * half + 1;
    auto index = [&](int a, int b) { return (a + half) * side + (b + half) + 1; };

    std::ostringstream out;
    out << "# aztec-lab surface mesh\n"
        << "# n " << n << "\n# stride " << s << "\n# mode exact\n"
        << "# vertices (Re T, Im T, -Re O') at j = s(a+b), k = s(a-b)\n";
    out << "o discrete\n";
    for (int a = -half; a <= half; ++a) {
        for (int b = -half; b <= half; ++b) {
            const int j = s * (a + b), k = s * (a - b);
            const Complex z = t.to_complex(DualVertex::inner(j, k));
            const double h = -q.value(DualVertex::inner(j, k)).real();
            out << "v " << num(z.real()) << " " << num(z.imag()) << " " << num(h) << "\n";
        }
    }
    auto triangles = [&](int offset) {
        for (int a = -half; a < half; ++a) {
            for (int b = -half; b < half; ++b) {
                const int p = index(a, b) + offset, r = index(a + 1, b) + offset;
                const int u = index(a + 1, b + 1) + offset, w = index(a, b + 1) + offset;
                out << "f " << p << " " << r << " " << u << "\n";
                out << "f " << p << " " << u << " " << w << "\n";
            }
        }
    };
    triangles(0);
    int next = side * side + 1;

    out << "o contour\n";
    const auto corners = continuum::contour_vertices();
    for (const auto& [z, theta] : corners) out << "v " << num(z.real()) << " " << num(z.imag()) << " " << num(theta) << "\n";
    out << "l " << next << " " << next + 1 << " " << next + 2 << " " << next + 3 << " " << next << "\n";
    next += 4;

    if (spec.overlay_continuum) {
        out << "o continuum\n";
        for (int a = -half; a <= half; ++a) {
            for (int b = -half; b <= half; ++b) {
                double x = double(s * (a + b)) / n, y = double(s * (a - b)) / n;
                if (continuum::classify(x, y) == continuum::Region::Boundary) {
                    x *= 1 - 1e-12;
                    y *= 1 - 1e-12;
                }
                const auto p = continuum::surface_map(continuum::PlanePoint::at(x, y));
                out << "v " << num(p.z.real()) << " " << num(p.z.imag()) << " " << num(p.theta) << "\n";
            }
        }
        triangles(next - 1);
    }
    return out.str();
}

std::string render_grid_image(const embedding::TEmbedding& t, const RenderSpec& spec) {
    validate_target(t, spec, embedding::EmbeddingKind::T);
    const int n = t.n(), s = spec.stride;
    if (n < 2) throw ArgumentError("render_grid_image needs n >= 2");
    const double scale = n - 1;
    const double red = spec.r_red * scale * scale, blue = spec.r_blue * scale * scale;
    const double dot = 0.006;

    std::ostringstream left, right;
    for (int j = -((n - 1) / s) * s; j <= n - 1; j += s) {
        for (int k = -((n - 1) / s) * s; k <= n - 1; k += s) {
            if (((j + k) / s) % 2 != 0 || std::abs(j) + std::abs(k) >= n) continue;
            const double r2 = double(j) * j + double(k) * k;
            const char* colour = r2 <= red ? "#d62728" : r2 >= blue ? "#1f5fd6" : "#bbbbbb";
            const Complex z = t.to_complex(DualVertex::inner(j, k));
            left << "<circle cx=\"" << num(j / scale) << "\" cy=\"" << num(k / scale) << "\" r=\"" << num(dot)
                 << "\" fill=\"" << colour << "\"/>\n";
            right << "<circle cx=\"" << num(z.real()) << "\" cy=\"" << num(z.imag()) << "\" r=\"" << num(dot)
                  << "\" fill=\"" << colour << "\"/>\n";
        }
    }
    std::ostringstream out;
    svg_open(out, "-1.05 -1.05 4.3 2.1", "grid and its image under T_" + std::to_string(n));
    out << "<!-- n=" << n << " stride=" << s << " target=grid-image -->\n";
    const char* frame = "<polygon points=\"1,0 0,1 -1,0 0,-1\" fill=\"none\" stroke=\"#000000\" stroke-width=\"0.003\"/>\n";
    out << "<g transform=\"scale(1,-1)\">\n" << frame << left.str() << "</g>\n";
    out << "<g transform=\"translate(2.2,0) scale(1,-1)\">\n" << frame << right.str() << "</g>\n</svg>\n";
    return out.str();
}

MeshStats mesh_stats(const std::string& obj) {
    MeshStats st;
    std::istringstream in(obj);
    std::string line;
    int objects = 0;
    while (std::getline(in, line)) {
        if (line.rfind("o ", 0) == 0 && ++objects > 1) break;
        if (line.rfind("v ", 0) == 0) {
            double x, y, h;
            if (std::sscanf(line.c_str(), "v %lf %lf %lf", &x, &y, &h) == 3) {
                ++st.vertices;
                st.max_abs_height = std::max(st.max_abs_height, std::abs(h));
            }
        } else if (line.rfind("f ", 0) == 0) {
            ++st.triangles;
        }
    }
    return st;
}

}  // namespace aztec::render
