#include <doctest.h>

#include <cmath>
#include <numbers>
#include <regex>

#include "aztec/errors.hpp"
#include "aztec/render.hpp"

using namespace aztec;
using render::RenderSpec;
using render::Target;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t c = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++c;
    return c;
}

RenderSpec spec_for(Target t, int n) {
    RenderSpec s;
    s.target = t;
    s.n = n;
    return s;
}

}  // namespace

TEST_CASE("n = 1 renders the square with corners 1, i, -1, -i") {
    const auto svg = render::render_svg(embedding::build_t_embedding(1), embedding::build_combinatorial_map(1),
                                        spec_for(Target::EmbeddingSvg, 1));
    CHECK(svg.find("viewBox=\"-1.05 -1.05 2.1 2.1\"") != std::string::npos);
    CHECK(count(svg, "<polygon fill=") == 4);
    for (const char* corner : {"1,0", "0,1", "-1,0", "0,-1"}) CHECK(svg.find(corner) != std::string::npos);
    CHECK(count(svg, "fill=\"#000000\" points") == 2);
}

TEST_CASE("one polygon per face and deterministic output") {
    const int n = 26;
    const auto t = embedding::build_t_embedding(n);
    const auto m = embedding::build_combinatorial_map(n);
    const auto a = render::render_svg(t, m, spec_for(Target::EmbeddingSvg, n));
    const auto b = render::render_svg(t, m, spec_for(Target::EmbeddingSvg, n));
    CHECK(a == b);
    CHECK(count(a, "<polygon fill=") == m.faces().size());
    CHECK(a.find("collapsed") == std::string::npos);
}

TEST_CASE("arctic coloring follows the threshold rule") {
    const int n = 41;
    const auto t = embedding::build_t_embedding(n);
    const auto m = embedding::build_combinatorial_map(n);
    auto spec = spec_for(Target::EmbeddingSvg, n);
    spec.arctic = true;
    const auto svg = render::render_svg(t, m, spec);
    const double scale = double(n - 1) * (n - 1);
    std::size_t red = 0, blue = 0;
    for (const auto& e : m.edges()) {
        auto r2 = [](const embedding::DualVertex& v) {
            return v.is_outer() ? 1e300 : double(v.j()) * v.j() + double(v.k()) * v.k();
        };
        if (r2(e.a) <= 0.49 * scale && r2(e.b) <= 0.49 * scale) ++red;
        if (r2(e.a) >= 0.50 * scale && r2(e.b) >= 0.50 * scale) ++blue;
    }
    const auto red_start = svg.find("#d62728");
    const auto blue_start = svg.find("#1f5fd6");
    REQUIRE(red_start < blue_start);
    CHECK(count(svg.substr(red_start, blue_start - red_start), "<line") == red);
    CHECK(count(svg.substr(blue_start), "<line") == blue);
    CHECK(red > 0);
    CHECK(blue > 0);
}

TEST_CASE("origami SVG needs the origami map") {
    const auto m = embedding::build_combinatorial_map(5);
    CHECK_THROWS_AS(render::render_svg(embedding::build_t_embedding(5), m, spec_for(Target::OrigamiSvg, 5)),
                    ArgumentError);
    const auto svg = render::render_svg(embedding::build_origami(5), m, spec_for(Target::OrigamiSvg, 5));
    CHECK(count(svg, "<polygon fill=") == m.faces().size());
    CHECK(svg.find("fill-opacity=\"0.35\"") != std::string::npos);
}

TEST_CASE("surface mesh") {
    const int n = 61;
    auto spec = spec_for(Target::SurfaceMesh, n);
    spec.stride = 4;
    spec.overlay_continuum = true;
    const auto t = embedding::build_t_embedding(n);
    const auto q = embedding::origami_prime(embedding::build_origami(n));
    const auto obj = render::render_surface(t, q, spec);
    CHECK(obj.find("# n 61\n# stride 4\n# mode exact\n") != std::string::npos);
    const auto st = render::mesh_stats(obj);
    const std::size_t side = 2 * ((n - 1) / 8) + 1;
    CHECK(st.vertices == side * side);
    CHECK(st.triangles == 2 * (side - 1) * (side - 1));
    CHECK(st.max_abs_height <= std::numbers::sqrt2 / 2 + 1e-9);
    CHECK(obj.find("o contour\nv 1 0 0.707106781\n") != std::string::npos);
    CHECK(obj.find("o continuum") != std::string::npos);
    CHECK(count(obj, "\nf ") == 2 * st.triangles);

    auto small = spec_for(Target::SurfaceMesh, 4);
    small.stride = 8;
    CHECK_THROWS_AS(render::render_surface(embedding::build_t_embedding(4),
                                           embedding::origami_prime(embedding::build_origami(4)), small),
                    ArgumentError);
}

TEST_CASE("grid image") {
    auto spec = spec_for(Target::GridImage, 33);
    spec.stride = 4;
    const auto svg = render::render_grid_image(embedding::build_t_embedding(33), spec);
    // j = 4a, k = 4b with |a| + |b| <= 8 even: 1 + 8 + 16 + 24 + 32 points per panel.
    CHECK(count(svg, "<circle") == 2 * 81);
}

TEST_CASE("spec validation") {
    RenderSpec s;
    s.r_red = 0.6;
    CHECK_THROWS_AS(s.validate(), ArgumentError);
    s = RenderSpec{};
    s.stride = 0;
    CHECK_THROWS_AS(s.validate(), ArgumentError);
    s = RenderSpec{};
    s.r_blue = 1.5;
    CHECK_THROWS_AS(s.validate(), ArgumentError);
    CHECK(render::parse_target("surface-mesh") == Target::SurfaceMesh);
    CHECK_THROWS_AS(render::parse_target("png"), ArgumentError);
    const auto m = embedding::build_combinatorial_map(3);
    CHECK_THROWS_AS(render::render_svg(embedding::build_t_embedding(3), m, spec_for(Target::EmbeddingSvg, 4)),
                    ArgumentError);
}
