#pragma once

#include <string>

#include "aztec/embedding.hpp"

// SVG and mesh renderers. They read exported embeddings only.
namespace aztec::render {

enum class Target { EmbeddingSvg, OrigamiSvg, SurfaceMesh, GridImage };

const char* to_string(Target t);
/// Throws ArgumentError for an unknown name.
Target parse_target(const std::string& name);

struct RenderSpec {
    Target target = Target::EmbeddingSvg;
    int n = 26;
    /// Arctic thresholds as fractions of (n-1)^2: an edge is red when both
    /// endpoints have j^2+k^2 <= r_red (n-1)^2, blue when both are >= r_blue
    /// (n-1)^2, and omitted otherwise.
    double r_red = 0.49;
    double r_blue = 0.50;
    int stride = 8;
    bool arctic = false;
    bool overlay_continuum = false;
    std::string out = "-";

    /// Throws ArgumentError unless 0 < r_red < r_blue <= 1, stride >= 1, n >= 1.
    void validate() const;
};

/// Faces of `t` (kind T for embedding-svg, kind O for origami-svg) in the
/// view box [-1.05, 1.05]^2 with y pointing up.
std::string render_svg(const embedding::TEmbedding& t, const embedding::CombinatorialMap& m, const RenderSpec& spec);

/// Triangulated OBJ mesh of (Re T, Im T, -Re O') over j = s(a+b), k = s(a-b),
/// plus the contour polyline and optionally the continuum surface. The third
/// coordinate is -Re O', which tends to theta, so the mesh spans the contour.
/// Throws ArgumentError if n < stride.
std::string render_surface(const embedding::TEmbedding& t, const embedding::OrigamiPrime& q, const RenderSpec& spec);

/// The grid (j, k)/(n-1) with j, k in sZ and j+k in 2sZ (left) next to its
/// image under T_n (right).
std::string render_grid_image(const embedding::TEmbedding& t, const RenderSpec& spec);

struct MeshStats {
    std::size_t vertices = 0;
    std::size_t triangles = 0;
    double max_abs_height = 0.0;  // max |Re O'|
};

/// Counts of an OBJ document produced by render_surface (the first object).
MeshStats mesh_stats(const std::string& obj);

}  // namespace aztec::render
