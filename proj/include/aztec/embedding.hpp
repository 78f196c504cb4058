#pragma once

#include <array>
#include <compare>
#include <complex>
#include <cstdint>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "aztec/dyadic.hpp"
#include "aztec/wave.hpp"

// T-embeddings and origami maps of the reduced Aztec diamond A'_{n+1}.
//
// Dual vertices are the faces (j,k), |j|+|k| < n, of A'_{n+1} plus the four
// outer vertices v*_E, v*_N, v*_W, v*_S. Faces of the embedding correspond to
// vertices of A'_{n+1}: the half-integer vertices (p,q) with |p|+|q| <= n-1
// and the four boundary vertices w_NE, b_NW, w_SW, b_SE.
namespace aztec::embedding {

using Complex = std::complex<double>;

enum class Side { East = 0, North = 1, West = 2, South = 3 };

const char* to_string(Side s);

class DualVertex {
public:
    constexpr DualVertex() = default;
    static constexpr DualVertex inner(int j, int k) { return DualVertex(false, Side::East, j, k); }
    static constexpr DualVertex outer(Side s) { return DualVertex(true, s, 0, 0); }

    constexpr bool is_outer() const noexcept { return outer_; }
    constexpr Side side() const noexcept { return side_; }
    constexpr int j() const noexcept { return j_; }
    constexpr int k() const noexcept { return k_; }

    /// "(j,k)" or "v*E".
    std::string to_string() const;

    friend constexpr auto operator<=>(const DualVertex&, const DualVertex&) = default;

private:
    constexpr DualVertex(bool outer, Side s, int j, int k) : outer_(outer), side_(s), j_(j), k_(k) {}
    bool outer_ = false;
    Side side_ = Side::East;
    int j_ = 0;
    int k_ = 0;
};

/// Dense indexing of the dual vertices of A'_{n+1}.
inline int dual_count(int n) { return (2 * n - 1) * (2 * n - 1) + 4; }
inline bool is_inner_face(int j, int k, int n) { return std::abs(j) + std::abs(k) < n; }
int dual_index(const DualVertex& v, int n);

/// A value per dual vertex of A'_{n+1}.
template <class V>
class DualField {
public:
    DualField() = default;
    explicit DualField(int n) : n_(n), values_(static_cast<std::size_t>(dual_count(n))) {}

    int n() const noexcept { return n_; }
    const V& operator[](const DualVertex& v) const { return values_[static_cast<std::size_t>(dual_index(v, n_))]; }
    V& operator[](const DualVertex& v) { return values_[static_cast<std::size_t>(dual_index(v, n_))]; }
    const V& inner(int j, int k) const { return (*this)[DualVertex::inner(j, k)]; }
    V& inner(int j, int k) { return (*this)[DualVertex::inner(j, k)]; }
    const V& outer(Side s) const { return (*this)[DualVertex::outer(s)]; }
    V& outer(Side s) { return (*this)[DualVertex::outer(s)]; }

    /// f(j, k, value) over |j|+|k| < n.
    template <class F>
    void for_each_inner(F&& f) const {
        for (int j = -(n_ - 1); j <= n_ - 1; ++j) {
            const int kmax = n_ - 1 - std::abs(j);
            for (int k = -kmax; k <= kmax; ++k) f(j, k, inner(j, k));
        }
    }

    /// All dual vertices: inner ones in (j, k) order, then E, N, W, S.
    std::vector<DualVertex> vertices() const;

    friend bool operator==(const DualField& a, const DualField& b) {
        if (a.n_ != b.n_) return false;
        bool same = true;
        a.for_each_inner([&](int j, int k, const V& v) { same = same && v == b.inner(j, k); });
        for (int s = 0; s < 4 && same; ++s) same = a.outer(Side(s)) == b.outer(Side(s));
        return same;
    }

private:
    int n_ = 0;
    std::vector<V> values_;
};

enum class EmbeddingKind { T, O };

const char* to_string(EmbeddingKind k);

/// T_n (kind T) or O_n (kind O) on the dual vertices of A'_{n+1}.
struct TEmbedding {
    EmbeddingKind kind = EmbeddingKind::T;
    DualField<DyadicGaussian> pos;

    int n() const noexcept { return pos.n(); }
    const DyadicGaussian& operator[](const DualVertex& v) const { return pos[v]; }
    Complex to_complex(const DualVertex& v) const { return pos[v].to_complex(); }
};

/// O'_n = q / sqrt(2) with q = (1+i)((1+i)/2 - O_n) stored exactly.
struct OrigamiPrime {
    DualField<DyadicGaussian> q;

    int n() const noexcept { return q.n(); }
    Complex value(const DualVertex& v) const { return q[v].to_complex() / std::sqrt(2.0); }
};

/// Boundary values at E, N, W, S for each kind.
std::array<DyadicGaussian, 4> outer_values(EmbeddingKind kind);
wave::BoundaryConditions cone_bc(EmbeddingKind kind);

/// Assembles T_n / O_n from cone-solution slices at times n and n+1: (j,k)
/// reads time n when j+k+n is odd and time n+1 otherwise (the value renewed
/// by the last urban renewal step).
TEmbedding embedding_from_slices(EmbeddingKind kind, const wave::Slice<DyadicGaussian>& at_n,
                                 const wave::Slice<DyadicGaussian>& at_n_plus_1);

TEmbedding build_t_embedding(int n, const wave::SolverOptions& opts = {});
TEmbedding build_origami(int n, const wave::SolverOptions& opts = {});
TEmbedding build_embedding(EmbeddingKind kind, int n, const wave::SolverOptions& opts = {});

/// Yields T_1, T_2, ... (or O_n) from one incremental cone solve.
class EmbeddingSequence {
public:
    explicit EmbeddingSequence(EmbeddingKind kind, const wave::SolverOptions& opts = {});
    /// Advances to the next n and returns its embedding.
    TEmbedding next();
    int n() const noexcept { return solver_.time() - 1; }
    const wave::ConeSolver<DyadicGaussian>& solver() const noexcept { return solver_; }

private:
    EmbeddingKind kind_;
    wave::ConeSolver<DyadicGaussian> solver_;
};

/// Throws ArgumentError unless o.kind == O.
OrigamiPrime origami_prime(const TEmbedding& o);

// --- combinatorics ----------------------------------------------------------

enum class FaceColor { Black, White };

/// A vertex of A'_{n+1}: a half-integer point (stored doubled) or one of the
/// four boundary vertices.
struct FaceOwner {
    enum class Kind { Vertex, WNE, BNW, WSW, BSE };
    Kind kind = Kind::Vertex;
    int p2 = 0;  // 2p, odd
    int q2 = 0;  // 2q, odd

    static FaceOwner vertex(int p2, int q2) { return {Kind::Vertex, p2, q2}; }
    static FaceOwner boundary(Kind k) { return {k, 0, 0}; }
    std::string to_string() const;
    friend bool operator==(const FaceOwner&, const FaceOwner&) = default;
};

struct Face {
    FaceOwner owner;
    FaceColor color = FaceColor::White;
    std::vector<DualVertex> corners;  // counterclockwise in T_n
};

struct DualEdge {
    DualVertex a;
    DualVertex b;
    std::array<int, 2> faces{-1, -1};  // indices into CombinatorialMap::faces()
};

class CombinatorialMap {
public:
    CombinatorialMap(int n, std::vector<Face> faces);

    int n() const noexcept { return n_; }
    const std::vector<Face>& faces() const noexcept { return faces_; }
    const std::vector<DualEdge>& edges() const noexcept { return edges_; }
    /// Index of the face owned by `owner`, or -1.
    int find(const FaceOwner& owner) const;
    /// (neighbor face, edge index) pairs of a face.
    const std::vector<std::pair<int, int>>& neighbors(int face) const { return adjacency_[face]; }
    /// Faces with the dual vertex as a corner.
    std::vector<int> faces_at(const DualVertex& v) const;

private:
    int n_;
    std::vector<Face> faces_;
    std::vector<DualEdge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adjacency_;
    std::vector<std::vector<int>> incidence_;  // by dual_index
};

/// Faces of the embedding of A'_{n+1}; vertex (p,q) is black iff p+q = n+1 mod 2.
CombinatorialMap build_combinatorial_map(int n);

// --- origami fold -----------------------------------------------------------

/// Positions produced by the fold, one per dual vertex.
template <class V>
struct FoldMap {
    DualField<V> values;
    std::vector<bool> assigned;

    int n() const noexcept { return values.n(); }
    const V& operator[](const DualVertex& v) const { return values[v]; }
};

/// Builds the origami map of `t` by gluing faces breadth-first from w_NE:
/// white faces keep orientation, black faces are reflected. Exact rational
/// arithmetic. Throws IntegrityError naming the dual vertex when two faces
/// disagree.
FoldMap<RationalGaussian> origami_fold(const TEmbedding& t, const CombinatorialMap& m);
/// Same traversal in double precision; edge vectors are differenced exactly
/// before rounding. Gluing mismatches above `tolerance` throw IntegrityError.
FoldMap<Complex> origami_fold_float(const TEmbedding& t, const CombinatorialMap& m, double tolerance = 1e-9);

struct FoldComparison {
    std::size_t compared = 0;
    std::size_t mismatches = 0;  // exact: any difference; float: above tolerance
    double max_error = 0.0;
};

/// Fold positions against an origami map, vertex by vertex.
FoldComparison compare_fold(const FoldMap<RationalGaussian>& fold, const TEmbedding& o);
FoldComparison compare_fold(const FoldMap<Complex>& fold, const TEmbedding& o, double tolerance = 1e-9);

// --- diagnostics ------------------------------------------------------------

struct VerifyReport {
    int n = 0;
    std::size_t edges_checked = 0;
    std::size_t degenerate_edges = 0;
    std::size_t faces_checked = 0;
    std::size_t nonconvex_faces = 0;
    std::size_t misoriented_faces = 0;
    std::size_t angle_vertices = 0;
    double max_angle_deviation = 0.0;
    std::size_t xf_checked = 0;
    std::size_t xf_failures = 0;
    std::vector<std::string> findings;  // first few problems, human readable

    bool ok(double angle_tolerance = 1e-9) const {
        return degenerate_edges == 0 && nonconvex_faces == 0 && misoriented_faces == 0 && xf_failures == 0 &&
               max_angle_deviation <= angle_tolerance;
    }
};

/// Exact edge, convexity and X_f = 1 checks plus the floating-point angle
/// condition. Throws ArgumentError if t and m disagree on n.
VerifyReport verify_embedding(const TEmbedding& t, const CombinatorialMap& m, unsigned threads = 1);

/// (T(f)-T(f+e1))(T(f)-T(f-e1)) + (T(f)-T(f+e2))(T(f)-T(f-e2)) at an inner face.
DyadicGaussian xf_residual(const TEmbedding& t, int j, int k);

struct MiquelReport {
    int n = 0;                    // step n -> n+1
    std::size_t renewed = 0;      // faces with j+k+n odd, |j|+|k| < n
    std::size_t product_failures = 0;
    std::size_t carried = 0;
    std::size_t carry_failures = 0;  // T_{n+1} != T_n on the other parity
    std::vector<std::string> findings;

    bool ok() const { return product_failures == 0 && carry_failures == 0; }
};

/// Vieta product identity T_{n+1}(f) T_n(f) = (T_{n+1}(f+e1)T_{n+1}(f-e1) +
/// T_{n+1}(f+e2)T_{n+1}(f-e2)) / 2 at every renewed face.
MiquelReport check_miquel(const TEmbedding& t_n, const TEmbedding& t_next);

struct NonExpansionReport {
    int n = 0;
    std::size_t pairs = 0;
    std::size_t violations = 0;
    double max_ratio = 0.0;  // max |O(a)-O(b)| / |T(a)-T(b)|
    std::vector<std::string> findings;

    bool ok() const { return violations == 0; }
};

/// |O(a)-O(b)| <= |T(a)-T(b)| on `pairs` random pairs of distinct dual
/// vertices, compared exactly on squared norms.
NonExpansionReport check_non_expansion(const TEmbedding& t, const TEmbedding& o, std::size_t pairs,
                                       std::uint64_t seed);

struct FaceFatness {
    int face = -1;
    double inradius = 0.0;
    double diameter = 0.0;
    double ratio = 0.0;
};

struct FatnessStats {
    int n = 0;
    std::vector<FaceFatness> faces;
    double min_ratio = 0.0;
    double min_ratio_annulus = 0.0;  // faces with p^2+q^2 in [0.45 n^2, 0.55 n^2]; 0 if none
    std::size_t annulus_faces = 0;
    double min_inradius = 0.0;
};

FatnessStats fatness_stats(const TEmbedding& t, const CombinatorialMap& m);

/// Largest inscribed circle radius of a convex counterclockwise polygon.
double polygon_inradius(std::span<const Complex> ccw);
double polygon_diameter(std::span<const Complex> pts);

/// Angle at `v` inside a counterclockwise face, from the exact edge vectors.
double corner_angle(const DyadicGaussian& prev, const DyadicGaussian& v, const DyadicGaussian& next);
/// arg(z) of an exact value, immune to the magnitude of z.
double exact_arg(const DyadicGaussian& z);

}  // namespace aztec::embedding
