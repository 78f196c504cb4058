#include "aztec/embedding.hpp"

#include "aztec/errors.hpp"

namespace aztec::embedding {

const char* to_string(Side s) {
    switch (s) {
        case Side::East: return "E";
        case Side::North: return "N";
        case Side::West: return "W";
        case Side::South: return "S";
    }
    return "?";
}

const char* to_string(EmbeddingKind k) { return k == EmbeddingKind::T ? "T" : "O"; }

std::string DualVertex::to_string() const {
    if (outer_) return std::string("v*") + embedding::to_string(side_);
    return "(" + std::to_string(j_) + "," + std::to_string(k_) + ")";
}

int dual_index(const DualVertex& v, int n) {
    const int side = 2 * n - 1;
    if (v.is_outer()) return side * side + static_cast<int>(v.side());
    if (!is_inner_face(v.j(), v.k(), n)) {
        throw ArgumentError("dual vertex " + v.to_string() + " is not a face of A'_" + std::to_string(n + 1));
    }
    return (v.j() + n - 1) * side + (v.k() + n - 1);
}

template <class V>
std::vector<DualVertex> DualField<V>::vertices() const {
    std::vector<DualVertex> out;
    for_each_inner([&](int j, int k, const V&) { out.push_back(DualVertex::inner(j, k)); });
    for (int s = 0; s < 4; ++s) out.push_back(DualVertex::outer(Side(s)));
    return out;
}

template class DualField<DyadicGaussian>;
template class DualField<RationalGaussian>;
template class DualField<Complex>;

std::array<DyadicGaussian, 4> outer_values(EmbeddingKind kind) {
    if (kind == EmbeddingKind::T) return {1, {0, 1}, -1, {0, -1}};
    return {1, {0, 1}, 1, {0, 1}};
}

wave::BoundaryConditions cone_bc(EmbeddingKind kind) {
    return kind == EmbeddingKind::T ? wave::temb_bc() : wave::origami_bc();
}

TEmbedding embedding_from_slices(EmbeddingKind kind, const wave::Slice<DyadicGaussian>& at_n,
                                 const wave::Slice<DyadicGaussian>& at_n_plus_1) {
    const int n = at_n.time();
    if (n < 1) throw ArgumentError("embedding needs n >= 1, got " + std::to_string(n));
    if (at_n_plus_1.time() != n + 1) throw ArgumentError("embedding_from_slices: slices must be at n and n+1");
    TEmbedding t{kind, DualField<DyadicGaussian>(n)};
    for (int j = -(n - 1); j <= n - 1; ++j) {
        const int kmax = n - 1 - std::abs(j);
        for (int k = -kmax; k <= kmax; ++k) {
            const bool odd = ((j + k + n) % 2 + 2) % 2 == 1;
            t.pos.inner(j, k) = odd ? at_n.value(j, k) : at_n_plus_1.value(j, k);
        }
    }
    const auto outer = outer_values(kind);
    for (int s = 0; s < 4; ++s) t.pos.outer(Side(s)) = outer[static_cast<std::size_t>(s)];
    return t;
}

TEmbedding build_embedding(EmbeddingKind kind, int n, const wave::SolverOptions& opts) {
    if (n < 1) throw ArgumentError("embedding needs n >= 1, got " + std::to_string(n));
    wave::ConeSolver<DyadicGaussian> solver(cone_bc(kind), opts);
    solver.advance_to(n + 1);
    return embedding_from_slices(kind, solver.previous(), solver.current());
}

TEmbedding build_t_embedding(int n, const wave::SolverOptions& opts) {
    return build_embedding(EmbeddingKind::T, n, opts);
}

TEmbedding build_origami(int n, const wave::SolverOptions& opts) {
    return build_embedding(EmbeddingKind::O, n, opts);
}

EmbeddingSequence::EmbeddingSequence(EmbeddingKind kind, const wave::SolverOptions& opts)
    : kind_(kind), solver_(cone_bc(kind), opts) {}

TEmbedding EmbeddingSequence::next() {
    do solver_.advance();
    while (solver_.time() < 2);
    return embedding_from_slices(kind_, solver_.previous(), solver_.current());
}

OrigamiPrime origami_prime(const TEmbedding& o) {
    if (o.kind != EmbeddingKind::O) throw ArgumentError("origami_prime needs an origami map (kind O)");
    const DyadicGaussian i(0, 1);
    const DyadicGaussian one_plus_i(1, 1);
    OrigamiPrime p{DualField<DyadicGaussian>(o.n())};
    for (const DualVertex& v : o.pos.vertices()) p.q[v] = i - one_plus_i * o.pos[v];
    return p;
}

}  // namespace aztec::embedding
