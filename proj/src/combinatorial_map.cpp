#include <algorithm>
#include <unordered_map>

#include "aztec/embedding.hpp"
#include "aztec/errors.hpp"

namespace aztec::embedding {

namespace {

// Quarter turn (j,k) -> (-k,j); E -> N -> W -> S.
DualVertex rotate(const DualVertex& v, int quarter_turns) {
    DualVertex r = v;
    for (int t = 0; t < quarter_turns; ++t) {
        r = r.is_outer() ? DualVertex::outer(Side((static_cast<int>(r.side()) + 1) % 4))
                         : DualVertex::inner(-r.k(), r.j());
    }
    return r;
}

}  // namespace

std::string FaceOwner::to_string() const {
    switch (kind) {
        case Kind::WNE: return "w_NE";
        case Kind::BNW: return "b_NW";
        case Kind::WSW: return "w_SW";
        case Kind::BSE: return "b_SE";
        case Kind::Vertex: break;
    }
    return "(" + std::to_string(p2) + "/2," + std::to_string(q2) + "/2)";
}

CombinatorialMap::CombinatorialMap(int n, std::vector<Face> faces) : n_(n), faces_(std::move(faces)) {
    std::unordered_map<long long, int> edge_of;
    const long long count = dual_count(n);
    adjacency_.resize(faces_.size());
    incidence_.resize(static_cast<std::size_t>(count));
    for (int f = 0; f < static_cast<int>(faces_.size()); ++f) {
        const auto& cs = faces_[f].corners;
        for (std::size_t i = 0; i < cs.size(); ++i) {
            const DualVertex& a = cs[i];
            const DualVertex& b = cs[(i + 1) % cs.size()];
            const int ia = dual_index(a, n);
            const int ib = dual_index(b, n);
            incidence_[static_cast<std::size_t>(ia)].push_back(f);
            const long long key = std::min(ia, ib) * count + std::max(ia, ib);
            auto [it, inserted] = edge_of.try_emplace(key, static_cast<int>(edges_.size()));
            if (inserted) {
                edges_.push_back(DualEdge{a, b, {f, -1}});
            } else {
                DualEdge& e = edges_[static_cast<std::size_t>(it->second)];
                if (e.faces[1] != -1) {
                    throw IntegrityError("dual edge " + a.to_string() + "-" + b.to_string() +
                                         " belongs to more than two faces");
                }
                e.faces[1] = f;
                adjacency_[static_cast<std::size_t>(e.faces[0])].emplace_back(f, it->second);
                adjacency_[static_cast<std::size_t>(f)].emplace_back(e.faces[0], it->second);
            }
        }
    }
}

int CombinatorialMap::find(const FaceOwner& owner) const {
    for (int f = 0; f < static_cast<int>(faces_.size()); ++f)
        if (faces_[static_cast<std::size_t>(f)].owner == owner) return f;
    return -1;
}

std::vector<int> CombinatorialMap::faces_at(const DualVertex& v) const {
    return incidence_[static_cast<std::size_t>(dual_index(v, n_))];
}

CombinatorialMap build_combinatorial_map(int n) {
    if (n < 1) throw ArgumentError("combinatorial map needs n >= 1, got " + std::to_string(n));
    std::vector<Face> faces;

    // Half-integer vertices of A_{n-1}. Corners in counterclockwise order
    // SW, SE, NE, NW, skipping the one outside |j|+|k| < n on the boundary.
    for (int p2 = -(2 * n - 3); p2 <= 2 * n - 3; p2 += 2) {
        for (int q2 = -(2 * n - 3); q2 <= 2 * n - 3; q2 += 2) {
            if (std::abs(p2) + std::abs(q2) > 2 * n - 2) continue;
            Face face;
            face.owner = FaceOwner::vertex(p2, q2);
            const int parity = (((p2 + q2) / 2 - (n + 1)) % 2 + 2) % 2;
            face.color = parity == 0 ? FaceColor::Black : FaceColor::White;
            const int corners[4][2] = {{p2 - 1, q2 - 1}, {p2 + 1, q2 - 1}, {p2 + 1, q2 + 1}, {p2 - 1, q2 + 1}};
            for (const auto& c : corners) {
                const int j = c[0] / 2;
                const int k = c[1] / 2;
                if (is_inner_face(j, k, n)) face.corners.push_back(DualVertex::inner(j, k));
            }
            faces.push_back(std::move(face));
        }
    }

    // w_NE: E, N, then the north-east ring (0,n-1), ..., (n-1,0); the other
    // three boundary vertices are quarter turns of it.
    std::vector<DualVertex> ne{DualVertex::outer(Side::East), DualVertex::outer(Side::North)};
    for (int j = 0; j <= n - 1; ++j) ne.push_back(DualVertex::inner(j, n - 1 - j));
    const FaceOwner::Kind kinds[4] = {FaceOwner::Kind::WNE, FaceOwner::Kind::BNW, FaceOwner::Kind::WSW,
                                      FaceOwner::Kind::BSE};
    for (int t = 0; t < 4; ++t) {
        Face face;
        face.owner = FaceOwner::boundary(kinds[t]);
        face.color = t % 2 == 0 ? FaceColor::White : FaceColor::Black;
        for (const auto& v : ne) face.corners.push_back(rotate(v, t));
        faces.push_back(std::move(face));
    }
    return CombinatorialMap(n, std::move(faces));
}

}  // namespace aztec::embedding
