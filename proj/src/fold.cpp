#include <algorithm>
#include <cmath>
#include <deque>

#include "aztec/embedding.hpp"
#include "aztec/errors.hpp"

namespace aztec::embedding {

namespace {

struct ExactArith {
    using V = RationalGaussian;
    static V lift(const DyadicGaussian& d) { return V(d); }
    // conj(e)/e, or its inverse when `inverse` is set.
    static V ratio(const DyadicGaussian& e, bool inverse) {
        const DyadicGaussian num = inverse ? e * e : e.conj() * e.conj();
        return V(num) / V(e.norm2());
    }
    static V place(const V& rot, const DyadicGaussian& d, bool reflect) { return rot * V(reflect ? d.conj() : d); }
    static bool same(const V& a, const V& b, double) { return a == b; }
    static std::string show(const V& v) { return v.to_string(); }
};

struct FloatArith {
    using V = Complex;
    static V lift(const DyadicGaussian& d) { return d.to_complex(); }
    static V ratio(const DyadicGaussian& e, bool inverse) {
        const V unit = unit_of(e);
        return inverse ? unit * unit : std::conj(unit) * std::conj(unit);
    }
    static V place(const V& rot, const DyadicGaussian& d, bool reflect) {
        const V z = d.to_complex();
        return rot * (reflect ? std::conj(z) : z);
    }
    static bool same(const V& a, const V& b, double tol) { return std::abs(a - b) <= tol; }
    static std::string show(const V& v) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%.17g%+.17gi", v.real(), v.imag());
        return buf;
    }
    // Direction of e from exact_arg, so tiny edges keep full relative accuracy.
    static V unit_of(const DyadicGaussian& e) { return std::polar(1.0, exact_arg(e)); }
};

template <class A>
FoldMap<typename A::V> fold_impl(const TEmbedding& t, const CombinatorialMap& m, double tol) {
    using V = typename A::V;
    const int n = t.n();
    if (m.n() != n) throw ArgumentError("fold: embedding is T_" + std::to_string(n) + " but map is for n=" +
                                        std::to_string(m.n()));
    FoldMap<V> out{DualField<V>(n), std::vector<bool>(static_cast<std::size_t>(dual_count(n)), false)};
    const auto& faces = m.faces();
    std::vector<V> rot(faces.size());
    std::vector<bool> seen(faces.size(), false);

    auto assign = [&](const DualVertex& c, const V& value, int face) {
        const auto idx = static_cast<std::size_t>(dual_index(c, n));
        if (!out.assigned[idx]) {
            out.values[c] = value;
            out.assigned[idx] = true;
        } else if (!A::same(out.values[c], value, tol)) {
            throw IntegrityError("fold: faces disagree at dual vertex " + c.to_string() + " (face " +
                                 faces[static_cast<std::size_t>(face)].owner.to_string() + " gives " + A::show(value) +
                                 ", earlier " + A::show(out.values[c]) + ")");
        }
    };

    const int root = m.find(FaceOwner::boundary(FaceOwner::Kind::WNE));
    if (root < 0) throw IntegrityError("fold: map has no w_NE face");
    rot[static_cast<std::size_t>(root)] = V(1);
    seen[static_cast<std::size_t>(root)] = true;
    for (const auto& c : faces[static_cast<std::size_t>(root)].corners) assign(c, A::lift(t[c]), root);

    std::deque<int> queue{root};
    while (!queue.empty()) {
        const int f = queue.front();
        queue.pop_front();
        for (const auto& [g, ei] : m.neighbors(f)) {
            const auto gi = static_cast<std::size_t>(g);
            if (seen[gi]) continue;
            const Face& fg = faces[gi];
            if (fg.color == faces[static_cast<std::size_t>(f)].color) {
                throw IntegrityError("fold: adjacent faces " + faces[static_cast<std::size_t>(f)].owner.to_string() +
                                     " and " + fg.owner.to_string() + " have the same color");
            }
            const DualEdge& edge = m.edges()[static_cast<std::size_t>(ei)];
            const DyadicGaussian e = t[edge.b] - t[edge.a];
            if (e.is_zero()) throw IntegrityError("fold: degenerate edge " + edge.a.to_string() + "-" + edge.b.to_string());
            const bool white = fg.color == FaceColor::White;
            rot[gi] = rot[static_cast<std::size_t>(f)] * A::ratio(e, !white);
            seen[gi] = true;
            const V base = out.values[edge.a];
            for (const auto& c : fg.corners) assign(c, base + A::place(rot[gi], t[c] - t[edge.a], !white), g);
            queue.push_back(g);
        }
    }
    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (!seen[i]) throw IntegrityError("fold: face " + faces[i].owner.to_string() + " is unreachable");
    }
    return out;
}

}  // namespace

FoldMap<RationalGaussian> origami_fold(const TEmbedding& t, const CombinatorialMap& m) {
    return fold_impl<ExactArith>(t, m, 0.0);
}

FoldMap<Complex> origami_fold_float(const TEmbedding& t, const CombinatorialMap& m, double tolerance) {
    return fold_impl<FloatArith>(t, m, tolerance);
}

FoldComparison compare_fold(const FoldMap<RationalGaussian>& fold, const TEmbedding& o) {
    if (fold.n() != o.n()) throw ArgumentError("compare_fold: fold and origami map disagree on n");
    FoldComparison c;
    for (const auto& v : o.pos.vertices()) {
        ++c.compared;
        const RationalGaussian want(o[v]);
        if (!(fold[v] == want)) {
            ++c.mismatches;
            c.max_error = std::max(c.max_error, std::abs(fold[v].to_complex() - want.to_complex()));
        }
    }
    return c;
}

FoldComparison compare_fold(const FoldMap<Complex>& fold, const TEmbedding& o, double tolerance) {
    if (fold.n() != o.n()) throw ArgumentError("compare_fold: fold and origami map disagree on n");
    FoldComparison c;
    for (const auto& v : o.pos.vertices()) {
        ++c.compared;
        const double err = std::abs(fold[v] - o.to_complex(v));
        c.max_error = std::max(c.max_error, err);
        if (!(err <= tolerance)) ++c.mismatches;
    }
    return c;
}

}  // namespace aztec::embedding
