#pragma once

#include "lincomb.hpp"
#include "trees.hpp"

namespace arboreal {

/// Grafting pre-Lie product: graft the root of t1 on every vertex of t2.
/// Isomorphic results merge, so coefficients can exceed 1.
inline LinComb<Tree> graft_sum(const Tree& t1, const Tree& t2) {
    LinComb<Tree> out;
    for (const VertexRef& v : vertices(t2)) out.add(1, graft_at(t1, t2, v));
    return out;
}

/// Graft t1 on every vertex of a forest; each term modifies one component.
inline LinComb<Forest> graft_into_forest(const Tree& t1, const Forest& f) {
    LinComb<Forest> out;
    const auto& comps = f.components();
    for (std::size_t i = 0; i < comps.size(); ++i) {
        for (const VertexRef& v : vertices(comps[i])) {
            std::vector<Tree> trees = comps;
            trees[i] = graft_at(t1, comps[i], VertexRef{0, v.path});
            out.add(1, Forest(std::move(trees)));
        }
    }
    return out;
}

inline LinComb<Tree> graft_sum(const LinComb<Tree>& a, const LinComb<Tree>& b) {
    return extend_bilinear([](const Tree& x, const Tree& y) { return graft_sum(x, y); }, a, b);
}

/// Lie bracket induced by the pre-Lie product: [a,b] = a>b - b>a.
inline LinComb<Tree> prelie_bracket(const LinComb<Tree>& a, const LinComb<Tree>& b) {
    return graft_sum(a, b) - graft_sum(b, a);
}

}  // namespace arboreal
