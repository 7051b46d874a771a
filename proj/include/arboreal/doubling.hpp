#pragma once

#include "enveloping.hpp"
#include "grafting.hpp"
#include "lincomb.hpp"
#include "trees.hpp"

namespace arboreal {

/// Second projection D -> H: read off the marked subforest.
inline Forest p2(const MarkedTree& t) {
    if (t.marked()) return Forest(t.shape());
    Forest out;
    for (const MarkedTree& c : t.children()) out = out * p2(c);
    return out;
}

inline Forest p2(const MarkedForest& f) {
    Forest out;
    for (const MarkedTree& t : f.components()) out = out * p2(t);
    return out;
}

/// Doubling coproduct: for each descendant-closed subset W of the marks,
/// (shape, W) # (shape minus W, remaining marks); multiplicative over
/// components. Realizes Delta(t,s) = sum (t, P^c(s)) # (R^c(t), R^c(s)).
inline LinComb<Tensor2<MarkedForest, MarkedForest>> d_coproduct(const MarkedForest& f) {
    LinComb<Tensor2<MarkedForest, MarkedForest>> out;
    std::vector<std::vector<MarkedCut>> per_tree;
    per_tree.reserve(f.components().size());
    for (const MarkedTree& t : f.components()) per_tree.push_back(marked_cuts(t));
    std::vector<std::size_t> idx(per_tree.size(), 0);
    while (true) {
        std::vector<MarkedTree> left, right;
        for (std::size_t i = 0; i < per_tree.size(); ++i) {
            const MarkedCut& c = per_tree[i][idx[i]];
            left.push_back(c.left);
            if (c.right) right.push_back(*c.right);
        }
        out.add(1, Tensor2<MarkedForest, MarkedForest>{MarkedForest(std::move(left)),
                                                       MarkedForest(std::move(right))});
        std::size_t i = 0;
        for (; i < per_tree.size(); ++i) {
            if (++idx[i] < per_tree[i].size()) break;
            idx[i] = 0;
        }
        if (i == per_tree.size()) break;
    }
    return out;
}

inline Int d_counit(const MarkedForest& f) { return f.mark_count() == 0 ? 1 : 0; }

/// Doubling pre-Lie product: graft p1 (marks and all) at every unmarked
/// vertex of p2. Grafting at an unmarked vertex can never break closure.
inline LinComb<MarkedTree> leadsto(const MarkedTree& p1, const MarkedTree& p2) {
    LinComb<MarkedTree> out;
    for (const VertexRef& v : unmarked_vertices(p2)) out.add(1, graft_at(p1, p2, v));
    return out;
}

inline LinComb<MarkedTree> leadsto(const LinComb<MarkedTree>& a, const LinComb<MarkedTree>& b) {
    return extend_bilinear(
        [](const MarkedTree& x, const MarkedTree& y) { return leadsto(x, y); }, a, b);
}

inline PreLieContext<Forest> grafting_context() {
    return PreLieContext<Forest>{
        [](const Tree& a, const Tree& b) { return graft_sum(a, b); }, Int{-1}};
}

inline PreLieContext<MarkedForest> doubling_context() {
    return PreLieContext<MarkedForest>{
        [](const MarkedTree& a, const MarkedTree& b) { return leadsto(a, b); }, Int{-1}};
}

/// Enveloping product of (V, leadsto) on D' = S(V).
inline LinComb<MarkedForest> bigstar(const MarkedForest& a, const MarkedForest& b) {
    return star(doubling_context(), a, b);
}

inline LinComb<MarkedForest> bigstar(const LinComb<MarkedForest>& a,
                                     const LinComb<MarkedForest>& b) {
    return star(doubling_context(), a, b);
}

}  // namespace arboreal
