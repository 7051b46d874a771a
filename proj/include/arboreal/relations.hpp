#pragma once

#include "doubling.hpp"
#include "enveloping.hpp"
#include "grafting.hpp"
#include "lincomb.hpp"
#include "trees.hpp"

namespace arboreal {

namespace detail {

// Vertex refs of the marked vertices of p, expressed in the canonical child
// order of shape(p). Children with equal shapes are interchangeable, so the
// stable first-free assignment is canonical.
inline void marked_shape_refs(const MarkedTree& n, std::vector<int>& path,
                              std::vector<VertexRef>& out) {
    if (n.marked()) out.push_back(VertexRef{0, path});
    const auto& ch = n.children();
    std::vector<Tree> shapes;
    shapes.reserve(ch.size());
    for (const MarkedTree& c : ch) shapes.push_back(c.shape());
    std::vector<Tree> sorted_shapes = shapes;
    std::sort(sorted_shapes.begin(), sorted_shapes.end());
    std::vector<bool> used(sorted_shapes.size(), false);
    for (std::size_t i = 0; i < ch.size(); ++i) {
        std::size_t j = 0;
        while (j < sorted_shapes.size() && (used[j] || !(sorted_shapes[j] == shapes[i]))) ++j;
        used[j] = true;
        path.push_back(static_cast<int>(j));
        marked_shape_refs(ch[i], path, out);
        path.pop_back();
    }
}

}  // namespace detail

inline std::vector<VertexRef> marked_shape_vertices(const MarkedTree& p) {
    std::vector<VertexRef> out;
    std::vector<int> path;
    detail::marked_shape_refs(p, path, out);
    return out;
}

/// Left pre-Lie action of trees on the doubling space:
///   t1 <> (t2,s2) = sum over vertices v of s2 of (t1 ->_v t2, t1 ->_v s2).
/// The grafted copy of t1 joins the pruning, so it enters fully marked.
inline LinComb<MarkedTree> diamond(const Tree& t1, const MarkedTree& p) {
    LinComb<MarkedTree> out;
    MarkedTree scion = MarkedTree::from_tree(t1, true);
    for (const VertexRef& v : marked_vertices(p)) out.add(1, graft_at(scion, p, v));
    return out;
}

inline LinComb<MarkedTree> diamond(const LinComb<Tree>& a, const LinComb<MarkedTree>& b) {
    return extend_bilinear(
        [](const Tree& x, const MarkedTree& y) { return diamond(x, y); }, a, b);
}

/// The grafting part of the enveloping product that lands on marked vertices:
///   a *_g (t2,s2) = sum over v in V(s2) and Sweedler splits of a with a
/// nonempty grafting part, of a1 (a2 ->_v t2), at shape level. The split with
/// empty grafting part contributes nothing (there is no graft to place), which
/// is exactly what makes the bigstar decomposition hold.
inline LinComb<Forest> star_g(const Forest& a, const MarkedTree& p) {
    LinComb<Forest> out;
    MarkedForest stock = MarkedForest::from_forest(Forest(p.shape()));
    for (const VertexRef& v : marked_shape_vertices(p)) {
        for (const auto& [split, coef] : unshuffle(a)) {
            if (split.second.empty()) continue;
            std::vector<std::pair<VertexRef, MarkedTree>> grafts;
            for (const Tree& c : split.second.components())
                grafts.emplace_back(v, MarkedTree::from_tree(c));
            out.add(coef, split.first * graft_many(stock, grafts).shape());
        }
    }
    return out;
}

/// Action of H' on D': alpha(p # f) realizes (t * t', s) by carrying p's
/// marks through the enveloping product. Every configuration places a
/// sub-multiset of p's components at vertices of f; the remaining components
/// ride along untouched and f's trees keep empty mark sets.
inline LinComb<MarkedForest> alpha(const MarkedForest& p, const Forest& f) {
    LinComb<MarkedForest> out;
    MarkedForest stock = MarkedForest::from_forest(f);
    const std::vector<VertexRef> vs = vertices(stock);
    const auto& comps = p.components();
    const std::size_t k = comps.size();
    if (k > 20) throw ResourceLimit("monomial too long for alpha", 0);
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        std::vector<MarkedTree> rest;
        std::vector<std::size_t> selected;
        for (std::size_t i = 0; i < k; ++i) {
            if (mask & (std::size_t{1} << i))
                selected.push_back(i);
            else
                rest.push_back(comps[i]);
        }
        if (!selected.empty() && vs.empty()) continue;
        std::vector<std::size_t> assign(selected.size(), 0);
        while (true) {
            std::vector<std::pair<VertexRef, MarkedTree>> grafts;
            grafts.reserve(selected.size());
            for (std::size_t i = 0; i < selected.size(); ++i)
                grafts.emplace_back(vs[assign[i]], comps[selected[i]]);
            out.add(1, MarkedForest(rest) * graft_many(stock, grafts));
            std::size_t i = 0;
            for (; i < selected.size(); ++i) {
                if (++assign[i] < vs.size()) break;
                assign[i] = 0;
            }
            if (i == selected.size()) break;
        }
    }
    return out;
}

inline LinComb<MarkedForest> alpha(const LinComb<MarkedForest>& p, const LinComb<Forest>& f) {
    return extend_bilinear(
        [](const MarkedForest& x, const Forest& y) { return alpha(x, y); }, p, f);
}

}  // namespace arboreal
