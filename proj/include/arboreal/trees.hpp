#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace arboreal {

/// A produced marked tree whose mark set is not descendant-closed.
class ClosureViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Closure failure detected while canonicalizing input (parse/construct path).
class InvalidMarks : public ClosureViolation {
public:
    using ClosureViolation::ClosureViolation;
};

class InvalidVertexRef : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An enumeration or check exceeded its deterministic cutoff.
class ResourceLimit : public std::runtime_error {
public:
    ResourceLimit(const std::string& msg, long done) : std::runtime_error(msg), completed(done) {}
    long completed;
};

namespace detail {
inline std::atomic<long>& closure_counter() {
    static std::atomic<long> n{0};
    return n;
}
}  // namespace detail

/// Number of descendant-closure assertion failures observed so far.
inline long closure_violation_count() { return detail::closure_counter().load(); }

/// Canonical unordered rooted tree. Children are kept sorted by canonical
/// encoding, so equality of trees is equality of encodings.
class Tree {
public:
    Tree() : enc_("()"), size_(1) {}

    explicit Tree(std::vector<Tree> children) : children_(std::move(children)) {
        std::sort(children_.begin(), children_.end());
        size_ = 1;
        std::string e = "(";
        for (const Tree& c : children_) {
            e += c.enc_;
            size_ += c.size_;
        }
        e += ')';
        enc_ = std::move(e);
    }

    const std::vector<Tree>& children() const { return children_; }
    const std::string& text() const { return enc_; }
    int degree() const { return size_; }

    friend bool operator<(const Tree& a, const Tree& b) { return a.enc_ < b.enc_; }
    friend bool operator==(const Tree& a, const Tree& b) { return a.enc_ == b.enc_; }

private:
    std::vector<Tree> children_;
    std::string enc_;
    int size_;
};

/// Rooted tree with a descendant-closed set of marked vertices. The marks
/// encode a pair (t, s): s is the pruning of t carved out by an admissible
/// cut, realized as the subforest of marked vertices. Construction validates
/// closure (a marked vertex must have only marked children) and throws
/// InvalidMarks otherwise, bumping the global violation counter.
class MarkedTree {
public:
    explicit MarkedTree(bool marked = false) : marked_(marked) {
        enc_ = marked ? "()*" : "()";
        size_ = 1;
        marks_ = marked ? 1 : 0;
    }

    MarkedTree(bool marked, std::vector<MarkedTree> children)
        : marked_(marked), children_(std::move(children)) {
        std::sort(children_.begin(), children_.end());
        size_ = 1;
        marks_ = marked_ ? 1 : 0;
        for (const MarkedTree& c : children_) {
            size_ += c.size_;
            marks_ += c.marks_;
        }
        if (marked_) {
            for (const MarkedTree& c : children_)
                if (!c.marked_) {
                    detail::closure_counter()++;
                    throw InvalidMarks("marked vertex with unmarked child");
                }
        }
        std::string e = "(";
        for (const MarkedTree& c : children_) e += c.enc_;
        e += ')';
        if (marked_) e += '*';
        enc_ = std::move(e);
    }

    static MarkedTree from_tree(const Tree& t, bool all_marked = false) {
        std::vector<MarkedTree> ch;
        ch.reserve(t.children().size());
        for (const Tree& c : t.children()) ch.push_back(from_tree(c, all_marked));
        return MarkedTree(all_marked, std::move(ch));
    }

    bool marked() const { return marked_; }
    const std::vector<MarkedTree>& children() const { return children_; }
    const std::string& text() const { return enc_; }
    int degree() const { return size_; }
    int mark_count() const { return marks_; }

    Tree shape() const {
        std::vector<Tree> ch;
        ch.reserve(children_.size());
        for (const MarkedTree& c : children_) ch.push_back(c.shape());
        return Tree(std::move(ch));
    }

    friend bool operator<(const MarkedTree& a, const MarkedTree& b) { return a.enc_ < b.enc_; }
    friend bool operator==(const MarkedTree& a, const MarkedTree& b) { return a.enc_ == b.enc_; }

private:
    bool marked_;
    std::vector<MarkedTree> children_;
    std::string enc_;
    int size_;
    int marks_;
};

/// Multiset of trees, stored sorted. The empty forest is the unit and
/// prints as "1".
class Forest {
public:
    using Component = Tree;

    Forest() : enc_("1"), size_(0) {}

    explicit Forest(std::vector<Tree> trees) : trees_(std::move(trees)) {
        std::sort(trees_.begin(), trees_.end());
        size_ = 0;
        if (trees_.empty()) {
            enc_ = "1";
            return;
        }
        std::string e;
        for (const Tree& t : trees_) {
            if (!e.empty()) e += ' ';
            e += t.text();
            size_ += t.degree();
        }
        enc_ = std::move(e);
    }

    explicit Forest(const Tree& t) : Forest(std::vector<Tree>{t}) {}

    const std::vector<Tree>& components() const { return trees_; }
    const std::string& text() const { return enc_; }
    int degree() const { return size_; }
    bool empty() const { return trees_.empty(); }

    /// Disjoint-union product (concatenation of multisets).
    friend Forest operator*(const Forest& a, const Forest& b) {
        std::vector<Tree> all = a.trees_;
        all.insert(all.end(), b.trees_.begin(), b.trees_.end());
        return Forest(std::move(all));
    }

    friend bool operator<(const Forest& a, const Forest& b) { return a.enc_ < b.enc_; }
    friend bool operator==(const Forest& a, const Forest& b) { return a.enc_ == b.enc_; }

private:
    std::vector<Tree> trees_;
    std::string enc_;
    int size_;
};

/// Multiset of marked trees: basis of the doubling bialgebra D and of the
/// monomials of its enveloping algebra. The D-grading is the mark count.
class MarkedForest {
public:
    using Component = MarkedTree;

    MarkedForest() : enc_("1"), size_(0), marks_(0) {}

    explicit MarkedForest(std::vector<MarkedTree> trees) : trees_(std::move(trees)) {
        std::sort(trees_.begin(), trees_.end());
        size_ = 0;
        marks_ = 0;
        if (trees_.empty()) {
            enc_ = "1";
            return;
        }
        std::string e;
        for (const MarkedTree& t : trees_) {
            if (!e.empty()) e += ' ';
            e += t.text();
            size_ += t.degree();
            marks_ += t.mark_count();
        }
        enc_ = std::move(e);
    }

    explicit MarkedForest(const MarkedTree& t) : MarkedForest(std::vector<MarkedTree>{t}) {}

    static MarkedForest from_forest(const Forest& f, bool all_marked = false) {
        std::vector<MarkedTree> ts;
        ts.reserve(f.components().size());
        for (const Tree& t : f.components()) ts.push_back(MarkedTree::from_tree(t, all_marked));
        return MarkedForest(std::move(ts));
    }

    const std::vector<MarkedTree>& components() const { return trees_; }
    const std::string& text() const { return enc_; }
    int degree() const { return size_; }
    int mark_count() const { return marks_; }
    bool empty() const { return trees_.empty(); }

    Forest shape() const {
        std::vector<Tree> ts;
        ts.reserve(trees_.size());
        for (const MarkedTree& t : trees_) ts.push_back(t.shape());
        return Forest(std::move(ts));
    }

    friend MarkedForest operator*(const MarkedForest& a, const MarkedForest& b) {
        std::vector<MarkedTree> all = a.trees_;
        all.insert(all.end(), b.trees_.begin(), b.trees_.end());
        return MarkedForest(std::move(all));
    }

    friend bool operator<(const MarkedForest& a, const MarkedForest& b) { return a.enc_ < b.enc_; }
    friend bool operator==(const MarkedForest& a, const MarkedForest& b) {
        return a.enc_ == b.enc_;
    }

private:
    std::vector<MarkedTree> trees_;
    std::string enc_;
    int size_;
    int marks_;
};

/// Address of a vertex: component index within a forest (0 for trees) and
/// the child-index path from that component's root in canonical order.
struct VertexRef {
    int component = 0;
    std::vector<int> path;

    std::string text() const {
        std::string s = std::to_string(component) + ":";
        for (std::size_t i = 0; i < path.size(); ++i) {
            if (i) s += '.';
            s += std::to_string(path[i]);
        }
        if (path.empty()) s += "r";
        return s;
    }

    friend bool operator<(const VertexRef& a, const VertexRef& b) {
        if (a.component != b.component) return a.component < b.component;
        return a.path < b.path;
    }
    friend bool operator==(const VertexRef& a, const VertexRef& b) {
        return a.component == b.component && a.path == b.path;
    }
};

namespace detail {

template <class Node>
void collect_refs(const Node& n, int component, std::vector<int>& path,
                  std::vector<VertexRef>& out) {
    out.push_back(VertexRef{component, path});
    const auto& ch = n.children();
    for (std::size_t i = 0; i < ch.size(); ++i) {
        path.push_back(static_cast<int>(i));
        collect_refs(ch[i], component, path, out);
        path.pop_back();
    }
}

}  // namespace detail

inline std::vector<VertexRef> vertices(const Tree& t) {
    std::vector<VertexRef> out;
    std::vector<int> path;
    detail::collect_refs(t, 0, path, out);
    return out;
}

inline std::vector<VertexRef> vertices(const MarkedTree& t) {
    std::vector<VertexRef> out;
    std::vector<int> path;
    detail::collect_refs(t, 0, path, out);
    return out;
}

inline std::vector<VertexRef> vertices(const Forest& f) {
    std::vector<VertexRef> out;
    std::vector<int> path;
    for (std::size_t i = 0; i < f.components().size(); ++i)
        detail::collect_refs(f.components()[i], static_cast<int>(i), path, out);
    return out;
}

inline std::vector<VertexRef> vertices(const MarkedForest& f) {
    std::vector<VertexRef> out;
    std::vector<int> path;
    for (std::size_t i = 0; i < f.components().size(); ++i)
        detail::collect_refs(f.components()[i], static_cast<int>(i), path, out);
    return out;
}

namespace detail {

inline void collect_marked(const MarkedTree& n, bool want_marked, std::vector<int>& path,
                           std::vector<VertexRef>& out) {
    if (n.marked() == want_marked) out.push_back(VertexRef{0, path});
    const auto& ch = n.children();
    for (std::size_t i = 0; i < ch.size(); ++i) {
        path.push_back(static_cast<int>(i));
        collect_marked(ch[i], want_marked, path, out);
        path.pop_back();
    }
}

}  // namespace detail

inline std::vector<VertexRef> marked_vertices(const MarkedTree& t) {
    std::vector<VertexRef> out;
    std::vector<int> path;
    detail::collect_marked(t, true, path, out);
    return out;
}

inline std::vector<VertexRef> unmarked_vertices(const MarkedTree& t) {
    std::vector<VertexRef> out;
    std::vector<int> path;
    detail::collect_marked(t, false, path, out);
    return out;
}

namespace detail {

inline Tree graft_rec(const Tree& scion, const Tree& node, const std::vector<int>& path,
                      std::size_t i) {
    std::vector<Tree> ch = node.children();
    if (i == path.size()) {
        ch.push_back(scion);
    } else {
        int k = path[i];
        if (k < 0 || static_cast<std::size_t>(k) >= ch.size())
            throw InvalidVertexRef("child index out of range");
        ch[static_cast<std::size_t>(k)] = graft_rec(scion, ch[static_cast<std::size_t>(k)], path, i + 1);
    }
    return Tree(std::move(ch));
}

inline MarkedTree graft_rec(const MarkedTree& scion, const MarkedTree& node,
                            const std::vector<int>& path, std::size_t i) {
    std::vector<MarkedTree> ch = node.children();
    if (i == path.size()) {
        ch.push_back(scion);
    } else {
        int k = path[i];
        if (k < 0 || static_cast<std::size_t>(k) >= ch.size())
            throw InvalidVertexRef("child index out of range");
        ch[static_cast<std::size_t>(k)] = graft_rec(scion, ch[static_cast<std::size_t>(k)], path, i + 1);
    }
    return MarkedTree(node.marked(), std::move(ch));
}

}  // namespace detail

/// Attach the root of `scion` by a new edge to the vertex `v` of `stock`.
inline Tree graft_at(const Tree& scion, const Tree& stock, const VertexRef& v) {
    if (v.component != 0) throw InvalidVertexRef("tree vertex ref must have component 0");
    return detail::graft_rec(scion, stock, v.path, 0);
}

/// Marked variant: the scion keeps its marks, the stock's marks are unchanged.
/// ClosureViolation if grafting an unmarked-root scion below a marked vertex.
inline MarkedTree graft_at(const MarkedTree& scion, const MarkedTree& stock, const VertexRef& v) {
    if (v.component != 0) throw InvalidVertexRef("tree vertex ref must have component 0");
    return detail::graft_rec(scion, stock, v.path, 0);
}

namespace detail {

/// Mutable node used for simultaneous grafts: appending children never
/// disturbs the canonical paths of the original vertices.
struct RawMarked {
    bool marked = false;
    std::vector<RawMarked> children;
};

inline RawMarked to_raw(const MarkedTree& t) {
    RawMarked r;
    r.marked = t.marked();
    r.children.reserve(t.children().size());
    for (const MarkedTree& c : t.children()) r.children.push_back(to_raw(c));
    return r;
}

inline RawMarked& raw_at(RawMarked& root, const std::vector<int>& path) {
    RawMarked* n = &root;
    for (int k : path) {
        if (k < 0 || static_cast<std::size_t>(k) >= n->children.size())
            throw InvalidVertexRef("child index out of range");
        n = &n->children[static_cast<std::size_t>(k)];
    }
    return *n;
}

inline MarkedTree freeze(const RawMarked& r) {
    std::vector<MarkedTree> ch;
    ch.reserve(r.children.size());
    for (const RawMarked& c : r.children) ch.push_back(freeze(c));
    return MarkedTree(r.marked, std::move(ch));
}

}  // namespace detail

/// Graft several scions simultaneously at vertices of a forest; all paths
/// refer to the original canonical positions of `stock`.
inline MarkedForest graft_many(const MarkedForest& stock,
                               const std::vector<std::pair<VertexRef, MarkedTree>>& grafts) {
    std::vector<detail::RawMarked> raws;
    raws.reserve(stock.components().size());
    for (const MarkedTree& t : stock.components()) raws.push_back(detail::to_raw(t));
    for (const auto& [v, scion] : grafts) {
        if (v.component < 0 || static_cast<std::size_t>(v.component) >= raws.size())
            throw InvalidVertexRef("component index out of range");
        detail::raw_at(raws[static_cast<std::size_t>(v.component)], v.path)
            .children.push_back(detail::to_raw(scion));
    }
    std::vector<MarkedTree> out;
    out.reserve(raws.size());
    for (const detail::RawMarked& r : raws) out.push_back(detail::freeze(r));
    return MarkedForest(std::move(out));
}

// ---------------------------------------------------------------------------
// Admissible cuts
// ---------------------------------------------------------------------------

/// One admissible cut of a forest, identified with the descendant-closed
/// vertex subset U listed in cut_marks: pruning is the subforest induced on
/// U, trunk is the forest with U removed. U = empty and U = all vertices are
/// both admissible.
struct CutEntry {
    Forest pruning;
    Forest trunk;
    std::vector<VertexRef> cut_marks;
};

namespace detail {

struct TreeCut {
    std::vector<Tree> pruned;
    std::optional<Tree> trunk;
    std::vector<VertexRef> marks;
};

inline void all_paths_under(const Tree& t, int component, std::vector<int>& path,
                            std::vector<VertexRef>& out) {
    out.push_back(VertexRef{component, path});
    const auto& ch = t.children();
    for (std::size_t i = 0; i < ch.size(); ++i) {
        path.push_back(static_cast<int>(i));
        all_paths_under(ch[i], component, path, out);
        path.pop_back();
    }
}

inline std::vector<TreeCut> tree_cuts(const Tree& t, int component, std::vector<int>& path) {
    std::vector<TreeCut> out;
    {
        TreeCut whole;
        whole.pruned.push_back(t);
        all_paths_under(t, component, path, whole.marks);
        out.push_back(std::move(whole));
    }
    // root survives: combine independent cuts of the child subtrees
    std::vector<std::vector<TreeCut>> per_child;
    per_child.reserve(t.children().size());
    for (std::size_t i = 0; i < t.children().size(); ++i) {
        path.push_back(static_cast<int>(i));
        per_child.push_back(tree_cuts(t.children()[i], component, path));
        path.pop_back();
    }
    std::vector<std::size_t> idx(per_child.size(), 0);
    while (true) {
        TreeCut combo;
        std::vector<Tree> trunk_children;
        for (std::size_t i = 0; i < per_child.size(); ++i) {
            const TreeCut& c = per_child[i][idx[i]];
            combo.pruned.insert(combo.pruned.end(), c.pruned.begin(), c.pruned.end());
            combo.marks.insert(combo.marks.end(), c.marks.begin(), c.marks.end());
            if (c.trunk) trunk_children.push_back(*c.trunk);
        }
        combo.trunk = Tree(std::move(trunk_children));
        out.push_back(std::move(combo));
        std::size_t i = 0;
        for (; i < per_child.size(); ++i) {
            if (++idx[i] < per_child[i].size()) break;
            idx[i] = 0;
        }
        if (i == per_child.size()) break;
    }
    return out;
}

}  // namespace detail

inline std::vector<CutEntry> admissible_cuts(const Forest& f) {
    std::vector<std::vector<detail::TreeCut>> per_tree;
    per_tree.reserve(f.components().size());
    for (std::size_t i = 0; i < f.components().size(); ++i) {
        std::vector<int> path;
        per_tree.push_back(detail::tree_cuts(f.components()[i], static_cast<int>(i), path));
    }
    std::vector<CutEntry> out;
    std::vector<std::size_t> idx(per_tree.size(), 0);
    while (true) {
        std::vector<Tree> pruned;
        std::vector<Tree> trunk;
        std::vector<VertexRef> marks;
        for (std::size_t i = 0; i < per_tree.size(); ++i) {
            const detail::TreeCut& c = per_tree[i][idx[i]];
            pruned.insert(pruned.end(), c.pruned.begin(), c.pruned.end());
            marks.insert(marks.end(), c.marks.begin(), c.marks.end());
            if (c.trunk) trunk.push_back(*c.trunk);
        }
        out.push_back(CutEntry{Forest(std::move(pruned)), Forest(std::move(trunk)), std::move(marks)});
        std::size_t i = 0;
        for (; i < per_tree.size(); ++i) {
            if (++idx[i] < per_tree[i].size()) break;
            idx[i] = 0;
        }
        if (i == per_tree.size()) break;
    }
    return out;
}

inline std::vector<CutEntry> admissible_cuts(const MarkedForest& f) {
    return admissible_cuts(f.shape());
}

/// One cut of the marked part of a marked tree: `left` is the same shape
/// remarked with the chosen descendant-closed subset W of the marks, `right`
/// is the tree with W deleted keeping the remaining marks (absent when the
/// whole tree is removed).
struct MarkedCut {
    MarkedTree left;
    std::optional<MarkedTree> right;
};

namespace detail {

inline std::vector<MarkedCut> marked_cuts_rec(const MarkedTree& n) {
    std::vector<MarkedCut> out;
    if (n.marked()) out.push_back(MarkedCut{n, std::nullopt});  // take the whole subtree
    std::vector<std::vector<MarkedCut>> per_child;
    per_child.reserve(n.children().size());
    for (const MarkedTree& c : n.children()) per_child.push_back(marked_cuts_rec(c));
    std::vector<std::size_t> idx(per_child.size(), 0);
    while (true) {
        std::vector<MarkedTree> left_children;
        std::vector<MarkedTree> right_children;
        for (std::size_t i = 0; i < per_child.size(); ++i) {
            const MarkedCut& c = per_child[i][idx[i]];
            left_children.push_back(c.left);
            if (c.right) right_children.push_back(*c.right);
        }
        out.push_back(MarkedCut{MarkedTree(false, std::move(left_children)),
                                MarkedTree(n.marked(), std::move(right_children))});
        std::size_t i = 0;
        for (; i < per_child.size(); ++i) {
            if (++idx[i] < per_child[i].size()) break;
            idx[i] = 0;
        }
        if (i == per_child.size()) break;
    }
    return out;
}

}  // namespace detail

inline std::vector<MarkedCut> marked_cuts(const MarkedTree& t) {
    return detail::marked_cuts_rec(t);
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

/// Cap applied to tree/forest enumeration, from ARBOREAL_MAX_DEGREE (default 9).
inline int max_enumeration_degree() {
    static const int cap = [] {
        const char* s = std::getenv("ARBOREAL_MAX_DEGREE");
        if (!s || !*s) return 9;
        int v = std::atoi(s);
        return v > 0 ? v : 9;
    }();
    return cap;
}

std::vector<Forest> enumerate_forests(int degree, int max_factors = -1);

/// All pairwise-distinct canonical trees with n vertices, sorted.
inline std::vector<Tree> enumerate_trees(int n) {
    if (n <= 0) return {};
    if (n > max_enumeration_degree())
        throw ResourceLimit("enumeration degree exceeds ARBOREAL_MAX_DEGREE", 0);
    if (n == 1) return {Tree()};
    std::vector<Tree> out;
    for (const Forest& f : enumerate_forests(n - 1)) out.push_back(Tree(f.components()));
    std::sort(out.begin(), out.end());
    return out;
}

/// All forests of exactly the given total degree (degree 0 yields the unit).
inline std::vector<Forest> enumerate_forests(int degree, int max_factors) {
    if (degree < 0) return {};
    if (degree > max_enumeration_degree())
        throw ResourceLimit("enumeration degree exceeds ARBOREAL_MAX_DEGREE", 0);
    if (degree == 0) return {Forest{}};
    std::vector<Tree> pool;
    for (int k = 1; k <= degree; ++k) {
        auto ts = enumerate_trees(k);
        pool.insert(pool.end(), ts.begin(), ts.end());
    }
    std::sort(pool.begin(), pool.end());
    std::vector<Forest> out;
    std::vector<Tree> current;
    std::function<void(std::size_t, int)> gen = [&](std::size_t start, int remaining) {
        if (remaining == 0) {
            out.push_back(Forest(current));
            return;
        }
        if (max_factors >= 0 && static_cast<int>(current.size()) >= max_factors) return;
        for (std::size_t i = start; i < pool.size(); ++i) {
            if (pool[i].degree() > remaining) continue;
            current.push_back(pool[i]);
            gen(i, remaining - pool[i].degree());
            current.pop_back();
        }
    };
    gen(0, degree);
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

inline std::vector<MarkedTree> closed_markings(const Tree& t) {
    std::vector<MarkedTree> out;
    out.push_back(MarkedTree::from_tree(t, true));
    std::vector<std::vector<MarkedTree>> per_child;
    per_child.reserve(t.children().size());
    for (const Tree& c : t.children()) per_child.push_back(closed_markings(c));
    std::vector<std::size_t> idx(per_child.size(), 0);
    while (true) {
        std::vector<MarkedTree> ch;
        for (std::size_t i = 0; i < per_child.size(); ++i) ch.push_back(per_child[i][idx[i]]);
        out.push_back(MarkedTree(false, std::move(ch)));
        std::size_t i = 0;
        for (; i < per_child.size(); ++i) {
            if (++idx[i] < per_child[i].size()) break;
            idx[i] = 0;
        }
        if (i == per_child.size()) break;
    }
    return out;
}

}  // namespace detail

/// Every tree of n vertices with every descendant-closed mark set (the empty
/// and all-marked cases included), deduplicated up to isomorphism.
inline std::vector<MarkedTree> enumerate_marked_trees(int n) {
    if (n <= 0) return {};
    std::set<MarkedTree> distinct;
    for (const Tree& t : enumerate_trees(n))
        for (const MarkedTree& m : detail::closed_markings(t)) distinct.insert(m);
    return std::vector<MarkedTree>(distinct.begin(), distinct.end());
}

/// All marked forests of exactly the given total shape degree.
inline std::vector<MarkedForest> enumerate_marked_forests(int degree, int max_factors = -1) {
    if (degree < 0) return {};
    if (degree > max_enumeration_degree())
        throw ResourceLimit("enumeration degree exceeds ARBOREAL_MAX_DEGREE", 0);
    if (degree == 0) return {MarkedForest{}};
    std::vector<MarkedTree> pool;
    for (int k = 1; k <= degree; ++k) {
        auto ts = enumerate_marked_trees(k);
        pool.insert(pool.end(), ts.begin(), ts.end());
    }
    std::sort(pool.begin(), pool.end());
    std::vector<MarkedForest> out;
    std::vector<MarkedTree> current;
    std::function<void(std::size_t, int)> gen = [&](std::size_t start, int remaining) {
        if (remaining == 0) {
            out.push_back(MarkedForest(current));
            return;
        }
        if (max_factors >= 0 && static_cast<int>(current.size()) >= max_factors) return;
        for (std::size_t i = start; i < pool.size(); ++i) {
            if (pool[i].degree() > remaining) continue;
            current.push_back(pool[i]);
            gen(i, remaining - pool[i].degree());
            current.pop_back();
        }
    };
    gen(0, degree);
    std::sort(out.begin(), out.end());
    return out;
}

/// Rebuild a tree; the constructors already keep everything canonical, so
/// this is the identity on canonical input.
inline Tree canonicalize(const Tree& t) {
    std::vector<Tree> ch;
    for (const Tree& c : t.children()) ch.push_back(canonicalize(c));
    return Tree(std::move(ch));
}

inline MarkedTree canonicalize(const MarkedTree& t) {
    std::vector<MarkedTree> ch;
    for (const MarkedTree& c : t.children()) ch.push_back(canonicalize(c));
    return MarkedTree(t.marked(), std::move(ch));
}

}  // namespace arboreal
