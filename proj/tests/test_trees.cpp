#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"

#include <arboreal/trees.hpp>

#include <set>

using namespace arboreal;

namespace {

Tree leaf() { return Tree(); }
Tree chain(int n) {
    Tree t;
    for (int i = 1; i < n; ++i) t = Tree(std::vector<Tree>{t});
    return t;
}
Tree cherry() { return Tree({leaf(), leaf()}); }

}  // namespace

TEST_CASE("canonical form is order-independent") {
    Tree a({chain(2), leaf()});
    Tree b({leaf(), chain(2)});
    CHECK(a.text() == "((())())");
    CHECK(b.text() == "((())())");
    CHECK(a == b);

    Tree c1({leaf(), leaf()});
    Tree c2({leaf(), leaf()});
    CHECK(c1.text() == "(()())");
    CHECK(c1 == c2);

    CHECK(leaf().text() == "()");
}

TEST_CASE("canonicalize is idempotent on every small tree") {
    for (int n = 1; n <= 6; ++n)
        for (const Tree& t : enumerate_trees(n)) {
            CHECK(canonicalize(t) == t);
            CHECK(canonicalize(canonicalize(t)) == canonicalize(t));
        }
    for (int n = 1; n <= 5; ++n)
        for (const MarkedTree& t : enumerate_marked_trees(n)) CHECK(canonicalize(t) == t);
}

TEST_CASE("tree enumeration matches the parent-array generator") {
    const long expected[] = {1, 1, 2, 4, 9, 20, 48};
    for (int n = 1; n <= 7; ++n) {
        auto mine = enumerate_trees(n);
        auto brute = oracle::all_trees_brute(n);
        CHECK(mine.size() == brute.size());
        CHECK(static_cast<long>(mine.size()) == expected[n - 1]);
        CHECK(std::set<Tree>(mine.begin(), mine.end()) ==
              std::set<Tree>(brute.begin(), brute.end()));
    }
    CHECK(enumerate_trees(0).empty());
}

TEST_CASE("tree tables through degree four") {
    auto t3 = enumerate_trees(3);
    REQUIRE(t3.size() == 2);
    CHECK(t3[0].text() == "((()))");
    CHECK(t3[1].text() == "(()())");

    auto t4 = enumerate_trees(4);
    REQUIRE(t4.size() == 4);
    CHECK(t4[0].text() == "(((())))");
    CHECK(t4[1].text() == "((()()))");
    CHECK(t4[2].text() == "((())())");
    CHECK(t4[3].text() == "(()()())");
}

TEST_CASE("marked tree enumeration") {
    auto m1 = enumerate_marked_trees(1);
    REQUIRE(m1.size() == 2);
    CHECK(m1[0].text() == "()");
    CHECK(m1[1].text() == "()*");

    auto m2 = enumerate_marked_trees(2);
    REQUIRE(m2.size() == 3);
    CHECK(m2[0].text() == "(())");
    CHECK(m2[1].text() == "(()*)");
    CHECK(m2[2].text() == "(()*)*");

    // cherry: none, one leaf, both leaves, all
    int cherry_markings = 0;
    for (const MarkedTree& m : enumerate_marked_trees(3))
        if (m.shape() == cherry()) ++cherry_markings;
    CHECK(cherry_markings == 4);

    for (int n = 1; n <= 6; ++n) {
        auto mine = enumerate_marked_trees(n);
        auto brute = oracle::all_marked_brute(n);
        CHECK(std::set<MarkedTree>(mine.begin(), mine.end()) ==
              std::set<MarkedTree>(brute.begin(), brute.end()));
    }
}

TEST_CASE("closure is rejected and counted") {
    long before = closure_violation_count();
    CHECK_THROWS_AS(MarkedTree(true, {MarkedTree(false)}), ClosureViolation);
    CHECK(closure_violation_count() == before + 1);
    // a valid all-marked chain is fine
    MarkedTree ok(true, {MarkedTree(true)});
    CHECK(ok.text() == "(()*)*");
    CHECK(ok.mark_count() == 2);
}

TEST_CASE("admissible cuts of small forests") {
    Forest l2(chain(2));
    auto cuts = admissible_cuts(l2);
    CHECK(cuts.size() == 3);

    Forest dot(leaf());
    CHECK(admissible_cuts(dot).size() == 2);

    CHECK(admissible_cuts(Forest{}).size() == 1);  // only the empty cut of 1

    for (const CutEntry& c : cuts)
        CHECK(c.pruning.degree() + c.trunk.degree() == l2.degree());
}

TEST_CASE("the seven cuts of the four-vertex caterpillar") {
    Tree t({chain(2), leaf()});
    REQUIRE(t.text() == "((())())");
    auto cuts = admissible_cuts(Forest(t));
    CHECK(cuts.size() == 7);
    std::multiset<std::string> pairs;
    for (const CutEntry& c : cuts) pairs.insert(c.pruning.text() + "|" + c.trunk.text());
    std::multiset<std::string> want = {
        "1|((())())",      "((())())|1", "()|((()))", "(())|(())",
        "()|(()())",       "(()) ()|()", "() ()|(())"};
    CHECK(pairs == want);
}

TEST_CASE("cut count equals the closed-subset count, degrees additive") {
    for (int n = 1; n <= 6; ++n)
        for (const Tree& t : enumerate_trees(n)) {
            Forest f(t);
            auto cuts = admissible_cuts(f);
            CHECK(static_cast<long>(cuts.size()) == oracle::closed_subset_count(t));
            for (const CutEntry& c : cuts) {
                CHECK(c.pruning.degree() + c.trunk.degree() == f.degree());
                CHECK(static_cast<int>(c.cut_marks.size()) == c.pruning.degree());
            }
        }
    // multiplicative over components
    Forest f({chain(2), leaf()});
    CHECK(admissible_cuts(f).size() == 3 * 2);
}

TEST_CASE("grafting at a vertex") {
    Tree l2 = chain(2);
    auto vs = vertices(l2);
    REQUIRE(vs.size() == 2);
    // preorder: root first, then the leaf
    CHECK(graft_at(leaf(), l2, vs[0]).text() == "(()())");   // at the root: cherry
    CHECK(graft_at(leaf(), l2, vs[1]).text() == "((()))");   // at the leaf: chain
    CHECK_THROWS_AS(graft_at(leaf(), l2, VertexRef{0, {5}}), InvalidVertexRef);
}

TEST_CASE("graft vertex count additivity") {
    for (int a = 1; a + 1 <= 7; ++a)
        for (const Tree& t1 : enumerate_trees(a))
            for (int b = 1; a + b <= 7; ++b)
                for (const Tree& t2 : enumerate_trees(b))
                    for (const VertexRef& v : vertices(t2))
                        CHECK(graft_at(t1, t2, v).degree() == a + b);
}

TEST_CASE("marked graft keeps marks on both sides") {
    // spec example: scion = 2-chain with marked leaf, stock = cherry with one
    // leaf marked, grafted at the root
    MarkedTree scion(false, {MarkedTree(true)});
    MarkedTree stock(false, {MarkedTree(false), MarkedTree(true)});
    auto vs = vertices(stock);
    MarkedTree out = graft_at(scion, stock, vs[0]);
    CHECK(out.degree() == 5);
    CHECK(out.mark_count() == 2);

    // grafting an unmarked scion below a marked vertex violates closure
    MarkedTree marked_leaf_stock(false, {MarkedTree(true)});
    auto marked_vs = marked_vertices(marked_leaf_stock);
    REQUIRE(marked_vs.size() == 1);
    CHECK_THROWS_AS(graft_at(MarkedTree(false), marked_leaf_stock, marked_vs[0]),
                    ClosureViolation);
}

TEST_CASE("marked cuts of the doubling coproduct example") {
    MarkedTree p(false, {MarkedTree(true)});  // (l2, leaf marked)
    auto cuts = marked_cuts(p);
    REQUIRE(cuts.size() == 2);
    std::multiset<std::string> got;
    for (const MarkedCut& c : cuts)
        got.insert(c.left.text() + "|" + (c.right ? c.right->text() : "-"));
    CHECK(got == std::multiset<std::string>{"(())|(()*)", "(()*)|()"});
}

TEST_CASE("simultaneous grafts target the original vertices") {
    MarkedForest stock = MarkedForest::from_forest(Forest(chain(2)));
    VertexRef root{0, {}};
    VertexRef leafv{0, {0}};
    auto out = graft_many(stock, {{root, MarkedTree(false)}, {leafv, MarkedTree(false)}});
    REQUIRE(out.components().size() == 1);
    CHECK(out.components()[0].text() == "((())())");
}

TEST_CASE("cuts of a marked forest are cuts of its shape") {
    MarkedForest p(MarkedTree(false, {MarkedTree(true)}));
    auto via_marked = admissible_cuts(p);
    auto via_shape = admissible_cuts(p.shape());
    REQUIRE(via_marked.size() == via_shape.size());
    for (std::size_t i = 0; i < via_marked.size(); ++i) {
        CHECK(via_marked[i].pruning == via_shape[i].pruning);
        CHECK(via_marked[i].trunk == via_shape[i].trunk);
    }
}

TEST_CASE("forest enumeration with a factor cap") {
    for (int d = 1; d <= 5; ++d) {
        auto capped = enumerate_forests(d, 1);
        CHECK(capped.size() == enumerate_trees(d).size());
        for (const Forest& f : capped) CHECK(f.components().size() == 1);
    }
}

TEST_CASE("enumeration respects the degree cap") {
    CHECK_THROWS_AS(enumerate_trees(15), ResourceLimit);
    CHECK_THROWS_AS(enumerate_forests(15), ResourceLimit);
    CHECK_THROWS_AS(enumerate_marked_forests(15), ResourceLimit);
}
