#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"

#include <arboreal/doubling.hpp>
#include <arboreal/enveloping.hpp>
#include <arboreal/grafting.hpp>
#include <arboreal/text.hpp>

using namespace arboreal;

namespace {
Tree leaf() { return Tree(); }
Tree chain(int n) {
    Tree t;
    for (int i = 1; i < n; ++i) t = Tree(std::vector<Tree>{t});
    return t;
}
Forest forest(const char* text) {
    auto c = as_plain_forests(parse_expr(text));
    REQUIRE(c.term_count() == 1);
    return c.terms().begin()->first;
}
Int binom(int n, int k) {
    Int r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}
}  // namespace

TEST_CASE("grafting the single vertex on the 2-chain") {
    auto g = graft_sum(leaf(), chain(2));
    CHECK(print_canonical(g) == "((())) + (()())");
    CHECK(print_canonical(graft_sum(leaf(), leaf())) == "(())");
}

TEST_CASE("grafting coefficients accumulate on isomorphic results") {
    // l2 -> cherry grafts the chain on each of the two equal leaves
    auto g = graft_sum(chain(2), Tree({leaf(), leaf()}));
    CHECK(g.coeff(sole_basis(as_plain_trees(parse_expr("(((()))())")))) == 2);
}

TEST_CASE("bracket is antisymmetric and matches the expansion") {
    LinComb<Tree> dot{leaf()}, l2{chain(2)};
    CHECK(prelie_bracket(dot, dot).is_zero());
    auto lhs = prelie_bracket(dot, l2);
    auto rhs = graft_sum(dot, l2) - graft_sum(l2, dot);
    CHECK(lhs == rhs);
    CHECK(prelie_bracket(l2, dot) == LinComb<Tree>{} - lhs);
    // l2 -> dot is the 3-chain, so [dot, l2] = cherry only
    CHECK(print_canonical(lhs) == "(()())");
}

TEST_CASE("unshuffle splits by positions with binomial multiplicities") {
    Forest xx = forest("() ()");
    auto g = unshuffle(xx);
    CHECK(g.coeff({forest("()"), forest("()")}) == 2);
    CHECK(g.coeff({Forest{}, xx}) == 1);
    CHECK(g.coeff({xx, Forest{}}) == 1);

    Forest xy = forest("(()) ()");
    auto g2 = unshuffle(xy);
    CHECK(g2.term_count() == 4);
    for (const auto& [t, c] : g2) CHECK(c == 1);

    // x^k splits with binomial coefficients
    for (int k = 1; k <= 5; ++k) {
        std::vector<Tree> xs(static_cast<std::size_t>(k), leaf());
        auto gk = unshuffle(Forest(xs));
        for (int j = 0; j <= k; ++j) {
            Forest left(std::vector<Tree>(static_cast<std::size_t>(j), leaf()));
            Forest right(std::vector<Tree>(static_cast<std::size_t>(k - j), leaf()));
            CHECK(gk.coeff({left, right}) == binom(k, j));
        }
    }

    auto g1 = unshuffle(Forest(leaf()));
    CHECK(g1.term_count() == 2);
}

TEST_CASE("extended product base rules") {
    auto ctx = grafting_context();
    Forest l2 = forest("(())");
    CHECK(extended_product(ctx, Forest{}, l2) == LinComb<Forest>{l2});
    CHECK(extended_product(ctx, l2, Forest{}).is_zero());
    CHECK(extended_product(ctx, Forest{}, Forest{}) == LinComb<Forest>{Forest{}});
}

TEST_CASE("extended product of a chain-and-vertex monomial on the 2-chain") {
    auto ctx = grafting_context();
    auto r = extended_product(ctx, forest("(()) ()"), forest("(())"));
    CHECK(r.term_count() == 4);
    for (const auto& [m, c] : r) {
        CHECK(c == 1);
        CHECK(m.components().size() == 1);
        CHECK(m.degree() == 5);
    }
    CHECK(print_canonical(r) == "(((())())) + (((()))()) + ((())(())) + ((())()())");
}

TEST_CASE("star product of a chain-and-vertex monomial on the 2-chain") {
    auto ctx = grafting_context();
    auto st = star(ctx, forest("(()) ()"), forest("(())"));
    CHECK(st.term_count() == 9);
    for (const auto& [m, c] : st) CHECK(c == 1);
    // the four extended-product terms are among the nine
    auto ext = extended_product(ctx, forest("(()) ()"), forest("(())"));
    for (const auto& [m, c] : ext) CHECK(st.coeff(m) == 1);
    CHECK(print_canonical(st) ==
          "(((())())) + (((()))()) + (((()))) () + ((())(())) + ((())()()) + "
          "((())()) () + ((())) (()) + (()()) (()) + (()) (()) ()");
}

TEST_CASE("star of two single vertices") {
    auto ctx = grafting_context();
    CHECK(print_canonical(star(ctx, forest("()"), forest("()"))) == "(()) + () ()");
}

TEST_CASE("star units") {
    auto ctx = grafting_context();
    for (int d = 0; d <= 4; ++d)
        for (const Forest& m : enumerate_forests(d)) {
            CHECK(star(ctx, Forest{}, m) == LinComb<Forest>{m});
            CHECK(star(ctx, m, Forest{}) == LinComb<Forest>{m});
        }
}

TEST_CASE("restriction to single trees: x star y = xy + x > y") {
    auto ctx = grafting_context();
    for (int a = 1; a <= 3; ++a)
        for (const Tree& x : enumerate_trees(a))
            for (int b = 1; b + a <= 6; ++b)
                for (const Tree& y : enumerate_trees(b)) {
                    auto lhs = star(ctx, Forest(x), Forest(y));
                    LinComb<Forest> rhs{Forest(x) * Forest(y)};
                    for (const auto& [t, c] : graft_sum(x, y)) rhs.add(c, Forest(t));
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("extended product agrees with the placement oracle") {
    auto ctx = grafting_context();
    for (int da = 0; da <= 4; ++da)
        for (const Forest& a : enumerate_forests(da))
            for (int db = 0; da + db <= 5; ++db)
                for (const Forest& b : enumerate_forests(db)) {
                    CHECK(extended_product(ctx, a, b) == oracle::ext_graft_oracle(a, b));
                }
}

TEST_CASE("star agrees with the placement oracle") {
    auto ctx = grafting_context();
    for (int da = 0; da <= 4; ++da)
        for (const Forest& a : enumerate_forests(da))
            for (int db = 0; da + db <= 5; ++db)
                for (const Forest& b : enumerate_forests(db))
                    CHECK(star(ctx, a, b) == oracle::star_graft_oracle(a, b));
}

TEST_CASE("rule 4 expansion is internally consistent") {
    auto ctx = grafting_context();
    // a > (b c) = sum (a1 > b)(a2 > c) with b a single factor, c the rest
    std::vector<Forest> monos;
    for (int d = 0; d <= 3; ++d)
        for (const Forest& f : enumerate_forests(d)) monos.push_back(f);
    for (const Forest& a : monos)
        for (const Forest& b : monos) {
            if (b.empty() || a.degree() + b.degree() > 6) continue;
            for (const Forest& c : monos) {
                if (c.empty() || a.degree() + b.degree() + c.degree() > 6) continue;
                auto lhs = extended_product(ctx, a, b * c);
                LinComb<Forest> rhs;
                for (const auto& [sp, k] : unshuffle(a)) {
                    auto l = extended_product(ctx, sp.first, b);
                    auto r = extended_product(ctx, sp.second, c);
                    for (const auto& [ml, cl] : l)
                        for (const auto& [mr, cr] : r) rhs.add(k * cl * cr, ml * mr);
                }
                CHECK(lhs == rhs);
            }
        }
}

TEST_CASE("doubling instantiation matches its placement oracle") {
    auto ctx = doubling_context();
    for (int da = 0; da <= 3; ++da)
        for (const MarkedForest& a : enumerate_marked_forests(da, 2))
            for (int db = 0; da + db <= 4; ++db)
                for (const MarkedForest& b : enumerate_marked_forests(db, 2)) {
                    CHECK(extended_product(ctx, a, b) == oracle::ext_dbl_oracle(a, b));
                    CHECK(star(ctx, a, b) == oracle::star_dbl_oracle(a, b));
                }
}

TEST_CASE("a flipped rule-3 sign breaks the four-term example") {
    auto ctx = grafting_context();
    ctx.rule3_sign = 1;
    auto r = extended_product(ctx, forest("(()) ()"), forest("(())"));
    CHECK(r != oracle::ext_graft_oracle(forest("(()) ()"), forest("(())")));
}
