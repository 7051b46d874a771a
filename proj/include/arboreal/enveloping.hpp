#pragma once

#include "lincomb.hpp"
#include "trees.hpp"

#include <functional>

namespace arboreal {

/// A pre-Lie algebra on a canonical basis, handed to the Oudom-Guin engine.
/// Mono is the symmetric-algebra monomial type over the basis (Forest over
/// Tree, MarkedForest over MarkedTree). rule3_sign is the sign of the
/// correction term in (xa) > b = x > (a > b) - (x > a) > b; it exists so the
/// verifier's mutation tests can corrupt the construction deliberately.
template <class Mono>
struct PreLieContext {
    using Basis = typename Mono::Component;

    std::function<LinComb<Basis>(const Basis&, const Basis&)> product;
    Int rule3_sign{-1};
};

/// Unshuffling coproduct on a monomial: sum over all sub-multisets I of
/// I # (m \ I), positions treated as distinguishable (repeated factors
/// contribute binomial coefficients).
template <class Mono>
LinComb<Tensor2<Mono, Mono>> unshuffle(const Mono& m) {
    const auto& parts = m.components();
    const std::size_t k = parts.size();
    if (k > 20) throw ResourceLimit("monomial too long to unshuffle", 0);
    LinComb<Tensor2<Mono, Mono>> out;
    using Basis = typename Mono::Component;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        std::vector<Basis> in, rest;
        for (std::size_t i = 0; i < k; ++i) {
            if (mask & (std::size_t{1} << i))
                in.push_back(parts[i]);
            else
                rest.push_back(parts[i]);
        }
        out.add(1, Tensor2<Mono, Mono>{Mono(std::move(in)), Mono(std::move(rest))});
    }
    return out;
}

template <class Mono>
LinComb<Mono> extended_product(const PreLieContext<Mono>& ctx, const Mono& a, const Mono& b);

namespace detail {

template <class Mono>
Mono single(const typename Mono::Component& x) {
    return Mono(std::vector<typename Mono::Component>{x});
}

template <class Mono>
Mono drop_first(const Mono& m) {
    auto parts = m.components();
    parts.erase(parts.begin());
    return Mono(std::move(parts));
}

template <class Mono>
LinComb<Mono> ext_left(const PreLieContext<Mono>& ctx, const LinComb<Mono>& a, const Mono& b) {
    LinComb<Mono> out;
    for (const auto& [m, c] : a) out.add_scaled(c, extended_product(ctx, m, b));
    return out;
}

template <class Mono>
LinComb<Mono> ext_right(const PreLieContext<Mono>& ctx, const Mono& a, const LinComb<Mono>& b) {
    LinComb<Mono> out;
    for (const auto& [m, c] : b) out.add_scaled(c, extended_product(ctx, a, m));
    return out;
}

template <class Mono>
LinComb<Mono> mono_mul(const LinComb<Mono>& a, const LinComb<Mono>& b) {
    LinComb<Mono> out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) out.add(ca * cb, ma * mb);
    return out;
}

}  // namespace detail

/// The pre-Lie product extended to symmetric-algebra monomials:
///   1 > b = b,   a > 1 = eps(a) 1,
///   (x a) > b = x > (a > b) - (x > a) > b,
///   a > (b c) = sum (a1 > b)(a2 > c).
/// The right factor is split before the left factor is peeled; the two
/// orders agree, the fixed one makes results reproducible.
template <class Mono>
LinComb<Mono> extended_product(const PreLieContext<Mono>& ctx, const Mono& a, const Mono& b) {
    if (b.empty()) return a.empty() ? LinComb<Mono>(Mono{}) : LinComb<Mono>{};
    if (a.empty()) return LinComb<Mono>(b);
    const auto& bparts = b.components();
    if (bparts.size() >= 2) {
        Mono y = detail::single<Mono>(bparts[0]);
        Mono c = detail::drop_first(b);
        LinComb<Mono> out;
        for (const auto& [split, coef] : unshuffle(a)) {
            LinComb<Mono> lhs = extended_product(ctx, split.first, y);
            LinComb<Mono> rhs = extended_product(ctx, split.second, c);
            out.add_scaled(coef, detail::mono_mul(lhs, rhs));
        }
        return out;
    }
    const auto& aparts = a.components();
    if (aparts.size() == 1) {
        LinComb<Mono> out;
        for (const auto& [t, c] : ctx.product(aparts[0], bparts[0]))
            out.add(c, detail::single<Mono>(t));
        return out;
    }
    Mono x = detail::single<Mono>(aparts[0]);
    Mono rest = detail::drop_first(a);
    LinComb<Mono> out = detail::ext_right(ctx, x, extended_product(ctx, rest, b));
    out.add_scaled(ctx.rule3_sign, detail::ext_left(ctx, extended_product(ctx, x, rest), b));
    return out;
}

/// The enveloping product a * b = sum a1 (a2 > b).
template <class Mono>
LinComb<Mono> star(const PreLieContext<Mono>& ctx, const Mono& a, const Mono& b) {
    LinComb<Mono> out;
    for (const auto& [split, coef] : unshuffle(a)) {
        LinComb<Mono> acted = extended_product(ctx, split.second, b);
        for (const auto& [m, c] : acted) out.add(coef * c, split.first * m);
    }
    return out;
}

template <class Mono>
LinComb<Mono> star(const PreLieContext<Mono>& ctx, const LinComb<Mono>& a,
                   const LinComb<Mono>& b) {
    return extend_bilinear([&](const Mono& x, const Mono& y) { return star(ctx, x, y); }, a, b);
}

}  // namespace arboreal
