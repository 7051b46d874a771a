#pragma once

#include "lincomb.hpp"
#include "trees.hpp"

namespace arboreal {

/// Connes-Kreimer coproduct: sum of pruning # trunk over all admissible cuts
/// (trivial cuts included, giving the 1#f and f#1 terms). Multiplicative over
/// forest components.
inline LinComb<Tensor2<Forest, Forest>> ck_coproduct(const Forest& f) {
    LinComb<Tensor2<Forest, Forest>> out;
    for (const CutEntry& cut : admissible_cuts(f))
        out.add(1, Tensor2<Forest, Forest>{cut.pruning, cut.trunk});
    return out;
}

inline Int ck_counit(const Forest& f) { return f.empty() ? 1 : 0; }

/// Antipode of the connected graded bialgebra H, by the standard recursion
/// S(f) = -f - sum over nontrivial cuts of S(P) R.
inline LinComb<Forest> ck_antipode(const Forest& f) {
    if (f.empty()) return LinComb<Forest>(Forest{});
    LinComb<Forest> s;
    s.add(-1, f);
    for (const CutEntry& cut : admissible_cuts(f)) {
        if (cut.pruning.empty() || cut.trunk.empty()) continue;
        LinComb<Forest> sp = ck_antipode(cut.pruning);
        for (const auto& [b, c] : sp) s.add(-c, b * cut.trunk);
    }
    return s;
}

}  // namespace arboreal
