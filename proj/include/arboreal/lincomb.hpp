#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace arboreal {

/// Exact arbitrary-precision integer coefficients.
using Int = boost::multiprecision::cpp_int;

/// Finite formal sum over a canonical basis B with integer coefficients.
///
/// B must provide a strict total order (operator<) that coincides with
/// equality of canonical encodings, and text() returning the canonical
/// encoding. Zero coefficients are never stored; term order is the basis
/// order, so printing is deterministic.
template <class B>
class LinComb {
public:
    using Terms = std::map<B, Int>;

    LinComb() = default;
    explicit LinComb(const B& b) { terms_.emplace(b, 1); }
    LinComb(Int c, const B& b) {
        if (c != 0) terms_.emplace(b, std::move(c));
    }

    void add(const Int& c, const B& b) {
        if (c == 0) return;
        auto it = terms_.find(b);
        if (it == terms_.end()) {
            terms_.emplace(b, c);
            return;
        }
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    void add_scaled(const Int& scale, const LinComb& other) {
        for (const auto& [b, c] : other.terms_) add(scale * c, b);
    }

    LinComb& operator+=(const LinComb& o) {
        add_scaled(1, o);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        add_scaled(-1, o);
        return *this;
    }
    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(const Int& c, LinComb a) {
        if (c == 0) return LinComb{};
        for (auto& [b, k] : a.terms_) k *= c;
        return a;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // ref-qualified so a range-for over temp().terms() cannot dangle;
    // iterate the combination itself instead
    const Terms& terms() const& { return terms_; }
    const Terms& terms() && = delete;
    typename Terms::const_iterator begin() const { return terms_.begin(); }
    typename Terms::const_iterator end() const { return terms_.end(); }

    Int coeff(const B& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? Int{0} : it->second;
    }

    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

/// The basis element of a one-term combination.
template <class B>
B sole_basis(const LinComb<B>& x) {
    if (x.term_count() != 1) throw std::invalid_argument("expected exactly one term");
    return x.begin()->first;
}

/// Sum a term list into a combination; equal basis elements merge, zeros drop.
template <class B>
LinComb<B> combine(const std::vector<std::pair<Int, B>>& terms) {
    LinComb<B> out;
    for (const auto& [c, b] : terms) out.add(c, b);
    return out;
}

/// Linear extension of f : B -> LinComb<C>.
template <class B, class F>
auto extend_linear(F&& f, const LinComb<B>& a) {
    using R = std::invoke_result_t<F, const B&>;
    R out;
    for (const auto& [b, c] : a) out.add_scaled(c, f(b));
    return out;
}

/// Bilinear extension of f : B x C -> LinComb<D>.
template <class B, class C, class F>
auto extend_bilinear(F&& f, const LinComb<B>& a, const LinComb<C>& b) {
    using R = std::invoke_result_t<F, const B&, const C&>;
    R out;
    for (const auto& [ba, ca] : a)
        for (const auto& [bb, cb] : b) out.add_scaled(ca * cb, f(ba, bb));
    return out;
}

template <class A, class B>
struct Tensor2 {
    A first;
    B second;

    std::string text() const { return first.text() + " # " + second.text(); }

    friend bool operator<(const Tensor2& x, const Tensor2& y) {
        if (x.first < y.first) return true;
        if (y.first < x.first) return false;
        return x.second < y.second;
    }
    friend bool operator==(const Tensor2& x, const Tensor2& y) {
        return x.first == y.first && x.second == y.second;
    }
};

template <class A, class B, class C>
struct Tensor3 {
    A first;
    B second;
    C third;

    std::string text() const {
        return first.text() + " # " + second.text() + " # " + third.text();
    }

    friend bool operator<(const Tensor3& x, const Tensor3& y) {
        if (x.first < y.first) return true;
        if (y.first < x.first) return false;
        if (x.second < y.second) return true;
        if (y.second < x.second) return false;
        return x.third < y.third;
    }
    friend bool operator==(const Tensor3& x, const Tensor3& y) {
        return x.first == y.first && x.second == y.second && x.third == y.third;
    }
};

template <class A, class B, class C, class D>
struct Tensor4 {
    A first;
    B second;
    C third;
    D fourth;

    std::string text() const {
        return first.text() + " # " + second.text() + " # " + third.text() + " # " +
               fourth.text();
    }

    friend bool operator<(const Tensor4& x, const Tensor4& y) {
        if (x.first < y.first) return true;
        if (y.first < x.first) return false;
        if (x.second < y.second) return true;
        if (y.second < x.second) return false;
        if (x.third < y.third) return true;
        if (y.third < x.third) return false;
        return x.fourth < y.fourth;
    }
    friend bool operator==(const Tensor4& x, const Tensor4& y) {
        return x.first == y.first && x.second == y.second && x.third == y.third &&
               x.fourth == y.fourth;
    }
};

/// Componentwise application (f tensor g), bilinearly recombined.
/// f : A -> LinComb<A2>, g : B -> LinComb<B2>.
template <class A, class B, class F, class G>
auto tensor_apply(F&& f, G&& g, const LinComb<Tensor2<A, B>>& x) {
    using RA = std::invoke_result_t<F, const A&>;
    using RB = std::invoke_result_t<G, const B&>;
    using A2 = typename RA::Terms::key_type;
    using B2 = typename RB::Terms::key_type;
    LinComb<Tensor2<A2, B2>> out;
    for (const auto& [t, c] : x) {
        RA fa = f(t.first);
        RB gb = g(t.second);
        for (const auto& [a2, ca] : fa)
            for (const auto& [b2, cb] : gb)
                out.add(c * ca * cb, Tensor2<A2, B2>{a2, b2});
    }
    return out;
}

/// Swap the middle factors of a 4-tensor: a#b#c#d -> a#c#b#d.
template <class A, class B, class C, class D>
LinComb<Tensor4<A, C, B, D>> tau23(const LinComb<Tensor4<A, B, C, D>>& x) {
    LinComb<Tensor4<A, C, B, D>> out;
    for (const auto& [t, c] : x)
        out.add(c, Tensor4<A, C, B, D>{t.first, t.third, t.second, t.fourth});
    return out;
}

/// m13 = (m tensor I) after tau23: multiplies the first and third factors.
/// mult : (A, A) -> A must be the basis-level product (forest concatenation).
template <class A, class B, class D, class M>
LinComb<Tensor3<A, B, D>> m13(const LinComb<Tensor4<A, B, A, D>>& x, M&& mult) {
    LinComb<Tensor3<A, B, D>> out;
    for (const auto& [t, c] : x)
        out.add(c, Tensor3<A, B, D>{mult(t.first, t.third), t.second, t.fourth});
    return out;
}

}  // namespace arboreal
