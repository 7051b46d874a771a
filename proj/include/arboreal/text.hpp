#pragma once

#include "lincomb.hpp"
#include "trees.hpp"

#include <cctype>
#include <string>
#include <string_view>

namespace arboreal {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

/// Input is well-formed but of the wrong kind for the requested operation
/// (e.g. marks where a plain tree is required).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

// Grammar:
//   Expr   := Term ((' + '|' - ') Term)*
//   Term   := [Integer ' '] Forest | '0'
//   Forest := '1' | Tree (' ' Tree)*
//   Tree   := '(' Tree* ')' Mark?     Mark := '*'
// Whitespace between tokens is tolerated beyond the canonical single space.
class ExprParser {
public:
    explicit ExprParser(std::string_view text) : s_(text) {}

    LinComb<MarkedForest> parse() {
        skip_ws();
        LinComb<MarkedForest> out = parse_term(1);
        skip_ws();
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            Int sign;
            if (c == '+')
                sign = 1;
            else if (c == '-')
                sign = -1;
            else
                throw ParseError("expected '+' or '-'", pos_);
            ++pos_;
            skip_ws();
            out += parse_term(sign);
            skip_ws();
        }
        return out;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
    }

    bool at_integer_start() const {
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return true;
        if ((c == '-' || c == '+') && pos_ + 1 < s_.size() &&
            std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])))
            return true;
        return false;
    }

    LinComb<MarkedForest> parse_term(const Int& sign) {
        Int coeff = 1;
        bool had_int = false;
        std::string raw;
        if (at_integer_start()) {
            std::size_t start = pos_;
            if (s_[pos_] == '-' || s_[pos_] == '+') ++pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            raw = std::string(s_.substr(start, pos_ - start));
            coeff = Int(raw);
            had_int = true;
            skip_ws();
        }
        if (pos_ >= s_.size() || (s_[pos_] != '(' && s_[pos_] != '1')) {
            // a bare integer is only grammatical as the literals 0 and 1
            if (had_int && coeff == 0) return {};
            if (had_int && raw == "1") return LinComb<MarkedForest>(sign, MarkedForest{});
            throw ParseError("expected a forest", pos_);
        }
        MarkedForest f = parse_forest();
        return LinComb<MarkedForest>(sign * coeff, f);
    }

    MarkedForest parse_forest() {
        if (s_[pos_] == '1') {
            ++pos_;
            return MarkedForest{};
        }
        std::vector<MarkedTree> trees;
        trees.push_back(parse_tree());
        while (true) {
            std::size_t save = pos_;
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '(') {
                trees.push_back(parse_tree());
            } else {
                pos_ = save;
                break;
            }
        }
        return MarkedForest(std::move(trees));
    }

    MarkedTree parse_tree() {
        if (pos_ >= s_.size() || s_[pos_] != '(') throw ParseError("expected '('", pos_);
        std::size_t open = pos_;
        ++pos_;
        std::vector<MarkedTree> children;
        while (true) {
            if (pos_ >= s_.size()) throw ParseError("unbalanced '('", open);
            if (s_[pos_] == ')') {
                ++pos_;
                break;
            }
            if (s_[pos_] == '(')
                children.push_back(parse_tree());
            else
                throw ParseError("expected '(' or ')'", pos_);
        }
        bool marked = false;
        if (pos_ < s_.size() && s_[pos_] == '*') {
            marked = true;
            ++pos_;
        }
        try {
            return MarkedTree(marked, std::move(children));
        } catch (const InvalidMarks&) {
            throw InvalidMarks("marks are not descendant-closed at position " +
                               std::to_string(open));
        }
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse an expression into a canonicalized combination of marked forests;
/// plain trees and forests come out with empty mark sets.
inline LinComb<MarkedForest> parse_expr(std::string_view text) {
    return detail::ExprParser(text).parse();
}

template <class B>
std::string print_canonical(const LinComb<B>& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [b, c] : x) {
        Int a = c;
        if (first) {
            if (a == -1)
                out += "-1 ";
            else if (a != 1)
                out += a.str() + " ";
        } else {
            if (a > 0) {
                out += " + ";
            } else {
                out += " - ";
                a = -a;
            }
            if (a != 1) out += a.str() + " ";
        }
        out += b.text();
        first = false;
    }
    return out;
}

namespace detail {

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace detail

/// JSON export: array of {coeff: decimal string, basis: canonical text}.
template <class B>
std::string json_of(const LinComb<B>& x) {
    std::string out = "[";
    bool first = true;
    for (const auto& [b, c] : x) {
        if (!first) out += ",";
        out += "{\"coeff\":\"" + c.str() + "\",\"basis\":\"" + detail::json_escape(b.text()) +
               "\"}";
        first = false;
    }
    out += "]";
    return out;
}

// ---------------------------------------------------------------------------
// Input casts: narrow a parsed combination to the kind an operation expects.
// ---------------------------------------------------------------------------

inline LinComb<Forest> as_plain_forests(const LinComb<MarkedForest>& x) {
    LinComb<Forest> out;
    for (const auto& [b, c] : x) {
        if (b.mark_count() != 0) throw InputError("expected an unmarked forest: " + b.text());
        out.add(c, b.shape());
    }
    return out;
}

inline LinComb<Tree> as_plain_trees(const LinComb<MarkedForest>& x) {
    LinComb<Tree> out;
    for (const auto& [b, c] : x) {
        if (b.mark_count() != 0 || b.components().size() != 1)
            throw InputError("expected a single unmarked tree: " + b.text());
        out.add(c, b.components()[0].shape());
    }
    return out;
}

inline LinComb<MarkedTree> as_marked_trees(const LinComb<MarkedForest>& x) {
    LinComb<MarkedTree> out;
    for (const auto& [b, c] : x) {
        if (b.components().size() != 1)
            throw InputError("expected a single marked tree: " + b.text());
        out.add(c, b.components()[0]);
    }
    return out;
}

}  // namespace arboreal
