// arboreal: exact computations in the Connes-Kreimer and doubling algebras
// of rooted trees, plus a degree-bounded verifier for the structure theorems.

#include <arboreal/arboreal.hpp>

#include "CLI11.hpp"

#include <iostream>
#include <string>
#include <vector>

using namespace arboreal;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(' ');
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(' ');
    return s.substr(a, b - a + 1);
}

// "<op>: <expr> ; <expr>"
struct EvalSpec {
    std::string op;
    std::string lhs;
    std::string rhs;
};

EvalSpec split_eval(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw UsageError("eval wants \"<op>: <expr> ; <expr>\"");
    auto semi = text.find(';', colon);
    if (semi == std::string::npos || text.find(';', semi + 1) != std::string::npos)
        throw UsageError("eval wants exactly one ';' between the two operands");
    return EvalSpec{trim(text.substr(0, colon)), trim(text.substr(colon + 1, semi - colon - 1)),
                    trim(text.substr(semi + 1))};
}

template <class B>
void emit(const LinComb<B>& x, bool json) {
    std::cout << (json ? json_of(x) : print_canonical(x)) << "\n";
}

int run_eval(const std::string& spec, bool json) {
    EvalSpec e = split_eval(spec);
    auto left = parse_expr(e.lhs);
    auto right = parse_expr(e.rhs);
    if (e.op == "graft") {
        emit(extend_bilinear([](const Tree& a, const Tree& b) { return graft_sum(a, b); },
                             as_plain_trees(left), as_plain_trees(right)),
             json);
    } else if (e.op == "bracket") {
        emit(prelie_bracket(as_plain_trees(left), as_plain_trees(right)), json);
    } else if (e.op == "star[ck]") {
        emit(star(grafting_context(), as_plain_forests(left), as_plain_forests(right)), json);
    } else if (e.op == "star[dbl]" || e.op == "bigstar") {
        emit(bigstar(left, right), json);
    } else if (e.op == "leadsto") {
        emit(leadsto(as_marked_trees(left), as_marked_trees(right)), json);
    } else if (e.op == "diamond") {
        emit(diamond(as_plain_trees(left), as_marked_trees(right)), json);
    } else if (e.op == "alpha") {
        emit(alpha(left, as_plain_forests(right)), json);
    } else {
        throw UsageError("unknown eval operation '" + e.op +
                         "' (graft, bracket, star[ck], star[dbl], leadsto, bigstar, diamond, "
                         "alpha)");
    }
    return 0;
}

int run_coproduct(const std::string& algebra, const std::string& expr, bool json) {
    auto input = parse_expr(expr);
    if (algebra == "ck") {
        LinComb<Tensor2<Forest, Forest>> out;
        for (const auto& [f, c] : as_plain_forests(input)) out.add_scaled(c, ck_coproduct(f));
        emit(out, json);
    } else if (algebra == "dbl") {
        LinComb<Tensor2<MarkedForest, MarkedForest>> out;
        for (const auto& [p, c] : input) out.add_scaled(c, d_coproduct(p));
        emit(out, json);
    } else if (algebra == "gamma") {
        LinComb<Tensor2<Forest, Forest>> out;
        for (const auto& [f, c] : as_plain_forests(input)) out.add_scaled(c, unshuffle(f));
        emit(out, json);
    } else if (algebra == "chi") {
        LinComb<Tensor2<MarkedForest, MarkedForest>> out;
        for (const auto& [p, c] : input) out.add_scaled(c, unshuffle(p));
        emit(out, json);
    } else {
        throw UsageError("unknown algebra '" + algebra + "' (ck, dbl, gamma, chi)");
    }
    return 0;
}

int run_enumerate(int n, bool marked, bool json) {
    if (n < 0) throw UsageError("degree must be nonnegative");
    std::vector<std::string> items;
    if (marked)
        for (const MarkedTree& t : enumerate_marked_trees(n)) items.push_back(t.text());
    else
        for (const Tree& t : enumerate_trees(n)) items.push_back(t.text());
    if (json) {
        std::string out = "{\"degree\":" + std::to_string(n) +
                          ",\"count\":" + std::to_string(items.size()) + ",\"items\":[";
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (i) out += ",";
            out += "\"" + detail::json_escape(items[i]) + "\"";
        }
        std::cout << out << "]}\n";
    } else {
        for (const std::string& s : items) std::cout << s << "\n";
        std::cout << "count " << items.size() << "\n";
    }
    return 0;
}

int run_check(const std::string& identity, int bound, bool json) {
    if (bound < 1) throw UsageError("--bound must be >= 1");
    std::vector<Report> reports;
    if (!identity.empty()) {
        auto id = identity_from_name(identity);
        if (!id) throw UsageError("unknown identity '" + identity + "'");
        reports.push_back(check(*id, bound));
    } else {
        reports = run_suite(bound);
    }
    long failed = 0;
    if (json) {
        std::string out = "[";
        for (std::size_t i = 0; i < reports.size(); ++i) {
            if (i) out += ",";
            out += reports[i].to_json();
            if (!reports[i].passed) ++failed;
        }
        std::cout << out << "]\n";
    } else {
        for (const Report& r : reports) {
            std::cout << r.to_text() << "\n";
            if (!r.passed) ++failed;
        }
        std::cout << (reports.size() - static_cast<std::size_t>(failed)) << "/" << reports.size()
                  << " identities passed\n";
    }
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rooted-tree Hopf and pre-Lie computations"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit JSON instead of canonical text");

    std::string eval_spec;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate \"<op>: <expr> ; <expr>\"");
    eval_cmd->add_option("spec", eval_spec, "operation and operands")->required();

    std::string algebra;
    std::string coproduct_expr;
    auto* cop_cmd = app.add_subcommand("coproduct", "expand a coproduct");
    cop_cmd->add_option("--algebra", algebra, "ck, dbl, gamma or chi")->required();
    cop_cmd->add_option("expr", coproduct_expr, "input expression")->required();

    int degree = 1;
    bool marked = false;
    auto* enum_cmd = app.add_subcommand("enumerate", "list canonical trees of a degree");
    enum_cmd->add_option("degree", degree, "number of vertices")->required();
    enum_cmd->add_flag("--marked", marked, "marked trees instead of plain trees");

    std::string identity;
    int bound = 4;
    auto* check_cmd = app.add_subcommand("check", "run the identity verifier");
    check_cmd->add_option("--identity", identity, "restrict to one catalog identity");
    check_cmd->add_option("--bound", bound, "degree bound (default 4)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*eval_cmd) return run_eval(eval_spec, json);
        if (*cop_cmd) return run_coproduct(algebra, coproduct_expr, json);
        if (*enum_cmd) return run_enumerate(degree, marked, json);
        if (*check_cmd) return run_check(identity, bound, json);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << " (completed " << e.completed << ")\n";
        return 2;
    } catch (const InvalidMarks& e) {
        std::cerr << "invalid marks: " << e.what() << "\n";
        return 2;
    } catch (const ClosureViolation& e) {
        std::cerr << "closure violation: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
