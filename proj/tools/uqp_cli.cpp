// Command-line front end: batch verification of the identity registry,
// element evaluation, and a q-shuffle calculator.

#include "uqp/checks.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace uqp;

namespace {

std::string status_str(CheckStatus s) { return s == CheckStatus::Pass ? "pass" : "fail"; }

int cmd_verify(const std::vector<std::string>& names, const ParamOverrides& ov,
               const std::string& report, const std::string& out_path, bool self_test_only,
               bool list_only) {
    if (list_only) {
        for (const CheckDef& d : check_registry())
            std::cout << d.name << "\n    " << d.anchor << "\n";
        return 0;
    }
    std::vector<const CheckDef*> selected;
    if (self_test_only) {
        selected.push_back(find_check("self-test"));
    } else if (names.empty() || (names.size() == 1 && names[0] == "all")) {
        for (const CheckDef& d : check_registry()) selected.push_back(&d);
    } else {
        for (const std::string& n : names) {
            const CheckDef* d = find_check(n);
            if (!d) {
                std::cerr << "unknown check: " << n << "\n";
                return 2;
            }
            selected.push_back(d);
        }
    }

    std::vector<CheckOutcome> outcomes;
    bool all_pass = true;
    for (const CheckDef* d : selected) {
        CheckOutcome o = run_check(*d, ov);
        all_pass = all_pass && o.status == CheckStatus::Pass;
        std::cout << (o.status == CheckStatus::Pass ? "PASS " : "FAIL ") << o.name << "  ["
                  << o.params << "]  " << o.millis << " ms, max " << o.max_terms << " terms";
        if (!o.counterexample.empty()) std::cout << "\n     " << o.counterexample;
        std::cout << std::endl;
        outcomes.push_back(std::move(o));
    }

    if (!report.empty()) {
        std::ostringstream body;
        if (report == "json") {
            nlohmann::json arr = nlohmann::json::array();
            for (const CheckOutcome& o : outcomes) {
                nlohmann::json j{{"name", o.name},
                                 {"anchor", o.anchor},
                                 {"params", o.params},
                                 {"status", status_str(o.status)},
                                 {"millis", o.millis},
                                 {"max_terms", o.max_terms}};
                if (!o.counterexample.empty()) j["counterexample"] = o.counterexample;
                arr.push_back(std::move(j));
            }
            body << arr.dump(2) << "\n";
        } else {
            body << "| check | status | params | time (ms) | max terms |\n";
            body << "|---|---|---|---:|---:|\n";
            for (const CheckOutcome& o : outcomes)
                body << "| " << o.name << " | " << status_str(o.status) << " | " << o.params
                     << " | " << o.millis << " | " << o.max_terms << " |\n";
            for (const CheckOutcome& o : outcomes)
                if (!o.counterexample.empty())
                    body << "\n- `" << o.name << "`: " << o.counterexample << "\n";
        }
        if (out_path.empty() || out_path == "-") {
            std::cout << body.str();
        } else {
            std::ofstream f(out_path);
            f << body.str();
            if (!f) {
                std::cerr << "cannot write " << out_path << "\n";
                return 2;
            }
        }
    }
    return all_pass ? 0 : 1;
}

int cmd_eval(const std::string& expr, const std::string& order_name, bool show_model) {
    PbwOrder order = order_name == "appendix" ? PbwOrder::Appendix : PbwOrder::Main;
    std::istringstream in(expr);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    if (tokens.empty()) {
        std::cerr << "empty expression\n";
        return 2;
    }

    auto parse_damiani = [](const std::string& t) -> std::optional<FreeElement> {
        auto idx = [&](std::size_t at) -> std::optional<int> {
            if (t.size() < at + 2 || t[at] != '[' || t.back() != ']') return std::nullopt;
            try {
                return std::stoi(t.substr(at + 1, t.size() - at - 2));
            } catch (...) {
                return std::nullopt;
            }
        };
        if (t.starts_with("E-")) {
            if (auto n = idx(2)) return damiani_e_minus(*n);
        } else if (t.starts_with("E+")) {
            if (auto n = idx(2)) return damiani_e_plus(*n);
        } else if (t.starts_with("Ed")) {
            if (auto n = idx(2)) return damiani_e_delta(*n);
        }
        return std::nullopt;
    };

    WordLenGuard guard(30);
    if (tokens.size() == 1) {
        if (auto e = parse_damiani(tokens[0])) {
            std::cout << e->to_string() << "\n";
            return 0;
        }
        if (auto g = parse_gen_token(tokens[0])) {
            std::cout << "word image:  " << alternating_word(g->kind, g->index).to_string()
                      << "\n";
            std::cout << "model image: " << gen_image(g->kind, g->index).to_string() << "\n";
            return 0;
        }
        std::cerr << "unrecognized element: " << tokens[0] << "\n";
        return 2;
    }

    Monomial m;
    for (const std::string& t : tokens) {
        auto g = parse_gen_token(t);
        if (!g) {
            std::cerr << "unrecognized generator token: " << t << "\n";
            return 2;
        }
        m.push_back(*g);
    }
    try {
        NormalForm nf = normal_form(m, order);
        std::cout << nf.to_string() << "\n";
        if (show_model) std::cout << "model: " << to_model(nf).to_string() << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}

int cmd_shuffle(const std::string& expr, int max_len) {
    auto star = expr.find('*');
    if (star == std::string::npos) {
        std::cerr << "expected \"<word> * <word>\"\n";
        return 2;
    }
    auto trim = [](std::string s) {
        std::size_t a = s.find_first_not_of(" \t");
        std::size_t b = s.find_last_not_of(" \t");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    try {
        Word u = words::from_string(trim(expr.substr(0, star)));
        Word v = words::from_string(trim(expr.substr(star + 1)));
        WordLenGuard guard(max_len);
        FreeElement r = shuffle_mul(FreeElement::single(u), FreeElement::single(v));
        std::cout << r.to_string() << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of the alternating central extension identities"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run named identity checks");
    std::vector<std::string> names;
    verify->add_option("--check", names, "check name(s), or 'all' (default)");
    ParamOverrides ov;
    int degree = -1, degree2 = -1, index_bound = -1, grade_bound = -1;
    long iter_cap = -1;
    std::string order_name = "both", report, out_path;
    bool self_test_only = false, list_only = false;
    verify->add_option("--max-degree", degree, "series truncation N");
    verify->add_option("--degree2", degree2, "two-variable series truncation");
    verify->add_option("--index-bound", index_bound, "generator/rule index bound");
    verify->add_option("--grade-bound", grade_bound, "independence grade bound");
    verify->add_option("--iter-cap", iter_cap, "rewrite iteration cap");
    verify->add_option("--order", order_name, "main|appendix|both (two-order checks)")
        ->check(CLI::IsMember({"main", "appendix", "both"}));
    verify->add_option("--report", report, "json|md")->check(CLI::IsMember({"json", "md"}));
    verify->add_option("--out", out_path, "report file path ('-' for stdout)");
    verify->add_flag("--self-test", self_test_only, "run only the mutation self-test");
    verify->add_flag("--list", list_only, "list registered checks");

    // eval
    auto* eval = app.add_subcommand("eval", "print a named element or a normal form");
    std::string expr;
    std::string eval_order = "main";
    bool show_model = false;
    eval->add_option("expression", expr,
                     "E-[n] | E+[n] | Ed[n] | W[k] | G[k] | Gt[k], or a product of "
                     "generator tokens")
        ->required();
    eval->add_option("--order", eval_order, "main|appendix")
        ->check(CLI::IsMember({"main", "appendix"}));
    eval->add_flag("--model", show_model, "also print the model image of the normal form");

    // shuffle
    auto* shuffle = app.add_subcommand("shuffle", "q-shuffle calculator");
    std::string shuffle_expr;
    int max_len = 14;
    shuffle->add_option("expression", shuffle_expr, "\"<word> * <word>\" over letters x,y")
        ->required();
    shuffle->add_option("--max-word-len", max_len, "word length cap (default 14)");

    CLI11_PARSE(app, argc, argv);

    if (verify->parsed()) {
        if (degree >= 0) ov.degree = degree;
        if (degree2 >= 0) ov.degree2 = degree2;
        if (index_bound >= 0) ov.index_bound = index_bound;
        if (grade_bound >= 0) ov.grade_bound = grade_bound;
        if (iter_cap >= 0) ov.iter_cap = iter_cap;
        if (order_name == "main") ov.order = OrderFilter::MainOnly;
        if (order_name == "appendix") ov.order = OrderFilter::AppendixOnly;
        return cmd_verify(names, ov, report, out_path, self_test_only, list_only);
    }
    if (eval->parsed()) return cmd_eval(expr, eval_order, show_model);
    if (shuffle->parsed()) return cmd_shuffle(shuffle_expr, max_len);
    return 2;
}
