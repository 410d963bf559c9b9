// skein: command-line front end for the punctured-torus skein engine.
//
//   skein mul "(3,6)*(1,0)" --format latex
//   skein pn 7 --oracle
//   skein classify "(4,3)*(0,1)"
//   skein verify --suite all
//   skein cascade 6 -1
//
// Exit codes: 0 ok, 1 usage or input error, 2 syntax error, 3 unsupported product,
// 4 verification failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "skein/skein.hpp"

namespace {

using skein::Format;
using skein::Normalization;
using skein::SkeinElement;

enum Exit : int {
    kOk = 0,
    kUsage = 1,
    kSyntax = 2,
    kUnsupported = 3,
    kVerifyFailed = 4,
};

struct Options {
    std::string format = "text";
    std::string normalization = "T0";
    std::string json_out;
};

void write_json_file(const std::string& path, const nlohmann::ordered_json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << j.dump(2) << "\n";
}

void emit(const Options& o, const SkeinElement& e) {
    std::cout << skein::render(e, skein::parse_format(o.format),
                               skein::parse_normalization(o.normalization))
              << "\n";
    if (!o.json_out.empty()) write_json_file(o.json_out, skein::to_json(e));
}

int report_syntax(const std::string& input, std::size_t offset, const std::string& what) {
    std::cerr << what << "\n  " << input << "\n  " << std::string(offset, ' ') << "^\n";
    return kSyntax;
}

int report_unsupported(const skein::UnsupportedProduct& e) {
    nlohmann::ordered_json j;
    j["error"] = "unsupported_product";
    j["left"] = e.left;
    j["right"] = e.right;
    j["classification"] = e.classification;
    j["detail"] = e.detail;
    std::cerr << j.dump() << "\n";
    return kUnsupported;
}

// Accepts "(a,b)*(c,d)", "(a,b),(c,d)" or "(a,b) (c,d)".
std::pair<skein::Vec2, skein::Vec2> parse_pair(std::string text) {
    for (std::size_t i = 0; i + 1 < text.size(); ++i) {
        if (text[i] != ')') continue;
        std::size_t j = i + 1;
        while (j < text.size() && (text[j] == ' ' || text[j] == ',')) ++j;
        if (j < text.size() && text[j] == '(' && j > i + 1) {
            text.replace(i + 1, j - i - 1, "*");
            break;
        }
    }
    const skein::Expression e = skein::parse_expression(text);
    using K = skein::Expression::Kind;
    if (e.kind != K::Mul || e.args[0].kind != K::Curve || e.args[1].kind != K::Curve) {
        throw skein::SemanticError(0, "expected two curve literals, e.g. (4,3)*(0,1)");
    }
    return {e.args[0].curve, e.args[1].curve};
}

int cmd_mul(const Options& o, const std::string& expr) {
    emit(o, skein::evaluate(expr));
    return kOk;
}

int cmd_pn(const Options& o, int n, bool oracle) {
    if (n < 1) throw std::invalid_argument("pn: n must be >= 1");
    const SkeinElement closed = skein::p_n_closed(n);
    emit(o, closed);
    if (!oracle) return kOk;
    const bool rec = skein::brute_force_pn(n) == closed;
    const bool dec = skein::decompose_multiply({n, 2 * n}, {1, 0}) == closed;
    std::cout << "recurrence oracle: " << (rec ? "match" : "MISMATCH") << "\n"
              << "decomposition:     " << (dec ? "match" : "MISMATCH") << "\n";
    return rec && dec ? kOk : kVerifyFailed;
}

int cmd_classify(const Options& o, const std::string& text) {
    const auto [u, v] = parse_pair(text);
    const SkeinElement eu = SkeinElement::from_raw(u);
    const SkeinElement ev = SkeinElement::from_raw(v);
    const skein::BasisKey a = eu.terms().begin()->first.key;
    const skein::BasisKey b = ev.terms().begin()->first.key;
    const skein::ProductCase c = skein::classify(a, b);

    nlohmann::ordered_json j;
    j["left"] = skein::to_string(u);
    j["right"] = skein::to_string(v);
    j["case"] = skein::to_string(c);
    j["det"] = skein::det_pair(u, v);
    j["det_primitive"] = skein::det_pair(a.mu(), b.mu());
    j["eta_degree_bound"] = skein::eta_degree_bound(a, b);
    if (a.mu() != b.mu()) {
        const skein::CurvePair cp = skein::analyze_pair(a.mu(), b.mu());
        j["c_plus"] = skein::to_string(cp.c_plus);
        j["c_minus"] = skein::to_string(cp.c_minus);
        j["d_plus"] = cp.d_plus;
        j["d_minus"] = cp.d_minus;
        j["maximal_summand"] = skein::to_string(cp.maximal_summand);
        if (cp.maximal_summand != skein::Summand::None) j["cascade_sign"] = cp.cascade_sign();
    }
    if (skein::parse_format(o.format) == Format::Json) {
        std::cout << j.dump(2) << "\n";
    } else {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const auto& val = it.value();
            std::cout << it.key() << ": "
                      << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
        }
    }
    if (!o.json_out.empty()) write_json_file(o.json_out, j);
    return kOk;
}

int cmd_cascade(const Options& o, int n, int eps, const std::string& mu_text) {
    const skein::Expression e = skein::parse_expression(mu_text);
    if (e.kind != skein::Expression::Kind::Curve) {
        throw skein::SemanticError(0, "--mu expects a curve literal");
    }
    const skein::CurveVector mu = skein::CurveVector::primitive(e.curve.p, e.curve.q);
    emit(o, skein::cascade_G(n, eps, mu));
    return kOk;
}

int cmd_verify(const Options& o, const std::string& suite, const std::string& fixtures_path) {
    if (suite != "appendix" && suite != "properties" && suite != "all") {
        throw std::invalid_argument("unknown suite '" + suite + "'");
    }
    bool ok = true;
    nlohmann::ordered_json report;
    if (suite != "properties") {
        std::vector<skein::Fixture> fixtures;
        if (fixtures_path.empty()) {
            fixtures = skein::default_fixtures();
        } else {
            std::ifstream in(fixtures_path);
            if (!in) throw std::runtime_error("cannot read '" + fixtures_path + "'");
            fixtures = skein::fixtures_from_json(nlohmann::json::parse(in));
        }
        const skein::FixtureReport rep = skein::run_fixtures(fixtures);
        std::cout << skein::to_text(rep);
        report["fixtures"] = skein::to_json(rep);
        ok = ok && rep.passed();
    }
    if (suite != "appendix") {
        nlohmann::ordered_json props = nlohmann::ordered_json::array();
        for (const skein::CheckResult& r : skein::run_property_suite()) {
            std::cout << skein::to_text(r);
            nlohmann::ordered_json pj;
            pj["name"] = r.name;
            pj["status"] = r.passed ? "pass" : "fail";
            pj["cases"] = r.cases;
            pj["failures"] = r.failures;
            props.push_back(std::move(pj));
            ok = ok && r.passed;
        }
        report["properties"] = std::move(props);
    }
    report["status"] = ok ? "pass" : "fail";
    if (!o.json_out.empty()) write_json_file(o.json_out, report);
    std::cout << (ok ? "verify: all checks passed" : "verify: FAILED") << "\n";
    return ok ? kOk : kVerifyFailed;
}

int cmd_fixtures(const Options& o) {
    const nlohmann::ordered_json j = skein::fixtures_to_json(skein::default_fixtures());
    if (o.json_out.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        write_json_file(o.json_out, j);
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact products in the skein algebra of the once-punctured torus"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    app.add_option("--normalization", opt.normalization, "Unit display: T0 or Tprime")
        ->check(CLI::IsMember({"T0", "Tprime"}));
    app.add_option("--json-out", opt.json_out, "Also write the result as JSON to this file");

    std::string expr;
    auto* mul = app.add_subcommand("mul", "Evaluate a product expression");
    mul->add_option("expr", expr, "e.g. \"(3,6)*(1,0)\"")->required();

    int pn_n = 0;
    bool pn_oracle = false;
    auto* pn = app.add_subcommand("pn", "Closed form of (n,2n)_T * (1,0)_T");
    pn->add_option("n", pn_n)->required();
    pn->add_flag("--oracle", pn_oracle, "Cross-check against the recurrence and decomposition");

    std::string pair_text;
    auto* cls = app.add_subcommand("classify", "Show which product rule applies to a pair");
    cls->add_option("pair", pair_text, "e.g. \"(4,3)*(0,1)\"")->required();

    std::string suite = "all";
    std::string fixtures_path;
    auto* ver = app.add_subcommand("verify", "Run the fixture and property suites");
    ver->add_option("--suite", suite, "appendix, properties or all")
        ->check(CLI::IsMember({"appendix", "properties", "all"}));
    ver->add_option("--fixtures", fixtures_path, "Fixture file to use instead of the built-ins");

    auto* fix = app.add_subcommand("fixtures", "Print the built-in fixtures as JSON");

    int cas_n = 0;
    int cas_eps = 1;
    std::string cas_mu = "(0,1)";
    auto* cas = app.add_subcommand("cascade", "Print the cascade sum G_n");
    cas->add_option("n", cas_n)->required();
    cas->add_option("eps", cas_eps, "+1 or -1")->required()->check(CLI::IsMember({1, -1}));
    cas->add_option("--mu", cas_mu, "Primitive direction");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    const std::string* input = nullptr;
    try {
        if (*mul) {
            input = &expr;
            return cmd_mul(opt, expr);
        }
        if (*pn) return cmd_pn(opt, pn_n, pn_oracle);
        if (*cls) {
            input = &pair_text;
            return cmd_classify(opt, pair_text);
        }
        if (*ver) return cmd_verify(opt, suite, fixtures_path);
        if (*fix) return cmd_fixtures(opt);
        if (*cas) {
            input = &cas_mu;
            return cmd_cascade(opt, cas_n, cas_eps, cas_mu);
        }
    } catch (const skein::SyntaxError& e) {
        return report_syntax(input ? *input : "", e.offset, e.what());
    } catch (const skein::SemanticError& e) {
        return report_syntax(input ? *input : "", e.offset, e.what());
    } catch (const skein::UnsupportedProduct& e) {
        return report_unsupported(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
