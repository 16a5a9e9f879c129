// Command-line front end: evaluates Grassmann-algebra expressions and runs
// the library's structural self-checks.
//
// Exit codes: 0 success, 2 expression parse error, 3 not invertible,
// 4 configuration error, 5 internal invariant violation.

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <grassbanach/grassbanach.hpp>

namespace {

using namespace grassbanach;

field_descriptor parse_field_spec(const std::string& spec) {
    if (spec == "real" || spec == "real64") return field_descriptor::real64();
    if (spec == "rational") return field_descriptor::rational();
    if (spec.rfind("padic=", 0) == 0) {
        const std::string rest = spec.substr(6);
        const std::size_t colon = rest.find(':');
        const std::string p_text = rest.substr(0, colon);
        std::uint64_t p = 0;
        auto pr = std::from_chars(p_text.data(), p_text.data() + p_text.size(), p);
        if (pr.ec != std::errc() || pr.ptr != p_text.data() + p_text.size() || p_text.empty())
            throw config_error("invalid p-adic prime \"" + p_text + "\"");
        int precision = 20;
        if (colon != std::string::npos) {
            const std::string prec_text = rest.substr(colon + 1);
            auto qr =
                std::from_chars(prec_text.data(), prec_text.data() + prec_text.size(), precision);
            if (qr.ec != std::errc() || qr.ptr != prec_text.data() + prec_text.size() ||
                prec_text.empty())
                throw config_error("invalid p-adic precision \"" + prec_text + "\"");
        }
        return field_descriptor::padic(p, precision);
    }
    throw config_error("unknown field \"" + spec +
                       "\" (expected real, rational, or padic=p[:prec])");
}

ordering_function load_ordering(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open ordering file \"" + path + "\"");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw config_error("ordering file is not valid JSON: " + std::string(e.what()));
    }
    return ordering_from_json(j);
}

std::string read_expression(const std::string& arg) {
    if (arg != "-") return arg;
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
}

int run_eval(const std::string& expr_arg, const std::string& field_spec,
             const std::string& norm_spec, const std::string& format_spec,
             const std::string& ordering_path) {
    session_config cfg;
    cfg.field = parse_field_spec(field_spec);
    cfg.norm = norm_spec == "linf" ? norm_mode::linf : norm_mode::l1;
    cfg.format = format_spec == "json" ? output_format::json : output_format::text;
    if (!ordering_path.empty()) cfg.ordering = load_ordering(ordering_path);
    validate(cfg);

    const std::string text = read_expression(expr_arg);
    const expr_ptr ast = parse_expression(text, cfg.field);
    const eval_result result = evaluate(ast, cfg);
    const std::string rendered = render(result, cfg);
    std::cout << rendered << "\n";
    return 0;
}

int run_check(bool inject_fault) {
    std::ostringstream report;
    const bool ok = run_property_checks(report, inject_fault);
    std::cout << report.str();
    if (!ok) {
        std::cerr << "internal invariant violation: self-check failed\n";
        return 5;
    }
    std::cout << "all checks passed\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grassmann-Banach algebra calculator"};
    app.require_subcommand(1);

    std::string expr_arg;
    std::string field_spec = "rational";
    std::string norm_spec = "l1";
    std::string format_spec = "text";
    std::string ordering_path;
    CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate an expression");
    eval_cmd->add_option("expr", expr_arg, "Expression text, or '-' to read stdin")->required();
    eval_cmd->add_option("--field", field_spec, "Coefficient field: real|rational|padic=p[:prec]");
    eval_cmd->add_option("--norm", norm_spec, "Norm used by norm(...): l1|linf")
        ->check(CLI::IsMember({"l1", "linf"}));
    eval_cmd->add_option("--format", format_spec, "Output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    eval_cmd->add_option("--ordering", ordering_path, "JSON file with an ordering table");

    bool inject_fault = false;
    CLI::App* check_cmd = app.add_subcommand("check", "Run structural self-checks");
    check_cmd->add_flag("--inject-fault", inject_fault,
                        "Deliberately corrupt one check to exercise the failure path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 4;
    }

    try {
        if (eval_cmd->parsed())
            return run_eval(expr_arg, field_spec, norm_spec, format_spec, ordering_path);
        return run_check(inject_fault);
    } catch (const parse_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const not_invertible& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const division_by_zero& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const not_ultrametric& e) {
        std::cerr << e.what() << "\n";
        return 4;
    } catch (const config_error& e) {
        std::cerr << e.what() << "\n";
        return 4;
    } catch (const invalid_descriptor& e) {
        std::cerr << e.what() << "\n";
        return 4;
    } catch (const invalid_ordering& e) {
        std::cerr << e.what() << "\n";
        return 4;
    } catch (const descriptor_mismatch& e) {
        std::cerr << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    }
}
