#include <CLI11.hpp>

#include <iostream>

#include "ptower/checks.hpp"

namespace {

using namespace ptower;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitPrecision = 2;
constexpr int kExitUsage = 3;

struct Options {
    RunConfig cfg;
    std::string format = "text";

    OutputFormat output_format() const {
        return format == "json" ? OutputFormat::Json : OutputFormat::Text;
    }
};

void add_common_flags(CLI::App* cmd, Options& opt, bool with_tower_flags) {
    cmd->add_option("--p", opt.cfg.p, "odd prime p")->capture_default_str();
    cmd->add_option("--m", opt.cfg.m, "cyclotomic level m")->capture_default_str();
    if (with_tower_flags) {
        cmd->add_option("--n", opt.cfg.n, "root level n")->capture_default_str();
    }
    cmd->add_option("--precision", opt.cfg.precision, "working precision N (residues mod p^N)")
        ->envname("PTOWER_PRECISION")
        ->capture_default_str();
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_flag("--heavy", opt.cfg.heavy,
                  "run norm checks whose tower degree exceeds " +
                      std::to_string(kHeavyDegreeLimit));
}

nlohmann::ordered_json envelope(const Options& opt) {
    return nlohmann::ordered_json{{"p", opt.cfg.p},
                                  {"m", opt.cfg.m},
                                  {"n", opt.cfg.n},
                                  {"precision", opt.cfg.precision}};
}

int cmd_table(const Options& opt) {
    require_odd_prime(opt.cfg.p);
    const UniformizerRecipe recipe = build_theorem2(opt.cfg.p, opt.cfg.precision);
    if (opt.output_format() == OutputFormat::Json) {
        auto doc = envelope(opt);
        doc["recipe"] = recipe_to_json(recipe);
        doc["checks"] = nlohmann::ordered_json::array();
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << render_table_line(recipe) << "\n";
    }
    return kExitOk;
}

int cmd_verify(const Options& opt) {
    const VerifyReport report = run_verify_suite(opt.cfg);
    if (opt.output_format() == OutputFormat::Json) {
        auto doc = envelope(opt);
        if (opt.cfg.m == 2) {
            doc["recipe"] = recipe_to_json(build_theorem2(opt.cfg.p, opt.cfg.precision));
        }
        auto checks = nlohmann::ordered_json::array();
        for (const auto& c : report.checks) {
            checks.push_back({{"name", c.name},
                              {"pass", c.pass},
                              {"valuation", c.valuation},
                              {"exact", c.exact},
                              {"skipped", c.skipped},
                              {"note", c.note}});
        }
        doc["checks"] = std::move(checks);
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& c : report.checks) {
            const char* status = c.skipped ? "SKIP" : (c.pass ? "PASS" : "FAIL");
            std::cout << "[" << status << "] " << c.name;
            if (!c.skipped) {
                std::cout << "  V=" << c.valuation << (c.exact ? " (exact)" : " (lower bound)");
            }
            if (!c.note.empty()) std::cout << "  -- " << c.note;
            std::cout << "\n";
        }
        std::cout << (report.all_pass ? "all checks passed" : "CHECKS FAILED") << "\n";
    }
    return report.all_pass ? kExitOk : kExitCheckFailure;
}

int cmd_search(const Options& opt) {
    require_odd_prime(opt.cfg.p);
    if (opt.cfg.m < 2) throw std::invalid_argument("search requires m >= 2");
    const auto hits = search_exceptional_l(opt.cfg.p, opt.cfg.m);
    const unsigned long d = coeff_threshold_d(opt.cfg.p, opt.cfg.m);
    if (opt.output_format() == OutputFormat::Json) {
        auto doc = envelope(opt);
        doc["d"] = d;
        auto arr = nlohmann::ordered_json::array();
        for (const auto l : hits) {
            arr.push_back({{"l", l}, {"ord", 1}, {"coprime_to_p", true}});
        }
        doc["hits"] = std::move(arr);
        std::cout << doc.dump(2) << "\n";
    } else {
        if (hits.empty()) {
            std::cout << "no l in [1, " << d - 1 << "] with p || a_l and p not dividing l\n";
        } else {
            std::string s = "[";
            for (size_t i = 0; i < hits.size(); ++i) {
                if (i > 0) s += ", ";
                s += std::to_string(hits[i]);
            }
            std::cout << s << "]\n";
        }
    }
    return kExitOk;
}

int cmd_coeffs(const Options& opt) {
    require_odd_prime(opt.cfg.p);
    if (opt.cfg.m < 2) throw std::invalid_argument("coeffs requires m >= 2");
    const MinimalPoly f = minimal_poly(opt.cfg.p, opt.cfg.m, opt.cfg.precision);
    const auto records = check_case_congruences(opt.cfg.p, opt.cfg.m);
    const unsigned long d = coeff_threshold_d(opt.cfg.p, opt.cfg.m);

    if (opt.output_format() == OutputFormat::Json) {
        auto doc = envelope(opt);
        doc["d"] = d;
        auto rows = nlohmann::ordered_json::array();
        for (unsigned long l = 1; l < f.phi(); ++l) {
            const CaseTag tag = classify(l, opt.cfg.p, opt.cfg.m);
            nlohmann::ordered_json row{{"l", l},
                                       {"case", case_name(tag.c)},
                                       {"ord", ord_p(f.exact_coeffs[l], opt.cfg.p)},
                                       {"coeff", f.exact_coeffs[l].get_str()}};
            if (l < d) {
                const auto& rec = records[l - 1];
                row["residue_mod_p2"] = rec.residue_mod_p2.get_str();
                row["pass"] = rec.pass;
            }
            rows.push_back(std::move(row));
        }
        doc["coeffs"] = std::move(rows);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "p=" << opt.cfg.p << " m=" << opt.cfg.m << " phi=" << f.phi()
                  << " d=" << d << "\n";
        for (unsigned long l = 1; l < f.phi(); ++l) {
            const CaseTag tag = classify(l, opt.cfg.p, opt.cfg.m);
            std::cout << "l=" << l << "  case " << case_name(tag.c)
                      << "  ord=" << ord_p(f.exact_coeffs[l], opt.cfg.p);
            if (l < d) {
                const auto& rec = records[l - 1];
                std::cout << "  a_l mod p^2 = " << rec.residue_mod_p2.get_str() << "  "
                          << (rec.pass ? "ok" : "VIOLATION");
            }
            std::cout << "  a_l = " << f.exact_coeffs[l].get_str() << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"explicit uniformizers of Q_p(zeta_{p^2}, p^{1/p}): tables and verification"};
    app.require_subcommand(1);

    Options opt;
    auto* table = app.add_subcommand("table", "print the simplified uniformizer for p");
    add_common_flags(table, opt, false);
    auto* verify = app.add_subcommand("verify", "run the verification suite for p");
    add_common_flags(verify, opt, true);
    auto* search = app.add_subcommand(
        "search", "scan for l below d with p || a_l and p coprime to l");
    add_common_flags(search, opt, false);
    auto* coeffs = app.add_subcommand("coeffs", "dump a_l with case tags and residues");
    add_common_flags(coeffs, opt, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (table->parsed()) return cmd_table(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (search->parsed()) return cmd_search(opt);
        if (coeffs->parsed()) return cmd_coeffs(opt);
    } catch (const ptower::PrecisionError& e) {
        std::cerr << "precision exhausted: " << e.what() << "\n";
        return kExitPrecision;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitUsage;
}
