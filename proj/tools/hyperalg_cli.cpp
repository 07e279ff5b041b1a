#include <CLI11.hpp>
#include <iostream>

#include "hyperalg/parser.hpp"
#include "hyperalg/report_io.hpp"

namespace {

using namespace halg;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapRefused = 3;

Tuple parse_pairs_flag(const std::string& s, uint32_t p) {
    Tuple t;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t comma = s.find(',', pos);
        std::string item = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("pair '" + item + "' must look like a:2j");
        uint32_t a = uint32_t(std::stoul(item.substr(0, colon)));
        uint32_t tj = uint32_t(std::stoul(item.substr(colon + 1)));
        t.push_back(make_pair(a, tj, p));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (t.empty()) throw std::invalid_argument("empty pair list");
    return t;
}

EpsVec parse_eps_flag(const std::string& s) {
    EpsVec e;
    for (char c : s) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("eps must be a bit string");
        e.push_back(uint8_t(c - '0'));
    }
    return e;
}

int run_eval(const std::string& expr, uint32_t p, uint32_t r) {
    Element e = parse_element(expr, p);
    std::cout << e.to_string() << "\n";
    std::cout << "in U_" << r << ": " << (e.in_ur(r) ? "yes" : "no")
              << "   in A_" << r << ": " << (e.in_ar(r) ? "yes" : "no")
              << "   in U_" << r << "^0: " << (e.in_ur0(r) ? "yes" : "no") << "\n";
    return kExitOk;
}

int run_blocks(uint32_t p, uint32_t r, const std::string& format, uint64_t dim_cap) {
    auto reports = block_decomposition(p, r, dim_cap, format != "dot");
    bool all_ok = true;
    if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& rep : reports) j.push_back(report_to_json(rep));
        std::cout << j.dump(2) << "\n";
    } else if (format == "dot") {
        for (const auto& rep : reports) std::cout << report_to_dot(rep, p);
    } else {
        for (const auto& rep : reports) std::cout << report_to_text(rep);
    }
    for (const auto& rep : reports) all_ok = all_ok && rep.all_checks_pass();
    return all_ok ? kExitOk : kExitCheckFailure;
}

int run_pim(uint32_t p, uint32_t r, const std::string& pairs_flag,
            const std::string& eps_flag, const std::string& format) {
    Tuple t = parse_pairs_flag(pairs_flag, p);
    if (t.size() != r) throw std::invalid_argument("pair list length must equal r");
    EpsVec eps = parse_eps_flag(eps_flag);
    if (eps.size() != r) throw std::invalid_argument("eps length must equal r");
    for (uint32_t s = 0; s < r; ++s)
        if (eps[s] && is_free_position(t[s], p))
            throw std::invalid_argument("eps not in X_r: position " + std::to_string(s) +
                                        " must be 0");
    BlockReport rep = block_report(t, p, true);
    size_t idx = 0;
    XSet xs = x_set(t, p);
    while (xs.members[idx] != eps) ++idx;
    const PimReport& pim = rep.pims[idx];
    if (format == "json") {
        nlohmann::json j = report_to_json(rep);
        nlohmann::json out = j["pims"][idx];
        out["tuple"] = j["tuple"];
        out["checks"] = j["checks"];
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "pim eps=" << eps_to_string(pim.eps) << " of block ("
                  << tuple_to_string(t) << ")\n";
        std::cout << "  basis:";
        for (const EpsVec& th : pim_basis(eps, xs)) std::cout << " " << eps_to_string(th);
        std::cout << "\n  dim=" << pim.dim << " loewy=[";
        for (size_t i = 0; i < pim.loewy.size(); ++i)
            std::cout << (i ? "," : "") << pim.loewy[i];
        std::cout << "] rigid=" << (pim.rigid ? "yes" : "no") << "\n";
        for (auto& [k, v] : rep.checks)
            std::cout << "  check " << k << ": " << (v ? "pass" : "FAIL") << "\n";
    }
    return rep.all_checks_pass() ? kExitOk : kExitCheckFailure;
}

int run_verify(uint32_t p, uint32_t r, const std::string& level, uint64_t seed,
               uint64_t dim_cap, const std::string& format, uint32_t oracle_degree) {
    auto checks = verify_suite(p, r, level == "full", seed, dim_cap, oracle_degree);
    bool all_ok = true;
    for (const auto& c : checks) all_ok = all_ok && c.pass;
    if (format == "json") {
        nlohmann::json j;
        j["p"] = p;
        j["r"] = r;
        j["level"] = level;
        j["pass"] = all_ok;
        j["checks"] = checks_to_json(checks);
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& c : checks) {
            std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << " (" << c.grid
                      << ") " << c.detail;
            if (!c.pass)
                std::cout << "  [repro: hyperalg verify --p " << p << " --r " << r
                          << " --level " << level << " --seed " << seed << "]";
            std::cout << "\n";
        }
        std::cout << (all_ok ? "all checks passed" : "CHECK FAILURES") << "\n";
    }
    return all_ok ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact structure computations for the degree-0 subalgebra of the "
                 "hyperalgebra of SL2 Frobenius kernels"};
    app.require_subcommand(1);

    uint32_t p = 2, r = 1;
    uint64_t seed = 0, dim_cap = 65536;
    uint32_t oracle_degree = 0;
    std::string format = "text", level = "full", pairs_flag, eps_flag, expr;

    auto add_common = [&](CLI::App* sub, bool needs_r) {
        sub->add_option("--p", p, "prime modulus")->required()->check([](const std::string& v) {
            return halg::is_prime(uint32_t(std::stoul(v))) ? "" : "p must be prime";
        });
        auto* ro = sub->add_option("--r", r, "Frobenius-kernel level (r >= 1)")
                       ->check(CLI::PositiveNumber);
        if (needs_r) ro->required();
        sub->add_option("--seed", seed, "seed for randomized sampling");
        sub->add_option("--dim-cap", dim_cap, "refuse computations with p^{2r} above this");
        sub->add_option("--oracle-degree", oracle_degree,
                        "operator-oracle degree bound (default 2*p^r)");
        sub->add_option("--format", format, "text|json|dot")
            ->check(CLI::IsMember({"text", "json", "dot"}));
    };

    auto* cmd_eval = app.add_subcommand("eval", "evaluate an element expression");
    add_common(cmd_eval, false);
    cmd_eval->add_option("expr", expr, "expression")->required();

    auto* cmd_blocks = app.add_subcommand("blocks", "report every block of A_r");
    add_common(cmd_blocks, true);

    auto* cmd_pim = app.add_subcommand("pim", "report one projective indecomposable");
    add_common(cmd_pim, true);
    cmd_pim->add_option("--pairs", pairs_flag, "comma-joined pairs a:2j")->required();
    cmd_pim->add_option("--eps", eps_flag, "bit string, eps_0 first")->required();

    auto* cmd_verify = app.add_subcommand("verify", "run the verification suites");
    add_common(cmd_verify, true);
    cmd_verify->add_option("--level", level, "quick|full")
        ->check(CLI::IsMember({"quick", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (cmd_eval->parsed()) return run_eval(expr, p, r);
        if (cmd_blocks->parsed()) return run_blocks(p, r, format, dim_cap);
        if (cmd_pim->parsed()) return run_pim(p, r, pairs_flag, eps_flag, format);
        if (cmd_verify->parsed())
            return run_verify(p, r, level, seed, dim_cap, format, oracle_degree);
    } catch (const halg::CapExceeded& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitCapRefused;
    } catch (const halg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitUsage;
}
