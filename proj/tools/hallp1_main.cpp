#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hallp1/coeff.hpp"
#include "hallp1/drinfeld.hpp"
#include "hallp1/expr.hpp"
#include "hallp1/hall_global.hpp"
#include "hallp1/json_io.hpp"
#include "hallp1/oracle.hpp"
#include "hallp1/sympoly.hpp"
#include "hallp1/verify.hpp"

namespace {

using namespace hallp1;
using nlohmann::json;

// "-" means: read the actual argument from stdin.
std::string resolve_arg(const std::string& a) {
    if (a != "-") return a;
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
}

void print_oracle_pair(const std::string& format, const json& params, const Int& counted,
                       const Int& closed) {
    if (format == "json") {
        json out{{"params", params},
                 {"count", int_to_json(counted)},
                 {"closed_form", int_to_json(closed)},
                 {"match", counted == closed}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "count:       " << counted.get_str() << "\n"
                  << "closed form: " << closed.get_str() << "\n"
                  << "match:       " << (counted == closed ? "yes" : "NO") << "\n";
    }
}

Int ext_closed_form(long q, int m, int n, int p, int p2) {
    if (p > p2) std::swap(p, p2);
    if (p + p2 != m + n || p < m || p2 > n) return Int(0);
    if (p == m) return int_pow(Int(q), n - m + 1);
    return (Int(q) * Int(q) - 1) * int_pow(Int(q), n - m - 1);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hall algebra of coherent sheaves on the projective line over F_q"};
    app.require_subcommand(1);
    app.fallthrough();

    long q = 2;
    std::string format = "text";
    int max_degree = 6;
    long budget = 20'000'000;
    app.add_option("--q", q, "prime size of the base field")->capture_default_str();
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--max-degree", max_degree, "degree bound for verification")
        ->capture_default_str();
    app.add_option("--budget", budget, "enumeration budget for brute-force oracles")
        ->capture_default_str();

    std::string expr_arg;
    auto* product = app.add_subcommand("product", "evaluate an element expression");
    product->add_option("expr", expr_arg, "expression; '-' reads stdin")->required();

    std::string word_arg;
    auto* normal = app.add_subcommand("normal-form", "straighten a generator word");
    normal->add_option("word", word_arg, "letters like \"h1 g0 g-2\"; '-' reads stdin")
        ->required();

    std::string lam_arg, mu_arg, nu_arg;
    long qx = 0;
    auto* hallnum = app.add_subcommand("hall-number", "one local structure constant");
    hallnum->add_option("lambda", lam_arg)->required();
    hallnum->add_option("mu", mu_arg, "quotient type")->required();
    hallnum->add_option("nu", nu_arg, "subobject type")->required();
    hallnum->add_option("--qx", qx, "residue field size")->required();

    std::vector<std::string> suites;
    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    verify_cmd->add_option("suites", suites, "subset of: zeta series-local series-global pbw "
                                             "relations iso oracle-all (default: all)");

    auto* iso_cmd = app.add_subcommand("iso-check", "two-presentation comparison report");

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force count next to the closed form");
    oracle_cmd->require_subcommand(1);
    int oa = 0, ob = 0, od = 2, om = 0, on = 1, op = 0, op2 = 0;
    std::vector<int> opoly;
    std::string olam, omu, onu;
    auto* o_phi = oracle_cmd->add_subcommand("phi", "coprime pairs of binary forms of fixed degrees");
    o_phi->add_option("--a", oa)->required();
    o_phi->add_option("--b", ob)->required();
    auto* o_quad = oracle_cmd->add_subcommand("quad", "polynomial quadruples H*I - J*L = P at one finite point");
    o_quad->add_option("--d", od, "point degree")->required();
    o_quad->add_option("--a", oa)->required();
    o_quad->add_option("--poly", opoly, "minimal polynomial coefficients, constant first");
    auto* o_ext = oracle_cmd->add_subcommand("ext", "subsheaf count inside a split rank-two bundle");
    o_ext->add_option("--m", om, "subsheaf twist")->required();
    o_ext->add_option("--n", on, "quotient twist")->required();
    o_ext->add_option("--p", op, "first summand twist")->required();
    o_ext->add_option("--p2", op2, "second summand twist")->required();
    auto* o_hall = oracle_cmd->add_subcommand("hall", "submodule count for one type triple");
    o_hall->add_option("lambda", olam)->required();
    o_hall->add_option("mu", omu, "quotient type")->required();
    o_hall->add_option("nu", onu, "subobject type")->required();
    auto* o_aut = oracle_cmd->add_subcommand("aut", "automorphism count of a torsion module");
    o_aut->add_option("lambda", olam)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!is_prime(q)) {
            std::cerr << "error: --q must be prime\n";
            return 2;
        }

        if (product->parsed()) {
            HallElement e = parse_element_expr(resolve_arg(expr_arg), q);
            if (format == "json")
                std::cout << hall_element_to_json(e).dump(2) << "\n";
            else
                std::cout << e.to_string() << "\n";
            return 0;
        }

        if (normal->parsed()) {
            GenWord w = parse_gen_word(resolve_arg(word_arg));
            BElement nf = normal_form(w, q);
            if (format == "json")
                std::cout << b_element_to_json(nf, q).dump(2) << "\n";
            else
                std::cout << b_to_string(nf) << "\n";
            return 0;
        }

        if (hallnum->parsed()) {
            if (qx < 2) {
                std::cerr << "error: --qx must be at least 2\n";
                return 2;
            }
            Int value = hall_number(parse_partition(lam_arg), parse_partition(mu_arg),
                                    parse_partition(nu_arg), qx);
            if (format == "json")
                std::cout << json{{"value", int_to_json(value)}}.dump(2) << "\n";
            else
                std::cout << value.get_str() << "\n";
            return 0;
        }

        if (verify_cmd->parsed()) {
            if (suites.empty()) suites = verify::suite_names();
            bool all_pass = true;
            json jsuites = json::array();
            for (const auto& name : suites) {
                verify::SuiteReport report = verify::run_suite(name, q, max_degree);
                all_pass = all_pass && report.pass();
                if (format == "json") {
                    json jchecks = json::array();
                    for (const auto& c : report.checks)
                        jchecks.push_back(
                            json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
                    jsuites.push_back(json{{"suite", report.suite},
                                           {"pass", report.pass()},
                                           {"checks", jchecks}});
                } else {
                    std::cout << report.summary() << "\n";
                    for (const auto& c : report.checks)
                        std::cout << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name << ": "
                                  << c.detail << "\n";
                }
            }
            if (format == "json")
                std::cout << json{{"pass", all_pass}, {"suites", jsuites}}.dump(2) << "\n";
            return all_pass ? 0 : 1;
        }

        if (iso_cmd->parsed()) {
            IsoReport report = iso_check(q, max_degree);
            if (format == "json") {
                std::cout << iso_report_to_json(report).dump(2) << "\n";
            } else {
                std::cout << "checked " << report.checked << " items up to degree "
                          << report.max_total_degree << ", " << report.mismatches.size()
                          << " mismatches\n";
                for (const auto& m : report.mismatches)
                    std::cout << "  " << m.item << ": " << m.detail << "\n";
            }
            return report.pass() ? 0 : 1;
        }

        if (o_phi->parsed()) {
            Int counted = oracle::phi_bruteforce(q, oa, ob, budget);
            Int closed;
            if (oa == 0 || ob == 0)
                closed = Int(q - 1) * (int_pow(Int(q), oa + ob + 1) - 1);
            else
                closed = Int(q - 1) * (Int(q) * Int(q) - 1) * int_pow(Int(q), oa + ob - 1);
            print_oracle_pair(format, json{{"q", q}, {"a", oa}, {"b", ob}}, counted, closed);
            return 0;
        }
        if (o_quad->parsed()) {
            FqPoly P = opoly.empty() ? irreducible_polys(q, od).front() : FqPoly{q, opoly};
            if (!is_irreducible(P) || !P.is_monic()) {
                std::cerr << "error: --poly must be monic irreducible\n";
                return 2;
            }
            Int counted = oracle::quadruple_count(P, oa, budget);
            Int closed = int_pow(Int(q), P.degree() - 1) * Int(q - 1) * Int(q - 1);
            print_oracle_pair(format, json{{"q", q}, {"P", P.to_string()}, {"a", oa}}, counted,
                              closed);
            return 0;
        }
        if (o_ext->parsed()) {
            Int counted = oracle::ext_count_bundles(q, om, on, op, op2, budget);
            Int closed = ext_closed_form(q, om, on, op, op2);
            print_oracle_pair(format, json{{"q", q}, {"m", om}, {"n", on}, {"p", op}, {"p2", op2}},
                              counted, closed);
            return 0;
        }
        if (o_hall->parsed()) {
            Partition lam = parse_partition(olam), mu = parse_partition(omu),
                      nu = parse_partition(onu);
            Int counted = oracle::submodule_hall_count(lam, mu, nu, q, budget);
            Int closed = hall_number(lam, mu, nu, q);
            print_oracle_pair(format, json{{"q", q}, {"lambda", olam}, {"mu", omu}, {"nu", onu}},
                              counted, closed);
            return 0;
        }
        if (o_aut->parsed()) {
            Partition lam = parse_partition(olam);
            Int counted = oracle::aut_count_module(lam, q, budget);
            Int closed = aut_order_torsion(lam, q);
            print_oracle_pair(format, json{{"q", q}, {"lambda", olam}}, counted, closed);
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotDerivable& e) {
        std::cerr << "not derivable: " << e.what() << "\n";
        return 1;
    } catch (const oracle::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
