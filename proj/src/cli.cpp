#include "p2galois/cli.hpp"

#include <CLI11.hpp>
#include <atomic>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <thread>
#include <vector>

#include "p2galois/certificate_io.hpp"
#include "p2galois/error.hpp"
#include "p2galois/expression.hpp"
#include "p2galois/hierarchy.hpp"
#include "p2galois/kovacic.hpp"
#include "p2galois/nve.hpp"
#include "p2galois/printer.hpp"

namespace p2g {

namespace {

constexpr int kDefaultTableLimit = 16;

GaloisCertificate certificate_for_parameter(int n, const VorobevYablonskiTable& table) {
    NVEProblem problem = nve_potential(n, table);
    RationalFunction r = problem.r;
    return analyze(r, std::move(problem));
}

std::string summary_gamma(const GaloisCertificate& cert) {
    if (!cert.profile || cert.profile->pole_classes.empty()) return "-";
    return std::to_string(cert.profile->gamma);
}

}  // namespace

CertifyOutput certify_range(int from, int to, bool parallel, int table_limit) {
    if (from > to) throw std::domain_error("certify: --from must not exceed --to");
    VorobevYablonskiTable table(table_limit);
    const int count = to - from + 1;
    std::vector<GaloisCertificate> certificates(count);

    if (parallel && count > 1) {
        // Grow the table up front so worker threads only read.
        for (int n = from; n <= to; ++n) table.polynomial(std::abs(n) + 1);
        unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(count));
        if (workers < 2) workers = 2;
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        std::vector<std::exception_ptr> errors(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                        certificates[i] = certificate_for_parameter(from + i, table);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    } else {
        for (int i = 0; i < count; ++i) certificates[i] = certificate_for_parameter(from + i, table);
    }

    std::ostringstream tableOut;
    tableOut << "  n  gamma  verdict\n";
    for (int i = 0; i < count; ++i) {
        std::string n = std::to_string(from + i);
        std::string gamma = summary_gamma(certificates[i]);
        tableOut << std::string(n.size() < 3 ? 3 - n.size() : 0, ' ') << n
                 << std::string(gamma.size() < 7 ? 7 - gamma.size() : 0, ' ') << gamma << "  "
                 << to_string(certificates[i].verdict) << "\n";
    }

    nlohmann::ordered_json doc;
    doc["from"] = std::to_string(from);
    doc["to"] = std::to_string(to);
    nlohmann::ordered_json summary = nlohmann::ordered_json::array();
    for (int i = 0; i < count; ++i) {
        nlohmann::ordered_json row;
        row["n"] = std::to_string(from + i);
        std::string gamma = summary_gamma(certificates[i]);
        row["gamma"] = gamma == "-" ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(gamma);
        row["verdict"] = to_string(certificates[i].verdict);
        summary.push_back(row);
    }
    doc["summary"] = summary;
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (int i = 0; i < count; ++i)
        list.push_back(nlohmann::ordered_json::parse(certificate_to_json(certificates[i])));
    doc["certificates"] = list;

    return {tableOut.str(), doc.dump(2) + "\n"};
}

namespace {

int run_impl(int argc, const char* const* argv) {
    CLI::App app{"exact Galois-group certificates for xi'' = r(z) xi and the rational "
                 "solution hierarchy behind them"};
    app.require_subcommand(1);

    int vy_n = 0;
    CLI::App* vy = app.add_subcommand("vy", "print the polynomial Q_n of the hierarchy");
    vy->add_option("--n", vy_n, "index n >= 0")->required();

    int ratsol_n = 0;
    bool ratsol_verify = false;
    CLI::App* ratsol = app.add_subcommand("ratsol", "print the rational solution w(z, n)");
    ratsol->add_option("--n", ratsol_n, "integer parameter n")->required();
    ratsol->add_flag("--verify", ratsol_verify, "also print the defining-equation residual");

    int nve_n = 0;
    CLI::App* nve = app.add_subcommand("nve", "print the reduced potential r(z) = 6 w(z,n)^2 + z");
    nve->add_option("--n", nve_n, "integer parameter n")->required();

    int analyze_n = 0;
    std::string analyze_r;
    std::string analyze_format = "text";
    CLI::App* analyze_cmd = app.add_subcommand("analyze", "emit a Galois certificate for y'' = r y");
    CLI::Option* opt_n = analyze_cmd->add_option("--n", analyze_n, "analyze the potential for parameter n");
    CLI::Option* opt_r = analyze_cmd->add_option("--r", analyze_r, "analyze an explicit rational expression");
    analyze_cmd->add_option("--format", analyze_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    opt_n->excludes(opt_r);
    opt_r->excludes(opt_n);

    int certify_from = 0, certify_to = 0;
    std::string certify_out;
    bool certify_parallel = false;
    CLI::App* certify = app.add_subcommand("certify", "certificates for a parameter range plus a summary table");
    certify->add_option("--from", certify_from, "first parameter")->required();
    certify->add_option("--to", certify_to, "last parameter")->required();
    certify->add_option("--out", certify_out, "write the JSON document to this path");
    certify->add_flag("--parallel", certify_parallel, "distribute parameters over threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (vy->parsed()) {
        if (vy_n < 0) {
            std::cerr << "vy: --n must be nonnegative\n";
            return 1;
        }
        VorobevYablonskiTable table(kDefaultTableLimit);
        std::cout << format_polynomial(vy_polynomial(vy_n, table)) << "\n";
        return 0;
    }

    if (ratsol->parsed()) {
        VorobevYablonskiTable table(kDefaultTableLimit);
        RationalPIISolution sol = rational_solution(ratsol_n, table);
        std::cout << format_rational(sol.w) << "\n";
        if (ratsol_verify)
            std::cout << "residual = " << format_rational(pii_residual(sol.w, Rational(ratsol_n))) << "\n";
        return 0;
    }

    if (nve->parsed()) {
        VorobevYablonskiTable table(kDefaultTableLimit);
        std::cout << format_rational(nve_potential(nve_n, table).r) << "\n";
        return 0;
    }

    if (analyze_cmd->parsed()) {
        if (opt_n->count() == 0 && opt_r->count() == 0) {
            std::cerr << "analyze: one of --n or --r is required\n";
            return 1;
        }
        GaloisCertificate cert;
        if (opt_n->count() > 0) {
            VorobevYablonskiTable table(kDefaultTableLimit);
            cert = certificate_for_parameter(analyze_n, table);
        } else {
            cert = analyze(parse_rational_expression(analyze_r));
        }
        Report report =
            render_report(cert, analyze_format == "json" ? ReportFormat::Structured : ReportFormat::Text);
        std::cout << report.body;
        if (analyze_format == "json") std::cout << "\n";
        return 0;
    }

    if (certify->parsed()) {
        CertifyOutput out = certify_range(certify_from, certify_to, certify_parallel, kDefaultTableLimit);
        std::cout << out.table;
        if (!certify_out.empty()) {
            std::ofstream file(certify_out, std::ios::binary);
            if (!file) {
                std::cerr << "certify: cannot open " << certify_out << " for writing\n";
                return 1;
            }
            file << out.json;
        }
        return 0;
    }

    return 1;
}

}  // namespace

int run(int argc, const char* const* argv) {
    try {
        return run_impl(argc, argv);
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace p2g
