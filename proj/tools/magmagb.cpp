// Command-line front end: generation, appendix conformance, Groebner runs,
// order benchmarks and script export.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "magmagb/groebner.hpp"
#include "magmagb/obstruction.hpp"
#include "magmagb/poly_text.hpp"
#include "magmagb/version.hpp"

using nlohmann::json;
using namespace mgb;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string default_data_path() {
    if (const char* env = std::getenv("MAGMAGB_DATA"))
        return env;
    return std::string(MAGMAGB_DATA_DIR) + "/appendix_a.txt";
}

double default_budget() {
    if (const char* env = std::getenv("MAGMAGB_BUDGET_SECS"))
        return std::atof(env);
    return std::numeric_limits<double>::infinity();
}

json base_report(const std::string& command) {
    json r;
    r["schema_version"] = 1;
    r["tool_version"] = kVersion;
    r["command"] = command;
    r["parameters"] = json::object();
    r["verdicts"] = json::object();
    r["timings"] = json::object();
    r["artifacts"] = json::array();
    return r;
}

void emit_report(const json& report, const std::string& report_path, bool json_stdout) {
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out)
            fail(Errc::IoError, "cannot write report to '" + report_path + "'");
        out << report.dump(2) << "\n";
    }
    if (json_stdout)
        std::cout << report.dump(2) << "\n";
}

json stats_json(const GroebnerStats& s, size_t basis_size, bool completed) {
    json j;
    j["basis_size"] = basis_size;
    j["pairs_processed"] = s.pairs_processed;
    j["pairs_generated"] = s.pairs_generated;
    j["pairs_skipped_coprime"] = s.skipped_coprime;
    j["pairs_skipped_chain"] = s.skipped_chain;
    j["reductions_to_zero"] = s.reductions_to_zero;
    j["completed"] = completed;
    return j;
}

struct CheckArgs {
    std::string field = "q";
    std::string order = "dp";
    std::string subsystem = "1..128";
    std::string system_path;
    bool cofactors = false;
    double budget = -1; // <0: use env default
    std::string cert_out;
    std::string basis_out;
};

std::pair<int, int> parse_range(const std::string& text, int limit) {
    size_t dots = text.find("..");
    auto to_int = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            fail(Errc::SyntaxError, "bad range '" + text + "'");
        return std::stoi(s);
    };
    int lo, hi;
    if (dots == std::string::npos) {
        lo = hi = to_int(text);
    } else {
        lo = to_int(text.substr(0, dots));
        hi = to_int(text.substr(dots + 2));
    }
    if (lo < 1 || hi > limit || lo > hi)
        fail(Errc::SyntaxError, "range '" + text + "' out of 1.." + std::to_string(limit));
    return {lo, hi};
}

/// Runs contains_one over the selected field, reporting into `report`.
/// Returns the process exit code.
template <CoefficientField F>
int run_check(const F& field, const std::vector<QPoly>& generators, const QRing& qring,
              OrderKind order, const GroebnerOptions& opt, const CheckArgs& args,
              json& report) {
    auto ring = make_ring(field, qring->vars, order, qring->aliases);
    std::vector<Poly<F>> gens;
    gens.reserve(generators.size());
    for (const auto& g : generators)
        gens.push_back(change_field(g, ring));

    auto res = contains_one(std::span<const Poly<F>>(gens), opt);
    report["timings"]["elapsed_seconds"] = res.run.stats.elapsed_seconds;
    report["stats"] = stats_json(res.run.stats, res.run.basis.size(),
                                 res.run.status == GbStatus::Completed);
    if (!args.basis_out.empty()) {
        std::ofstream out(args.basis_out);
        if (!out)
            fail(Errc::IoError, "cannot write '" + args.basis_out + "'");
        for (const auto& g : res.run.basis)
            out << g.str() << "\n";
        report["artifacts"].push_back(args.basis_out);
    }
    if (!res.verdict) {
        report["verdicts"]["verdict"] = "BudgetExceeded";
        std::cout << "verdict: BudgetExceeded (pairs=" << res.run.stats.pairs_processed
                  << ", elapsed=" << res.run.stats.elapsed_seconds << "s)\n";
        return kExitBudget;
    }
    report["verdicts"]["verdict"] = verdict_str(*res.verdict);
    std::cout << "verdict: " << verdict_str(*res.verdict)
              << " (basis size " << res.run.basis.size()
              << ", pairs " << res.run.stats.pairs_processed
              << ", " << std::fixed << std::setprecision(3)
              << res.run.stats.elapsed_seconds << "s)\n";
    if (res.run.certificate) {
        bool ok = verify_certificate(*res.run.certificate, std::span<const Poly<F>>(gens));
        report["verdicts"]["certificate_verified"] = ok;
        std::cout << "cofactor certificate: " << (ok ? "verified" : "FAILED") << "\n";
        if (res.run.certificate->cleared_integer) {
            std::string m = res.run.certificate->cleared_integer->get_str();
            report["verdicts"]["cleared_integer"] = m;
            std::cout << "cleared integer m = " << m << "\n";
        }
        if (!args.cert_out.empty()) {
            std::ofstream out(args.cert_out);
            if (!out)
                fail(Errc::IoError, "cannot write '" + args.cert_out + "'");
            for (size_t i = 0; i < res.run.certificate->cofactors.size(); ++i)
                out << "c" << i + 1 << " = " << res.run.certificate->cofactors[i].str() << "\n";
            report["artifacts"].push_back(args.cert_out);
        }
    }
    return kExitOk;
}

int cmd_generate(const std::string& format, const std::string& field_text,
                 const std::string& out_path, const std::string& data_path, json& report) {
    FieldSpec fs = parse_field_spec(field_text);
    report["parameters"] = {{"format", format}, {"field", field_spec_str(fs)}};

    auto sys = generate_full();
    std::string text;
    if (format == "script") {
        AppendixData data = load_appendix(data_path, sys.ring);
        std::vector<QPoly> ref;
        ref.reserve(data.entries.size());
        for (const auto& e : data.entries)
            ref.push_back(e.poly);
        VerifyReport vr = verify_appendix(sys.polys, ref);
        if (!vr.ok()) {
            std::cerr << "generated system does not match the bundled data; refusing to export\n";
            return kExitMismatch;
        }
        uint32_t characteristic = fs.kind == FieldKind::PrimeField ? fs.modulus : 0;
        text = singular_script(data, characteristic);
    } else if (format == "internal") {
        std::ostringstream os;
        for (size_t i = 0; i < sys.polys.size(); ++i)
            os << "f" << i + 1 << " = " << sys.polys[i].str() << "\n";
        text = os.str();
    } else {
        std::cerr << "unknown format '" << format << "'\n";
        return kExitUsage;
    }

    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out)
            fail(Errc::IoError, "cannot write '" + out_path + "'");
        out << text;
        report["artifacts"].push_back(out_path);
        std::cout << "wrote " << sys.polys.size() << " polynomials to " << out_path << "\n";
    }
    report["verdicts"] = {{"count", sys.polys.size()}};
    return kExitOk;
}

int cmd_verify_appendix(const std::string& data_path, json& report) {
    auto sys = generate_full();
    AppendixData data = load_appendix(data_path, sys.ring);
    std::vector<QPoly> ref;
    ref.reserve(data.entries.size());
    for (const auto& e : data.entries)
        ref.push_back(e.poly);
    VerifyReport vr = verify_appendix(sys.polys, ref);
    report["parameters"] = {{"data", data_path}};
    report["verdicts"] = {{"matched", vr.matched}, {"total", vr.total}};
    std::cout << vr.matched << "/" << vr.total << " polynomials match\n";
    if (!vr.ok()) {
        json mm = json::array();
        for (const auto& m : vr.mismatches) {
            mm.push_back({{"index", m.index}, {"generated", m.generated}, {"reference", m.reference}});
            std::cout << "mismatch f" << m.index << "\n  generated: " << m.generated
                      << "\n  reference: " << m.reference << "\n";
        }
        report["verdicts"]["mismatches"] = mm;
        return kExitMismatch;
    }
    return kExitOk;
}

int cmd_check(const CheckArgs& args, json& report) {
    FieldSpec fs = parse_field_spec(args.field);
    OrderKind order = parse_order_kind(args.order);
    GroebnerOptions opt;
    opt.cofactors = args.cofactors;
    opt.budget.max_seconds = args.budget >= 0 ? args.budget : default_budget();

    QRing qring;
    std::vector<QPoly> selected;
    std::string subsystem = args.subsystem;
    if (!args.system_path.empty()) {
        qring = make_parameter_ring();
        std::ifstream in(args.system_path);
        if (!in)
            fail(Errc::IoError, "cannot open system file '" + args.system_path + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        selected = parse_system(buf.str(), qring);
        subsystem = "file:" + args.system_path;
    } else {
        auto sys = generate_full();
        qring = sys.ring;
        auto [lo, hi] = parse_range(args.subsystem, static_cast<int>(sys.polys.size()));
        selected.assign(sys.polys.begin() + (lo - 1), sys.polys.begin() + hi);
    }

    report["parameters"] = {{"field", field_spec_str(fs)},
                            {"order", args.order},
                            {"subsystem", subsystem},
                            {"cofactors", args.cofactors},
                            {"budget_seconds",
                             std::isinf(opt.budget.max_seconds) ? json(nullptr)
                                                                : json(opt.budget.max_seconds)}};
    std::cout << "checking " << selected.size() << " polynomials over "
              << field_spec_str(fs) << ", order " << args.order << "\n";

    int code = with_field(fs, [&](auto field) {
        return run_check(field, selected, qring, order, opt, args, report);
    });
    return code;
}

int cmd_bench_orders(const std::string& field_text, double budget_per_order, json& report) {
    FieldSpec fs = parse_field_spec(field_text);
    auto sys = generate_full();
    report["parameters"] = {{"field", field_spec_str(fs)},
                            {"budget_per_order_seconds", budget_per_order}};
    json rows = json::array();
    std::cout << "order  completed  verdict         pairs     elapsed\n";
    for (OrderKind kind : {OrderKind::DegRevLex, OrderKind::DegLex, OrderKind::Lex}) {
        GroebnerOptions opt;
        opt.budget.max_seconds = budget_per_order;
        json row;
        row["order"] = order_kind_str(kind);
        with_field(fs, [&](auto field) {
            auto ring = make_ring(field, sys.ring->vars, kind, sys.ring->aliases);
            using F = decltype(field);
            std::vector<Poly<F>> gens;
            for (const auto& g : sys.polys)
                gens.push_back(change_field(g, ring));
            auto res = contains_one(std::span<const Poly<F>>(gens), opt);
            bool completed = res.run.status == GbStatus::Completed;
            row["completed"] = completed;
            row["verdict"] = res.verdict ? verdict_str(*res.verdict) : "BudgetExceeded";
            row["pairs_processed"] = res.run.stats.pairs_processed;
            row["elapsed_seconds"] = res.run.stats.elapsed_seconds;
            std::cout << std::left << std::setw(7) << order_kind_str(kind) << std::setw(11)
                      << (completed ? "yes" : "no") << std::setw(16)
                      << row["verdict"].get<std::string>() << std::setw(10)
                      << res.run.stats.pairs_processed << std::fixed << std::setprecision(3)
                      << res.run.stats.elapsed_seconds << "s\n";
        });
        rows.push_back(row);
    }
    report["verdicts"]["rows"] = rows;
    return kExitOk;
}

int cmd_mini(const std::string& which, json& report) {
    if (which != "commutative") {
        std::cerr << "unknown case '" << which << "'\n";
        return kExitUsage;
    }
    auto ring = make_mini_ring(OrderKind::Lex);
    auto constraints = mini_system(ring);
    report["parameters"] = {{"case", which}, {"field", "q"}, {"order", "lp"}};
    json cons = json::array();
    std::cout << "constraints:\n";
    for (const auto& c : constraints) {
        cons.push_back(c.str());
        std::cout << "  " << c.str() << "\n";
    }
    auto res = contains_one(std::span<const QPoly>(constraints), {});
    json basis = json::array();
    std::cout << "lex basis:\n";
    for (const auto& g : res.run.basis) {
        basis.push_back(g.str());
        std::cout << "  " << g.str() << "\n";
    }
    json root = json::object();
    if (res.verdict == Verdict::ProperIdeal) {
        // basis elements of the shape v + c pin v to -c
        for (const auto& g : res.run.basis) {
            if (g.size() == 2 && g.lead().m.deg == 1 && g.terms()[1].m.is_one()) {
                for (int i = 0; i < ring->nvars(); ++i)
                    if (g.lead().m.e[i])
                        root[ring->vars[i]] = ring->field.str(-g.terms()[1].c);
            }
        }
        std::cout << "common root:";
        for (auto& [k, v] : root.items())
            std::cout << " " << k << " = " << v.get<std::string>();
        std::cout << "\n";
    }
    report["verdicts"] = {{"verdict", res.verdict ? verdict_str(*res.verdict) : "BudgetExceeded"},
                          {"constraints", cons},
                          {"basis", basis},
                          {"root", root}};
    report["timings"]["elapsed_seconds"] = res.run.stats.elapsed_seconds;
    std::cout << "verdict: " << report["verdicts"]["verdict"].get<std::string>() << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"obstruction-system generator and Groebner toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    std::string report_path;
    bool json_stdout = false;
    app.add_option("--report", report_path, "write a JSON run report to this path");
    app.add_flag("--json", json_stdout, "print the JSON run report to stdout");

    // generate
    auto* gen = app.add_subcommand("generate", "generate the 128-polynomial system");
    std::string gen_format = "internal", gen_field = "q", gen_out;
    std::string data_path = default_data_path();
    gen->add_option("--format", gen_format, "internal|script")->capture_default_str();
    gen->add_option("--field", gen_field, "q|gf:P (script ring characteristic)")
        ->capture_default_str();
    gen->add_option("--out", gen_out, "output path (default stdout)");
    gen->add_option("--data", data_path, "appendix data file");

    // verify-appendix
    auto* ver = app.add_subcommand("verify-appendix",
                                   "compare the generated system with the bundled data");
    ver->add_option("--data", data_path, "appendix data file");

    // check
    auto* chk = app.add_subcommand("check", "generate the system and test 1 in ideal");
    CheckArgs chk_args;
    chk->add_option("--field", chk_args.field, "q|gf:P")->capture_default_str();
    chk->add_option("--order", chk_args.order, "dp|Dp|lp")->capture_default_str();
    chk->add_option("--subsystem", chk_args.subsystem, "index range, e.g. 1..32")
        ->capture_default_str();
    chk->add_option("--system", chk_args.system_path,
                    "read the polynomial system from a file instead of generating");
    chk->add_flag("--cofactors", chk_args.cofactors, "track and verify a cofactor certificate");
    chk->add_option("--budget", chk_args.budget,
                    "wall-clock budget in seconds (default MAGMAGB_BUDGET_SECS)");
    chk->add_option("--cert-out", chk_args.cert_out, "write certificate cofactors to this path");
    chk->add_option("--basis-out", chk_args.basis_out, "write the basis listing to this path");

    // bench-orders
    auto* bench = app.add_subcommand("bench-orders", "run the full system under dp, Dp and lp");
    std::string bench_field = "gf:2";
    double bench_budget = 60;
    bench->add_option("--field", bench_field, "q|gf:P")->capture_default_str();
    bench->add_option("--budget-per-order", bench_budget, "seconds per order")
        ->capture_default_str();

    // mini
    auto* mini = app.add_subcommand("mini", "the commutative-case constraint system");
    std::string mini_case = "commutative";
    mini->add_option("--case", mini_case, "commutative")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        json report = base_report(app.get_subcommands().front()->get_name());
        int code = kExitUsage;
        if (gen->parsed())
            code = cmd_generate(gen_format, gen_field, gen_out, data_path, report);
        else if (ver->parsed())
            code = cmd_verify_appendix(data_path, report);
        else if (chk->parsed())
            code = cmd_check(chk_args, report);
        else if (bench->parsed())
            code = cmd_bench_orders(bench_field, bench_budget, report);
        else if (mini->parsed())
            code = cmd_mini(mini_case, report);
        report["exit_code"] = code;
        emit_report(report, report_path, json_stdout);
        return code;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
        case Errc::MissingData:
        case Errc::IoError:
        case Errc::SyntaxError:
        case Errc::NonPrimeModulus:
        case Errc::ModulusTooLarge:
            return kExitUsage;
        default:
            return kExitUsage;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
