#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bq/job.hpp"
#include "bq/parser.hpp"
#include "bq/sampling.hpp"

namespace {

using bq::Basis;
using bq::BqFunction;
using bq::Complex;
using bq::HoloExpr;
using bq::Json;

struct Config {
    std::uint64_t seed = 12345;
    int samples = 100;
    double tolerance = 1e-9;
    double radius = 0.1;
    int oracle_n = 64;
    std::string output = "json";
    bool parallel = false;
};

// Thrown after the report is printed to request exit code 3.
struct VerificationFailure {};

nlohmann::json read_json_arg(const std::string& arg) {
    try {
        if (!arg.empty() && arg.front() == '{') return nlohmann::json::parse(arg);
        std::ifstream in(arg);
        if (!in) throw bq::SchemaError("cannot open file", arg);
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw bq::SchemaError(std::string("invalid JSON: ") + e.what(), arg);
    }
}

std::string coeff_text(const nlohmann::json& pair) {
    const double re = pair[0].get<double>(), im = pair[1].get<double>();
    std::string out = "(" + std::to_string(re);
    out += im < 0 ? " - " : " + ";
    out += std::to_string(std::abs(im)) + "i)";
    return out;
}

std::string biquaternion_text(const nlohmann::json& doc) {
    static const char* const names[2][4] = {{"1", "I", "J", "K"}, {"e1", "e2", "e3", "e4"}};
    const int row = doc["basis"] == "cartan" ? 1 : 0;
    std::string out;
    for (int k = 0; k < 4; ++k) {
        if (k) out += " + ";
        out += coeff_text(doc["c"][k]) + names[row][k];
    }
    return out;
}

// Cosmetic human-readable rendering; JSON is the only machine format.
void emit(const Config& cfg, const Json& doc) {
    if (cfg.output == "json") {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    if (doc.contains("components")) {
        static const char* const names[2][4] = {{"1", "I", "J", "K"}, {"e1", "e2", "e3", "e4"}};
        const int row = doc["basis"] == "cartan" ? 1 : 0;
        std::cout << "basis: " << doc["basis"].get<std::string>() << "\n";
        for (int k = 0; k < 4; ++k) {
            std::cout << "  " << names[row][k] << ": " << doc["components"][k].get<std::string>()
                      << "\n";
        }
    } else if (doc.contains("symbolic_zero")) {
        std::cout << "symbolic_zero: " << (doc["symbolic_zero"].get<bool>() ? "yes" : "no")
                  << "\nmax_abs: " << doc["max_abs"].get<double>() << "\npoints sampled: "
                  << doc["points"].size() << "\n";
        if (doc.contains("oracle_max_err")) {
            std::cout << "oracle_max_err: " << doc["oracle_max_err"].get<double>() << "\n";
        }
    } else if (doc.contains("psi")) {
        for (int j = 0; j < 4; ++j) {
            std::cout << "psi" << j + 1 << ": " << biquaternion_text(doc["psi"][j]) << "\n";
        }
    } else if (doc.contains("c")) {
        std::cout << biquaternion_text(doc) << "\n";
    } else {
        std::cout << doc.dump(2) << "\n";
    }
}

Basis parse_basis(const std::string& s, const char* what) {
    if (s == "standard") return Basis::Standard;
    if (s == "cartan") return Basis::Cartan;
    throw bq::InvalidParameter(std::string(what) + ": expected 'standard' or 'cartan'");
}

BqFunction function_from_arg(const std::string& arg) {
    return bq::function_from_json(read_json_arg(arg), "f");
}

void run_verify(const Config& cfg, const std::string& job_arg, const std::string& side_override,
                bool oracle_check) {
    bq::Job job = bq::job_from_json(read_json_arg(job_arg));
    if (!side_override.empty()) {
        job.side = side_override == "right" ? bq::Side::Right : bq::Side::Left;
    }
    const BqFunction residual = bq::apply_job_operator(job);

    bq::Rng rng(cfg.seed);
    const auto points = bq::sample_polydisc(rng, cfg.samples);
    const auto report = bq::residual_report(
        residual, points, cfg.parallel ? bq::EvalMode::Parallel : bq::EvalMode::Serial);

    Json doc = bq::report_to_json(report);

    double oracle_err = 0.0;
    if (oracle_check) {
        // Cross-validate the symbolic differentiator behind the operator
        // against the Cauchy-integral derivative on a few sample points.
        const std::size_t n_check = std::min<std::size_t>(points.size(), 8);
        for (int s = 0; s < 4; ++s) {
            for (int v = 1; v <= 4; ++v) {
                const HoloExpr d = bq::diff(job.f.comp[s], v);
                for (std::size_t p = 0; p < n_check; ++p) {
                    const Complex sym = bq::eval(d, points[p]);
                    const Complex num = bq::cauchy_derivative(job.f.comp[s], v, points[p],
                                                              cfg.radius, cfg.oracle_n);
                    oracle_err = std::max(oracle_err, std::abs(sym - num));
                }
            }
        }
        doc["oracle_max_err"] = oracle_err;
    }

    emit(cfg, doc);
    if (report.max_abs > cfg.tolerance || (oracle_check && oracle_err > cfg.tolerance)) {
        throw VerificationFailure{};
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Computer algebra for complex quaternions: weighted Dirac operators,\n"
                 "hyperholomorphy checks and closed-form solution constructors."};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    app.add_option("--seed", cfg.seed, "RNG seed for sample points")->capture_default_str();
    app.add_option("--samples", cfg.samples, "number of sample points")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--tolerance", cfg.tolerance, "max |residual| accepted by verify")
        ->capture_default_str();
    app.add_option("--radius", cfg.radius, "circle radius of the derivative oracle")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--oracle-n", cfg.oracle_n, "node count of the derivative oracle")
        ->check(CLI::Range(8, 1 << 20))
        ->capture_default_str();
    app.add_option("--output", cfg.output, "output format: json|text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_flag("--parallel", cfg.parallel, "evaluate sample points on OpenMP threads");

    // mul
    std::string mul_a, mul_b, in_basis;
    auto* mul = app.add_subcommand("mul", "multiply two biquaternions");
    mul->add_option("a", mul_a, "biquaternion JSON (inline or file)")->required();
    mul->add_option("b", mul_b, "biquaternion JSON (inline or file)")->required();
    mul->add_option("--in-basis", in_basis, "convert both operands to this basis first")
        ->check(CLI::IsMember({"standard", "cartan"}));
    mul->callback([&] {
        bq::Biquaternion a = bq::biquaternion_from_json(read_json_arg(mul_a), "a");
        bq::Biquaternion b = bq::biquaternion_from_json(read_json_arg(mul_b), "b");
        if (!in_basis.empty()) {
            const Basis target = parse_basis(in_basis, "--in-basis");
            a = bq::convert(a, target);
            b = bq::convert(b, target);
        }
        emit(cfg, bq::biquaternion_to_json(a * b));
    });

    // convert
    std::string conv_x, conv_to;
    auto* conv = app.add_subcommand("convert", "convert a biquaternion or function between bases");
    conv->add_option("x", conv_x, "biquaternion or function JSON")->required();
    conv->add_option("--to", conv_to, "target basis")
        ->required()
        ->check(CLI::IsMember({"standard", "cartan"}));
    conv->callback([&] {
        const Basis target = parse_basis(conv_to, "--to");
        const nlohmann::json j = read_json_arg(conv_x);
        if (j.contains("components")) {
            const BqFunction f = function_from_arg(conv_x);
            const BqFunction g = target == Basis::Cartan ? bq::standard_to_cartan_vars(f)
                                                         : bq::cartan_to_standard_vars(f);
            emit(cfg, bq::function_to_json(g));
        } else {
            const bq::Biquaternion a = bq::biquaternion_from_json(j, "x");
            emit(cfg, bq::biquaternion_to_json(bq::convert(a, target)));
        }
    });

    // dirac
    std::string dirac_job, dirac_side;
    auto* dirac = app.add_subcommand("dirac", "apply the operator a job describes, symbolically");
    dirac->add_option("job", dirac_job, "job JSON (inline or file)")->required();
    dirac->add_option("--side", dirac_side, "override the job's operator side")
        ->check(CLI::IsMember({"left", "right"}));
    dirac->callback([&] {
        bq::Job job = bq::job_from_json(read_json_arg(dirac_job));
        if (!dirac_side.empty()) {
            job.side = dirac_side == "right" ? bq::Side::Right : bq::Side::Left;
        }
        emit(cfg, bq::function_to_json(bq::normalized(bq::apply_job_operator(job))));
    });

    // solve
    auto* solve = app.add_subcommand("solve", "build a closed-form solution");
    solve->require_subcommand(1);
    std::string emit_basis = "cartan";
    solve->add_option("--emit", emit_basis, "emit the solution in this coordinate system")
        ->check(CLI::IsMember({"standard", "cartan"}));

    std::string cf_g1 = "0", cf_g2 = "0";
    auto* solve_cf = solve->add_subcommand(
        "cf", "Cauchy-Fueter solution from generators g1(z2,z3) and g2(z1,z4)");
    solve_cf->add_option("--g1", cf_g1, "generator in z2, z3")->capture_default_str();
    solve_cf->add_option("--g2", cf_g2, "generator in z1, z4")->capture_default_str();
    solve_cf->callback([&] {
        const HoloExpr g1 = bq::parse_expr(cf_g1, Basis::Cartan);
        const HoloExpr g2 = bq::parse_expr(cf_g2, Basis::Cartan);
        BqFunction f = bq::cf_solution(g1, g2);
        if (emit_basis == "standard") f = bq::cartan_to_standard_vars(f);
        emit(cfg, bq::function_to_json(bq::normalized(f)));
    });

    std::string sp_params, sp_g[4] = {"0", "0", "0", "0"};
    auto* solve_sp = solve->add_subcommand(
        "special", "solution for the special weight family from four slot generators");
    solve_sp->add_option("--params", sp_params, "special weight parameters JSON")->required();
    solve_sp->add_option("--g1", sp_g[0], "generator, slots z1..z3")->capture_default_str();
    solve_sp->add_option("--g2", sp_g[1], "generator, slots z1..z3")->capture_default_str();
    solve_sp->add_option("--g3", sp_g[2], "generator, slots z1..z3")->capture_default_str();
    solve_sp->add_option("--g4", sp_g[3], "generator, slots z1..z3")->capture_default_str();
    solve_sp->callback([&] {
        nlohmann::json pj = read_json_arg(sp_params);
        nlohmann::json job{{"psi", {{"special", pj}}},
                           {"f", {{"basis", "cartan"}, {"components", {"0", "0", "0", "0"}}}}};
        const bq::Job parsed = bq::job_from_json(job);
        std::array<HoloExpr, 4> g;
        for (int k = 0; k < 4; ++k) g[k] = bq::parse_expr(sp_g[k], Basis::Cartan);
        BqFunction f = bq::special_solution(*parsed.special, g[0], g[1], g[2], g[3]);
        if (emit_basis == "standard") f = bq::cartan_to_standard_vars(f);
        emit(cfg, bq::function_to_json(bq::normalized(f)));
    });

    // verify
    std::string verify_job, verify_side;
    bool oracle_check = false;
    auto* verify = app.add_subcommand("verify", "apply a job's operator and report the residual");
    verify->add_option("job", verify_job, "job JSON (inline or file)")->required();
    verify->add_option("--side", verify_side, "override the job's operator side")
        ->check(CLI::IsMember({"left", "right"}));
    verify->add_flag("--oracle-check", oracle_check,
                     "also cross-check symbolic derivatives against the Cauchy integral");
    verify->callback([&] { run_verify(cfg, verify_job, verify_side, oracle_check); });

    // laplacian
    std::string lap_f;
    auto* lap = app.add_subcommand("laplacian", "componentwise Laplacian of a function");
    lap->add_option("f", lap_f, "function JSON (inline or file)")->required();
    lap->callback([&] {
        const BqFunction f = function_from_arg(lap_f);
        emit(cfg, bq::function_to_json(bq::normalized(bq::laplacian(f))));
    });

    // induced-psi
    std::string ip_m;
    auto* ip = app.add_subcommand(
        "induced-psi", "weights induced by a change of basis (rows k, m, n, r)");
    ip->add_option("matrix", ip_m, "basis matrix JSON (inline or file)")->required();
    ip->callback([&] {
        const bq::BasisMatrix M = bq::basis_matrix_from_json(read_json_arg(ip_m), "matrix");
        Json doc;
        doc["psi"] = bq::psi_to_json(bq::induced_psi(M));
        emit(cfg, doc);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const VerificationFailure&) {
        return 3;
    } catch (const bq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
