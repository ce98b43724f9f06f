#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include "bq/job.hpp"
#include "bq/parser.hpp"
#include "helpers.hpp"

using namespace bq;
using nlohmann::json;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(BQTOOL_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << content;
    return path;
}

const char* kSolutionJob = R"js({
  "psi": "cf",
  "f": {"basis": "cartan", "components": ["z2*z3", "z1", "z3", "z1*z2 + z3*z4"]}
})js";

}  // namespace

TEST_CASE("job parsing") {
    SUBCASE("cf job with a constant function verifies to zero") {
        const Job job = job_from_json(json::parse(
            R"js({"psi": "cf", "f": {"basis": "standard", "components": ["(3+2i)", "0", "0", "1"]}})js"));
        CHECK(job.psi_kind == PsiKind::CauchyFueter);
        CHECK(is_zero(apply_job_operator(job)));
    }

    SUBCASE("degenerate special parameters fail at load time") {
        const auto doc = json::parse(
            R"js({"psi": {"special": {"alpha": [[1,0],[2,0],[1,0],[2,0]]}},
                "f": {"basis": "cartan", "components": ["0","0","0","0"]}})js");
        CHECK_THROWS_AS(job_from_json(doc), DegenerateParams);
    }

    SUBCASE("malformed component names its index") {
        const auto doc = json::parse(
            R"js({"psi": "cf", "f": {"basis": "cartan", "components": ["0","0","z1 +","0"]}})js");
        try {
            job_from_json(doc);
            FAIL("expected SyntaxError");
        } catch (const SyntaxError& e) {
            CHECK(std::string(e.what()).find("components[2]") != std::string::npos);
        }
    }

    SUBCASE("schema errors carry field paths") {
        try {
            job_from_json(json::parse(R"js({"f": {"basis": "cartan", "components": ["0","0","0","0"]}})js"));
            FAIL("expected SchemaError");
        } catch (const SchemaError& e) {
            CHECK(e.path == "job");
        }
        try {
            job_from_json(json::parse(R"js({"psi": "cf", "f": {"basis": "cartan"}})js"));
            FAIL("expected SchemaError");
        } catch (const SchemaError& e) {
            CHECK(e.path == "job.f");
        }
        try {
            job_from_json(json::parse(
                R"js({"psi": {"special": {"alpha": [[1,0],[1,0],[0,0],[0,0]], "mystery": [0,0]}},
                    "f": {"basis": "cartan", "components": ["0","0","0","0"]}})js"));
            FAIL("expected SchemaError");
        } catch (const SchemaError& e) {
            CHECK(e.path == "job.psi.special");
        }
    }

    SUBCASE("variables must match the declared basis") {
        const auto doc = json::parse(
            R"js({"psi": "cf", "f": {"basis": "standard", "components": ["z1","0","0","0"]}})js");
        CHECK_THROWS_AS(job_from_json(doc), WrongCoordinateSystem);
    }

    SUBCASE("explicit weights accept standard tags and convert them") {
        const auto doc = json::parse(
            R"js({"psi": {"explicit": [
                  {"basis": "standard", "c": [[1,0],[0,0],[0,0],[0,0]]},
                  {"basis": "standard", "c": [[0,0],[1,0],[0,0],[0,0]]},
                  {"basis": "cartan",   "c": [[0,0],[0,0],[0,0],[0,0]]},
                  {"basis": "cartan",   "c": [[0,0],[0,0],[0,0],[0,0]]}]},
                "f": {"basis": "cartan", "components": ["0","0","0","0"]}})js");
        const Job job = job_from_json(doc);
        REQUIRE(job.explicit_psi.has_value());
        CHECK(approx_equal((*job.explicit_psi)[0], Biquaternion::one(Basis::Cartan)));
        CHECK(approx_equal((*job.explicit_psi)[1], to_cartan(Biquaternion::unit(Basis::Standard, 1))));
    }

    SUBCASE("bc-right defaults to the right operator side") {
        const auto doc = json::parse(
            R"js({"psi": "bc-right", "f": {"basis": "cartan", "components": ["0","0","0","0"]}})js");
        CHECK(job_from_json(doc).side == Side::Right);
    }

    SUBCASE("load_job reads files and reports unreadable ones") {
        const auto path = write_temp("bq_job_ok.json", kSolutionJob);
        const Job job = load_job(path.string());
        CHECK(is_zero(apply_job_operator(job)));
        CHECK_THROWS_AS(load_job("/nonexistent/job.json"), SchemaError);
        const auto bad = write_temp("bq_job_bad.json", "{not json");
        CHECK_THROWS_AS(load_job(bad.string()), SchemaError);
    }
}

TEST_CASE("serialization round trips") {
    Rng rng(601);
    const Biquaternion x = bqtest::random_biquaternion(rng, Basis::Standard);
    const Biquaternion y = biquaternion_from_json(
        json::parse(biquaternion_to_json(x).dump()), "x");
    CHECK(bqtest::max_coeff_distance(x, y) == 0.0);

    const BqFunction f = bqtest::random_bqfunction(rng, Basis::Cartan, 3);
    const Json doc = function_to_json(f);
    const BqFunction g = function_from_json(json::parse(doc.dump()), "f");
    CHECK(norm_equal(normalized(f), normalized(g)));

    ResidualReport r;
    r.symbolic_zero = false;
    r.max_abs = 0.25;
    r.per_point.push_back({rng.polydisc_point(), {Complex(0.25), {}, {}, {}}});
    const Json rj = report_to_json(r);
    CHECK(rj.contains("symbolic_zero"));
    CHECK(rj.contains("max_abs"));
    CHECK(rj["points"].size() == 1);
    // Field order is part of the format.
    CHECK(rj.dump().rfind(R"js({"symbolic_zero":false,"max_abs":0.25,"points":)js", 0) == 0);
}

TEST_CASE("cli: deterministic verify output") {
    const auto path = write_temp("bq_job_det.json", kSolutionJob);
    const auto first = run_cli("verify " + path.string() + " --seed 7 --samples 20");
    const auto second = run_cli("verify " + path.string() + " --seed 7 --samples 20");
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(!first.out.empty());

    const auto other_seed = run_cli("verify " + path.string() + " --seed 8 --samples 20");
    CHECK(other_seed.out != first.out);

    const auto parallel = run_cli("verify " + path.string() + " --seed 7 --samples 20 --parallel");
    CHECK(parallel.out == first.out);
}

TEST_CASE("cli: verification failure exits 3") {
    // z2 e1 violates the bicomplex Cauchy-Riemann condition with |residual| = 1.
    const auto path = write_temp(
        "bq_job_fail.json",
        R"js({"psi": "bc-left", "f": {"basis": "cartan", "components": ["z2","0","0","0"]}})js");
    const auto r = run_cli("verify " + path.string() + " --samples 5");
    CHECK(r.exit_code == 3);
    const auto doc = json::parse(r.out);
    CHECK(doc["symbolic_zero"] == false);
    CHECK(doc["max_abs"] == 1.0);
}

TEST_CASE("cli: validation failures exit 2") {
    CHECK(run_cli("solve special --params "
                  "'{\"alpha\":[[1,0],[2,0],[1,0],[2,0]]}'")
              .exit_code == 2);
    CHECK(run_cli("induced-psi '{\"k\":[[1,0],[0,0],[0,0],[0,0]],"
                  "\"m\":[[1,0],[0,0],[0,0],[0,0]],"
                  "\"n\":[[0,0],[0,0],[1,0],[0,0]],"
                  "\"r\":[[0,0],[0,0],[0,0],[1,0]]}'")
              .exit_code == 2);
    CHECK(run_cli("verify /nonexistent/job.json").exit_code == 2);
}

TEST_CASE("cli: mul and induced-psi golden outputs") {
    const auto ij = run_cli(
        R"js(mul '{"basis":"standard","c":[[0,0],[1,0],[0,0],[0,0]]}' )js"
        R"js('{"basis":"standard","c":[[0,0],[0,0],[1,0],[0,0]]}')js");
    CHECK(ij.exit_code == 0);
    const auto k = json::parse(ij.out);
    CHECK(k["basis"] == "standard");
    CHECK(k["c"][3][0] == 1.0);

    // Mixed bases multiply once --in-basis picks a common one.
    const auto mixed = run_cli(
        R"js(mul '{"basis":"standard","c":[[1,0],[0,0],[0,0],[0,0]]}' )js"
        R"js('{"basis":"cartan","c":[[1,0],[1,0],[0,0],[0,0]]}' --in-basis cartan)js");
    CHECK(mixed.exit_code == 0);
    CHECK(json::parse(mixed.out)["basis"] == "cartan");

    const auto id = run_cli(
        "induced-psi '{\"k\":[[1,0],[0,0],[0,0],[0,0]],"
        "\"m\":[[0,0],[1,0],[0,0],[0,0]],"
        "\"n\":[[0,0],[0,0],[1,0],[0,0]],"
        "\"r\":[[0,0],[0,0],[0,0],[1,0]]}'");
    CHECK(id.exit_code == 0);
    const auto psi = json::parse(id.out)["psi"];
    REQUIRE(psi.size() == 4);
    for (int j = 0; j < 4; ++j) {
        CHECK(psi[j]["basis"] == "cartan");
        CHECK(psi[j]["c"][j][0] == 1.0);
    }

    // Rows of e1..e4 expressed against (1, I, J, K): the induced weights are
    // 1/2, -I/2, -J/2, K/2.
    const auto idem = run_cli(
        "induced-psi '{\"k\":[[0.5,0],[0,0.5],[0,0],[0,0]],"
        "\"m\":[[0.5,0],[0,-0.5],[0,0],[0,0]],"
        "\"n\":[[0,0],[0,0],[0,0.5],[-0.5,0]],"
        "\"r\":[[0,0],[0,0],[0,0.5],[0.5,0]]}'");
    CHECK(idem.exit_code == 0);
    const auto idem_psi = json::parse(idem.out)["psi"];
    const std::array<Complex, 4> want{Complex(0.5), Complex(-0.5), Complex(-0.5), Complex(0.5)};
    for (int s = 0; s < 4; ++s) {
        std::array<Complex, 4> c;
        for (int j = 0; j < 4; ++j) {
            c[j] = Complex(idem_psi[s]["c"][j][0].get<double>(),
                           idem_psi[s]["c"][j][1].get<double>());
        }
        const Biquaternion got = to_standard(Biquaternion(Basis::Cartan, c));
        std::array<Complex, 4> std_want{};
        std_want[s] = want[s];
        CHECK(bqtest::max_coeff_distance(got, Biquaternion(Basis::Standard, std_want)) <= 1e-12);
    }
}

TEST_CASE("cli: solve and dirac pipe into verify") {
    const auto cf = run_cli("solve cf --g1 z2*z3 --g2 z1");
    CHECK(cf.exit_code == 0);
    const auto f = json::parse(cf.out);
    CHECK(f["components"][2] == "z3");
    CHECK(f["components"][3] == "z1*z2 + z3*z4");

    // Emit in standard variables, then check it against the operator.
    const auto std_form = run_cli("solve cf --g1 z2*z3 --g2 z1 --emit standard");
    CHECK(std_form.exit_code == 0);
    json job;
    job["psi"] = "cf";
    job["f"] = json::parse(std_form.out);
    const auto verify = run_cli("verify '" + job.dump() + "' --samples 4");
    CHECK(verify.exit_code == 0);
    CHECK(json::parse(verify.out)["symbolic_zero"] == true);

    const auto dirac = run_cli("dirac '" + job.dump() + "'");
    CHECK(dirac.exit_code == 0);
    const auto residual = json::parse(dirac.out);
    for (int s = 0; s < 4; ++s) CHECK(residual["components"][s] == "0");

    const auto lap = run_cli("laplacian '" + std_form.out + "'");
    CHECK(lap.exit_code == 0);
    for (int s = 0; s < 4; ++s) CHECK(json::parse(lap.out)["components"][s] == "0");
}

TEST_CASE("cli: convert round trip") {
    const std::string f = R"js({"basis":"standard","components":["t0","t1^2","0","exp(t3)"]})js";
    const auto there = run_cli("convert '" + f + "' --to cartan");
    CHECK(there.exit_code == 0);
    std::string cartan_doc = there.out;
    cartan_doc.erase(cartan_doc.find_last_not_of(" \n") + 1);
    const auto back = run_cli("convert '" + cartan_doc + "' --to standard");
    CHECK(back.exit_code == 0);
    const auto out = json::parse(back.out);
    CHECK(out["components"][0] == "t0");
    CHECK(out["components"][1] == "t1^2");
    CHECK(out["components"][2] == "0");
    CHECK(out["components"][3] == "exp(t3)");
}

TEST_CASE("cli: oracle check reports derivative agreement") {
    const auto path = write_temp(
        "bq_job_oracle.json",
        R"js({"psi": "cf", "f": {"basis": "cartan", "components": ["z1^3","exp(z2)","0","z4"]}})js");
    const auto r = run_cli("verify " + path.string() +
                           " --samples 4 --oracle-check --tolerance 100");
    CHECK(r.exit_code == 0);
    const auto doc = json::parse(r.out);
    REQUIRE(doc.contains("oracle_max_err"));
    CHECK(doc["oracle_max_err"].get<double>() <= 1e-8);
}
