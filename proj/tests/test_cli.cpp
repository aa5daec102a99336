// End-to-end tests of the itmlab binary: exit codes, JSON shapes against the
// shipped schemas, determinism of renders and surveys.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = (env_prefix.empty() ? "" : env_prefix + " ") +
                            std::string(ITMLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json load_schema(const std::string& name) {
    return json::parse(slurp(std::string(ITMLAB_SCHEMA_DIR) + "/" + name));
}

// minimal JSON-schema checker: type tags, required keys, enums, items
bool conforms(const json& value, const json& schema, std::string* why) {
    if (schema.contains("type")) {
        const std::string t = schema["type"];
        const bool ok = (t == "object" && value.is_object()) ||
                        (t == "array" && value.is_array()) ||
                        (t == "string" && value.is_string()) ||
                        (t == "integer" && value.is_number_integer()) ||
                        (t == "number" && value.is_number()) ||
                        (t == "boolean" && value.is_boolean());
        if (!ok) {
            *why = "type mismatch: expected " + t + " got " + value.dump().substr(0, 60);
            return false;
        }
    }
    if (schema.contains("enum")) {
        bool found = false;
        for (const auto& e : schema["enum"]) found = found || e == value;
        if (!found) {
            *why = "enum mismatch: " + value.dump();
            return false;
        }
    }
    if (schema.contains("required"))
        for (const auto& key : schema["required"])
            if (!value.contains(key.get<std::string>())) {
                *why = "missing required key " + key.get<std::string>();
                return false;
            }
    if (schema.contains("properties"))
        for (const auto& [key, sub] : schema["properties"].items())
            if (value.contains(key) && !conforms(value[key], sub, why)) {
                *why = key + ": " + *why;
                return false;
            }
    if (schema.contains("items") && value.is_array())
        for (const auto& item : value)
            if (!conforms(item, schema["items"], why)) return false;
    return true;
}

void check_schema(const json& value, const std::string& schema_name) {
    std::string why;
    const bool ok = conforms(value, load_schema(schema_name), &why);
    INFO(schema_name << ": " << why);
    CHECK(ok);
}

struct Pgm {
    long w = 0, h = 0;
    std::string pixels;

    unsigned char at(long i, long j) const {
        return static_cast<unsigned char>(pixels[static_cast<std::size_t>(j * w + i)]);
    }
};

Pgm parse_pgm(const std::string& bytes) {
    Pgm p;
    std::istringstream in(bytes);
    std::string magic;
    long maxval;
    in >> magic >> p.w >> p.h >> maxval;
    REQUIRE(magic == "P5");
    REQUIRE(maxval == 255);
    in.get();  // single whitespace after the header
    p.pixels.resize(static_cast<std::size_t>(p.w * p.h));
    in.read(p.pixels.data(), static_cast<std::streamsize>(p.pixels.size()));
    REQUIRE(in.gcount() == static_cast<std::streamsize>(p.pixels.size()));
    return p;
}

}  // namespace

TEST_CASE("classify: exit codes and schema") {
    auto r = run_cli("classify 2/5 1/5");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    check_schema(j, "classification.schema.json");
    CHECK(j["verdict"] == "finite_type");
    CHECK(j["steps"] == 1);
    CHECK(j["k_prefix"]["symbols"] == json::array({2}));

    r = run_cli("classify --fixed-point 3");
    CHECK(r.exit_code == 2);
    j = json::parse(r.out);
    CHECK(j["verdict"] == "infinite_certified");
    CHECK(j["period"] == 1);
    check_schema(j, "classification.schema.json");

    // decimal strings parse as exact rationals: 0.5 = 1/2 is a rotation
    r = run_cli("classify 0.5 0.5");
    CHECK(r.exit_code == 0);
    j = json::parse(r.out);
    CHECK(j["verdict"] == "finite_type");
    CHECK(j["steps"] == 0);

    r = run_cli("classify not-a-number 1/5");
    CHECK(r.exit_code == 64);

    // float mode cannot certify the fixed point: budget exhausts, exit 3
    r = run_cli("classify --fixed-point 3 --mode float --bits 192 --budget 40");
    CHECK(r.exit_code == 3);
    j = json::parse(r.out);
    CHECK(j["verdict"] == "inconclusive");
}

TEST_CASE("survey: deterministic for a fixed seed and overwhelmingly finite") {
    const std::string args = "survey --samples 300 --budget 600 --seed 42 --threads 4";
    auto r1 = run_cli(args);
    auto r2 = run_cli(args);
    CHECK(r1.exit_code == 0);
    CHECK(r1.out == r2.out);
    json j = json::parse(r1.out);
    check_schema(j, "survey.schema.json");
    CHECK(j["fraction_finite"].get<double>() >= 0.99);
    // histogram counts add up to the finite count
    std::size_t total = 0;
    for (const auto& b : j["escape_step_histogram"]) total += b["count"].get<std::size_t>();
    CHECK(total == j["count_finite"].get<std::size_t>());

    auto r3 = run_cli("survey --samples 300 --budget 600 --seed 43 --threads 4");
    CHECK(json::parse(r3.out)["fraction_finite"].get<double>() >= 0.99);
    CHECK(r3.out != r1.out);

    // the classified-finite fraction is monotone in the budget
    auto r4 = run_cli("survey --samples 300 --budget 1 --seed 42 --threads 4");
    CHECK(json::parse(r4.out)["fraction_finite"].get<double>() <=
          j["fraction_finite"].get<double>());
}

TEST_CASE("render-a escape mode: deterministic bytes, shading toward the parameter set") {
    const std::string path1 = "render_test_1.pgm", path2 = "render_test_2.pgm";
    auto r = run_cli("render-a --width 40 --height 40 --budget 30 --threads 4 --out " + path1);
    CHECK(r.exit_code == 0);
    r = run_cli("render-a --width 40 --height 40 --budget 30 --threads 4 --out " + path2);
    CHECK(r.exit_code == 0);
    const std::string b1 = slurp(path1), b2 = slurp(path2);
    CHECK(b1 == b2);
    const Pgm img = parse_pgm(b1);
    REQUIRE(img.w == 40);
    REQUIRE(img.h == 40);

    // (0.5, 0.1) escapes in one step: nearly white
    const long i_fast = 20, j_fast = static_cast<long>((1.0 - 0.1) * 40);
    // the pixel containing the cell-3 fixed point (0.31111, 0.09679) escapes
    // later: strictly darker
    const long i_fp = static_cast<long>(0.31111 * 40), j_fp = static_cast<long>((1.0 - 0.09679) * 40);
    CHECK(img.at(i_fast, j_fast) > 200);
    CHECK(img.at(i_fp, j_fp) < img.at(i_fast, j_fast));

    // above the diagonal nothing is classified: background white
    CHECK(img.at(2, 2) == 255);

    // just under the neutral corner (1,1) the escape takes longer than the
    // budget: black artifact (the corner pixel itself sits on the rotation
    // diagonal and stays white)
    CHECK(img.at(39, 1) == 0);
    CHECK(img.at(39, 0) == 255);
    std::remove(path1.c_str());
    std::remove(path2.c_str());
}

TEST_CASE("render-a ifs mode marks the fixed point black") {
    const std::string path = "render_test_ifs.pgm";
    auto r = run_cli("render-a --render-mode ifs --width 40 --height 40 --ifs-depth 4 --out " + path);
    CHECK(r.exit_code == 0);
    const Pgm img = parse_pgm(slurp(path));
    const long i_fp = static_cast<long>(0.31111 * 40), j_fp = static_cast<long>((1.0 - 0.09679) * 40);
    CHECK(img.at(i_fp, j_fp) == 0);
    // the wedge toward (0,0) is painted, far-off-cell interior pixels are not
    CHECK(img.at(0, 39) == 0);
    CHECK(img.at(static_cast<long>(0.8 * 40), static_cast<long>((1.0 - 0.1) * 40)) == 255);
    std::remove(path.c_str());
}

TEST_CASE("render-a rejects an unwritable output path") {
    auto r = run_cli("render-a --width 8 --height 8 --out /nonexistent-dir/x.pgm");
    CHECK(r.exit_code == 74);
}

TEST_CASE("dimension command: values and schema") {
    auto r = run_cli("dimension --constant-k 3 --depth 60 --csv dim_test.csv");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    check_schema(j, "dimension.schema.json");
    CHECK(j["fixed_point_dimension"].get<double>() == doctest::Approx(0.6635).epsilon(5e-4));
    CHECK(j["cover"]["rows"].size() == 60);
    // CSV sidecar: header plus one row per depth
    const std::string csv = slurp("dim_test.csv");
    CHECK(csv.rfind("depth,sum_l,log_pi,quotient\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 61);
    std::remove("dim_test.csv");

    r = run_cli("dimension --alpha 2/5 --beta 1/5 --depth 50");
    CHECK(r.exit_code == 0);
    j = json::parse(r.out);
    CHECK(j["classification"]["verdict"] == "finite_type");
    CHECK(j["cover"]["rows"].size() == 1);
}

TEST_CASE("ue command: certification verdicts and schema") {
    auto r = run_cli("ue --generator constant:2 --depth 24");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    check_schema(j, "ue.schema.json");
    CHECK(j["verdict"] == "ue_certified");
    CHECK(j["condition"] == "product_vanishes");

    r = run_cli("ue --generator arith:1,1 --depth 24");
    j = json::parse(r.out);
    CHECK(j["verdict"] == "ue_certified");
    CHECK(j["condition"] == "sum_diverges");
    check_schema(j, "ue.schema.json");

    r = run_cli("ue --generator geom:2,2 --depth 24 --csv ue_test.csv");
    j = json::parse(r.out);
    CHECK(j["verdict"] == "nue_certified");
    CHECK(j["nue_lambda"].get<double>() == doctest::Approx(2.0));
    const std::string csv = slurp("ue_test.csv");
    CHECK(csv.rfind("depth,diameter\n", 0) == 0);
    std::remove("ue_test.csv");

    r = run_cli("ue --generator list:2,3,2,3,2,3,2,3 --depth 8");
    j = json::parse(r.out);
    CHECK((j["verdict"] == "unknown" || j["verdict"] == "numerical_ue_like" ||
           j["verdict"] == "numerical_nue_like"));

    r = run_cli("ue --generator bogus:1 --depth 8");
    CHECK(r.exit_code == 64);
}

TEST_CASE("code command: substitution words and orbit cross-check") {
    auto r = run_cli("code --fixed-point 3 --length 40");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["word"].get<std::string>().substr(0, 5) == "31122");
    CHECK(j["length"] == 40);

    r = run_cli("code --fixed-point 2 --length 200 --check --mode float --bits 192");
    CHECK(r.exit_code == 0);
    j = json::parse(r.out);
    CHECK(j["match"] == true);

    r = run_cli("code --fixed-point 3 --length 10 --abelian");
    j = json::parse(r.out);
    REQUIRE(j.contains("abelian"));
    CHECK(j["abelian"]["counts"].size() == 3);
    const double fsum = j["frequencies"][0].get<double>() + j["frequencies"][1].get<double>() +
                        j["frequencies"][2].get<double>();
    CHECK(fsum == doctest::Approx(1.0).epsilon(1e-12));

    r = run_cli("code --generator list:1,1,1,1 --length 5");
    CHECK(r.exit_code == 64);  // prefix exhaustion surfaces as a usage error
}

TEST_CASE("orbit and attractor commands") {
    auto r = run_cli("orbit --alpha 1/2 --beta 1/4 --x0 1 --steps 3");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["points"].size() == 4);
    CHECK(j["points"][1].get<double>() == doctest::Approx(0.25));
    CHECK(j["points"][3].get<double>() == doctest::Approx(0.0));
    CHECK(j["branches"] == json::array({3, 1, 3}));

    r = run_cli("orbit --alpha 1/2 --beta 1/2 --x0 0 --steps 6");
    j = json::parse(r.out);
    CHECK(j["period"] == 2);
    CHECK(j["preperiod"] == 0);

    r = run_cli("attractor --alpha 1/2 --beta 1/4 --steps 10");
    j = json::parse(r.out);
    CHECK(j["stabilized_at"] == 1);
    CHECK(j["rows"][1]["measure"].get<double>() == doctest::Approx(0.75));

    r = run_cli("attractor --fixed-point 3 --steps 8");
    j = json::parse(r.out);
    CHECK(j["stabilized_at"].is_null());
    CHECK(j["rows"].size() == 9);
}

TEST_CASE("hd0 command evaluates the cover inequality") {
    auto r = run_cli("hd0 --k 3 --depth-i 5 --eps 1e-12 --eps-prime 1e-70 --n-covers 100 --pi 1/1000");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["holds"] == true);

    r = run_cli("hd0 --k 3 --depth-i 5 --eps 1e-12 --eps-prime 1e-24 --n-covers 100 --pi 1/1000");
    j = json::parse(r.out);
    CHECK(j["holds"] == false);
}

TEST_CASE("low float precision flags instead of guessing") {
    // 16 bits cannot separate deep iterates from the cuts: the itinerary is
    // cut short at a flagged position and the cross-check reports no match
    auto r = run_cli("code --fixed-point 2 --length 200 --check --mode float --bits 16");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["match"] == false);
    CHECK(j.contains("indeterminate_at"));
}

TEST_CASE("declared k-sequences classify as explicit infinite type") {
    auto r = run_cli("classify --generator constant:3");
    CHECK(r.exit_code == 2);
    json j = json::parse(r.out);
    CHECK(j["verdict"] == "infinite_certified");
    CHECK(j["reason"] == "explicit_k_sequence");
    r = run_cli("classify --generator constant:1");
    CHECK(r.exit_code == 64);  // inadmissible tail
}

TEST_CASE("ITMLAB_PRECISION_BITS supplies the float-mode default") {
    auto lo = run_cli("code --fixed-point 2 --length 200 --check --mode float",
                      "ITMLAB_PRECISION_BITS=16");
    CHECK(json::parse(lo.out)["match"] == false);
    auto hi = run_cli("code --fixed-point 2 --length 200 --check --mode float",
                      "ITMLAB_PRECISION_BITS=512");
    CHECK(json::parse(hi.out)["match"] == true);
}
