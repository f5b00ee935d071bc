#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "quatpoly/cli.hpp"
#include "quatpoly/export.hpp"
#include "quatpoly/named.hpp"
#include "quatpoly/project3d.hpp"

using namespace qp;

TEST_CASE("float formatting: 12 significant digits, locale-independent") {
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(-0.0) == "0");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(FieldScalar::tau().to_double()) == "1.61803398875");
    CHECK(format_double(-0.5) == "-0.5");
}

TEST_CASE("exact JSON round-trips losslessly") {
    PointSet s = named::quaternion_set("S");
    EdgeGraph eg = edge_graph(s);
    std::string j = to_json("snub24", "snub_group", "(tau,1,tau,tau)*sigma^2/2", s, &eg, nullptr);
    PointSet back = points_from_json(j);
    CHECK(back == s);
    // byte-identical on repeated export
    CHECK(j == to_json("snub24", "snub_group", "(tau,1,tau,tau)*sigma^2/2", s, &eg, nullptr));
}

TEST_CASE("rational strings in the exact field") {
    FieldScalar x(make_rational(3, 2), make_rational(-1, 3), make_rational(0), make_rational(7));
    auto s = field_to_strings(x);
    CHECK(s == std::vector<std::string>{"3/2", "-1/3", "0", "7"});
    CHECK(field_from_strings(s) == x);
}

TEST_CASE("csv has one row per vertex") {
    PointSet t = named::quaternion_set("T");
    std::string csv = to_csv(t);
    int lines = 0;
    for (char c : csv)
        if (c == '\n') ++lines;
    CHECK(lines == 25);  // header + 24 vertices
}

TEST_CASE("OFF export of the icosahedron") {
    Solid3 h = hull3d(imaginary_parts(named::construction("icosa-a3").points));
    std::string off = to_off(h);
    CHECK(off.substr(0, 4) == "OFF\n");
    std::istringstream is(off);
    std::string hdr;
    int v, f, e;
    is >> hdr >> v >> f >> e;
    CHECK(v == 12);
    CHECK(f == 20);
    CHECK(e == 30);
}

namespace {

int run_cli(std::initializer_list<std::string> args, std::string* out_text = nullptr) {
    std::ostringstream out, err;
    int rc = cli::run(std::vector<std::string>(args), out, err);
    if (out_text) *out_text = out.str() + err.str();
    return rc;
}

}  // namespace

TEST_CASE("cli: build") {
    std::string text;
    CHECK(run_cli({"build", "snub-group"}, &text) == 0);
    CHECK(text.find("order 576") != std::string::npos);
    CHECK(run_cli({"build", "snub24"}, &text) == 0);
    CHECK(text.find("96 vertices") != std::string::npos);
    CHECK(run_cli({"build", "f4-union"}, &text) == 0);
    CHECK(text.find("192 vertices") != std::string::npos);
    CHECK(run_cli({"build", "w-h4"}, &text) == 0);
    CHECK(text.find("order 14400") != std::string::npos);
    CHECK(run_cli({"build", "nope"}) == 2);
    CHECK(run_cli({"bogus-command"}) == 2);
}

TEST_CASE("cli: export to files, deterministic bytes") {
    std::string d = "/tmp/qp_export_test";
    std::string text;
    REQUIRE(run_cli({"export", "icosa-a3", "--format", "off", "--output", d + ".off"}, &text) == 0);
    REQUIRE(run_cli({"export", "24cell", "--format", "json", "--output", d + ".json"}, &text) == 0);
    REQUIRE(run_cli({"export", "24cell", "--format", "csv", "--output", d + ".csv"}, &text) == 0);
    // OFF of a 4D set is a usage error with a hint
    CHECK(run_cli({"export", "24cell", "--format", "off", "--output", d + "2.off"}, &text) == 2);
    CHECK(text.find("project") != std::string::npos);
    CHECK(run_cli({"export", "24cell", "--format", "bogus", "--output", d + ".x"}) == 2);
    CHECK(run_cli({"export", "nope", "--format", "json", "--output", d + ".x"}) == 2);

    std::ifstream j1(d + ".json");
    std::stringstream buf;
    buf << j1.rdbuf();
    PointSet back = points_from_json(buf.str());
    CHECK(back == named::quaternion_set("T"));

    // JSON of a 3D construction carries its polygon faces as facets
    REQUIRE(run_cli({"export", "icosa-a3", "--format", "json", "--output", d + "3.json"}) == 0);
    std::ifstream j3(d + "3.json");
    std::stringstream buf3;
    buf3 << j3.rdbuf();
    auto parsed = nlohmann::json::parse(buf3.str());
    CHECK(parsed["facets"].size() == 20);
    for (const auto& f : parsed["facets"]) CHECK(f.size() == 3);
    CHECK(points_from_json(buf3.str()) == named::construction("icosa-a3").points);
}

TEST_CASE("cli: project modes and exit codes") {
    CHECK(run_cli({"project", "snub24", "--mode", "dual-cell", "--out-dir", "/tmp"}) == 0);
    CHECK(run_cli({"project", "snub24", "--mode", "bogus", "--out-dir", "/tmp"}) == 2);
    CHECK(run_cli({"project", "24cell", "--mode", "dual-cell", "--out-dir", "/tmp"}) == 2);
}

TEST_CASE("cli: verify scope filter") {
    std::string text;
    CHECK(run_cli({"verify", "algebra"}, &text) == 0);
    CHECK(text.find("property/sign-float-agreement-1e5") != std::string::npos);
    CHECK(text.find("order/W_D4") == std::string::npos);
    CHECK(run_cli({"verify", "bogus-scope"}) == 2);
}
