#include "quatpoly/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <fstream>
#include <map>
#include <ostream>

#include "quatpoly/export.hpp"
#include "quatpoly/named.hpp"
#include "quatpoly/project3d.hpp"
#include "quatpoly/snub24.hpp"
#include "quatpoly/verify.hpp"

namespace qp::cli {

namespace {

const std::map<std::string, std::string>& group_cli_names() {
    static const std::map<std::string, std::string> m = {
        {"w-a3", "W_A3"},     {"rot-a3", "rot_A3"}, {"pyritohedral", "pyritohedral"},
        {"w-d4", "W_D4"},     {"rot-d4", "rot_D4"}, {"snub-group", "snub_group"},
        {"w-b3", "W_B3"},     {"w-f4", "W_F4"},     {"w-h4", "W_H4"}};
    return m;
}

bool is_construction(const std::string& name) {
    const auto& names = named::construction_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

bool is_3d_construction(const std::string& name) {
    return name == "icosa-a3" || name == "icosa-a3-mirror" || name == "trunc-oct-b3";
}

const std::map<std::string, std::string>& group_decompositions() {
    static const std::map<std::string, std::string> m = {
        {"w-a3", "[T,Tbar] + [T',T'bar]*"},
        {"rot-a3", "[T,Tbar]"},
        {"pyritohedral", "[T,+-Tbar]"},
        {"w-d4", "[V0,V0] + [V+,V-] + [V-,V+] + [V1,V1]* + [V2,V2]* + [V3,V3]*"},
        {"rot-d4", "[V0,V0] + [V+,V-] + [V-,V+]"},
        {"snub-group", "[T,T] + [T,T]*"},
        {"w-b3", "[T,w4bar Tbar w4] + [T,w4 Tbar w4]* + (T' blocks), w4 = (1+e1)/sqrt2"},
        {"w-f4", "[T,T] + [T,T]* + [T',T'] + [T',T']*"},
        {"w-h4", "[I,I] + [I,I]*"}};
    return m;
}

int cmd_build(const std::string& name, std::ostream& out, std::ostream& err) {
    if (auto it = group_cli_names().find(name); it != group_cli_names().end()) {
        const Group& g = named::group(it->second);
        int stars = 0;
        for (const auto& e : g)
            if (e.star()) ++stars;
        out << name << ": order " << g.order() << "\n";
        out << "  " << (g.order() - stars) << " rotation-type [p,q], " << stars
            << " star-type [p,q]*\n";
        if (auto d = group_decompositions().find(name); d != group_decompositions().end())
            out << "  = " << d->second << "\n";
        return 0;
    }
    if (is_construction(name)) {
        auto c = named::construction(name);
        out << name << ": " << c.points.size() << " vertices\n";
        if (!c.group_name.empty())
            out << "  orbit of " << c.group_name << " on " << c.seed_dynkin << "\n";
        out << "  " << c.summary << "\n";
        return 0;
    }
    err << "unknown name '" << name << "'\n";
    err << "groups: ";
    for (const auto& [k, v] : group_cli_names()) err << k << " ";
    err << "\nconstructions: ";
    for (const auto& n : named::construction_names()) err << n << " ";
    err << "\n";
    return 2;
}

int cmd_verify(const std::string& scope, bool corrupt_root, std::ostream& out, std::ostream& err) {
    std::vector<CheckResult> results;
    try {
        results = run_verification({scope, 0, corrupt_root});
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 2;
    }
    int failures = 0;
    for (const auto& r : results) {
        if (!r.pass) ++failures;
        out << (r.pass ? "PASS" : "FAIL") << "  " << r.id << " [" << r.scope << "]\n";
        out << "      expected: " << r.expected << "\n";
        if (!r.pass) out << "      actual:   " << r.actual << "\n";
    }
    out << results.size() - failures << "/" << results.size() << " checks passed, " << failures
        << " failed\n";
    return failures == 0 ? 0 : 1;
}

bool write_file(const std::string& path, const std::string& data, std::ostream& err) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        err << "cannot open '" << path << "' for writing\n";
        return false;
    }
    f << data;
    return true;
}

int cmd_export(const std::string& name, const std::string& format, const std::string& path,
               std::ostream& out, std::ostream& err) {
    if (!is_construction(name)) {
        err << "unknown construction '" << name << "'\n";
        return 2;
    }
    auto c = named::construction(name);
    std::string data;
    if (format == "json") {
        EdgeGraph eg = edge_graph(c.points);
        FacetList cells;
        if (is_3d_construction(name)) {
            // facets of a 3D construction are its polygon faces
            Solid3 h = hull3d(imaginary_parts(c.points));
            std::map<Vec3, int> back;
            for (int i = 0; i < c.points.size(); ++i)
                back[Vec3(c.points[i][1], c.points[i][2], c.points[i][3])] = i;
            for (const auto& f : h.faces) {
                std::vector<int> face;
                for (int i : f) face.push_back(back.at(h.vertices[i]));
                cells.facets.push_back(std::move(face));
            }
        } else {
            cells = facets(c.points);
        }
        data = to_json(name, c.group_name, c.seed_dynkin, c.points, &eg, &cells);
    } else if (format == "csv") {
        data = to_csv(c.points);
    } else if (format == "off") {
        if (!is_3d_construction(name)) {
            err << "'" << name << "' is 4-dimensional; OFF is a 3D format. "
                << "Use `project` for a 3D projection, or export json/csv.\n";
            return 2;
        }
        data = to_off(hull3d(imaginary_parts(c.points)));
    } else {
        err << "unknown format '" << format << "'\n";
        return 2;
    }
    if (!write_file(path, data, err)) return 2;
    out << "wrote " << path << " (" << data.size() << " bytes)\n";
    return 0;
}

int cmd_project(const std::string& name, const std::string& mode, const std::string& out_dir,
                std::ostream& out, std::ostream& err) {
    if (name != "snub24") {
        err << "project supports the snub24 construction (got '" << name << "')\n";
        return 2;
    }
    using ordered = nlohmann::ordered_json;
    ordered census;
    census["construction"] = name;
    census["mode"] = mode;
    std::vector<std::pair<std::string, Solid3>> solids;

    if (mode == "pyritohedral") {
        auto classes = partition_by_real_part(named::quaternion_set("S"));
        auto orbits = pyritohedral_orbits(named::quaternion_set("S"), named::pyritohedral_4d());
        census["orbit_sizes"] = ordered::array();
        for (const auto& o : orbits) census["orbit_sizes"].push_back(o.size());
        for (size_t k = 0; k < classes.size(); ++k) {
            Solid3 h = hull3d(classes[k].imaginary);
            std::string label = "class" + std::to_string(k);
            census["classes"][label]["real_part"] = classes[k].label;
            census["classes"][label]["size"] = classes[k].points.size();
            census["classes"][label]["faces"] = ordered::parse(census_json(h));
            solids.emplace_back(label, std::move(h));
        }
    } else if (mode == "vertex-figure") {
        Snub24 s = build_snub24();
        VertexFigure vf = vertex_figure(s, s.seed);
        census["faces"] = ordered::parse(census_json(vf.solid));
        solids.emplace_back("j63", vf.solid);
    } else if (mode == "dual-cell") {
        Snub24 s = build_snub24();
        DualPolytope d = dual_snub24(s);
        DualCell dc = dual_cell_at(s, d, s.seed);
        census["faces"] = ordered::parse(census_json(dc.solid));
        solids.emplace_back("dual-cell", dc.solid);
    } else {
        err << "unknown mode '" << mode << "' (pyritohedral | vertex-figure | dual-cell)\n";
        return 2;
    }

    for (const auto& [label, solid] : solids) {
        std::string path = out_dir + "/" + name + "-" + mode + "-" + label + ".off";
        if (!write_file(path, to_off(solid), err)) return 2;
        out << "wrote " << path << "\n";
    }
    std::string cpath = out_dir + "/" + name + "-" + mode + "-census.json";
    if (!write_file(cpath, census.dump(2) + "\n", err)) return 2;
    out << "wrote " << cpath << "\n";
    return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact snub 24-cell toolkit"};
    app.require_subcommand(1);

    std::string build_name;
    auto* build = app.add_subcommand("build", "construct a named group or point set");
    build->add_option("name", build_name, "group or construction name")->required();

    std::string verify_scope = "all";
    bool corrupt_root = false;
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("scope", verify_scope, "all | algebra | coxeter | polytope | project3d");
    verify->add_flag("--corrupt-root", corrupt_root, "test fixture: perturb a D4 simple root")
        ->group("");  // hidden

    std::string exp_name, exp_format = "json", exp_path;
    auto* exp = app.add_subcommand("export", "write exact/approximate geometry to a file");
    exp->add_option("construction", exp_name)->required();
    exp->add_option("--format", exp_format, "json | csv | off");
    exp->add_option("--output", exp_path, "output path")->required();

    std::string prj_name, prj_mode, prj_dir = ".";
    auto* prj = app.add_subcommand("project", "3D projections as OFF meshes + census JSON");
    prj->add_option("construction", prj_name)->required();
    prj->add_option("--mode", prj_mode, "pyritohedral | vertex-figure | dual-cell")->required();
    prj->add_option("--out-dir", prj_dir, "output directory");

    std::vector<const char*> argv;
    argv.push_back("quatpoly");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (build->parsed()) return cmd_build(build_name, out, err);
        if (verify->parsed()) return cmd_verify(verify_scope, corrupt_root, out, err);
        if (exp->parsed()) return cmd_export(exp_name, exp_format, exp_path, out, err);
        if (prj->parsed()) return cmd_project(prj_name, prj_mode, prj_dir, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace qp::cli
