#include "quatpoly/export.hpp"

#include <charconv>
#include <json.hpp>
#include <stdexcept>

namespace qp {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

std::string format_double(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

std::vector<std::string> field_to_strings(const FieldScalar& x) {
    return {rational_str(x.a), rational_str(x.b), rational_str(x.c), rational_str(x.d)};
}

FieldScalar field_from_strings(const std::vector<std::string>& s) {
    if (s.size() != 4) throw std::invalid_argument("field_from_strings: need 4 rationals");
    return {parse_rational(s[0]), parse_rational(s[1]), parse_rational(s[2]), parse_rational(s[3])};
}

namespace {

// approx entries go through the fixed 12-digit formatting so that emitted
// bytes do not depend on the json library's float printing
ordered approx_number(double v) { return ordered::parse(format_double(v)); }

}  // namespace

std::string to_json(const std::string& name, const std::string& group_name,
                    const std::string& seed_dynkin, const PointSet& pts,
                    const EdgeGraph* edges, const FacetList* cells) {
    ordered j;
    j["metadata"]["construction"] = name;
    if (!group_name.empty()) j["metadata"]["group"] = group_name;
    if (!seed_dynkin.empty()) j["metadata"]["seed_dynkin"] = seed_dynkin;
    j["metadata"]["vertex_count"] = pts.size();
    j["vertices"] = ordered::array();
    for (const auto& p : pts) {
        ordered v;
        v["exact"] = ordered::array();
        v["approx"] = ordered::array();
        for (int i = 0; i < 4; ++i) {
            v["exact"].push_back(field_to_strings(p[i]));
            v["approx"].push_back(approx_number(p[i].to_double()));
        }
        j["vertices"].push_back(std::move(v));
    }
    if (edges) {
        j["edges"] = ordered::array();
        for (const auto& [a, b] : edges->edges) j["edges"].push_back(ordered::array({a, b}));
    }
    if (cells) {
        j["facets"] = ordered::array();
        for (const auto& f : cells->facets) j["facets"].push_back(f);
    }
    return j.dump(2) + "\n";
}

PointSet points_from_json(const std::string& json_text) {
    json j = json::parse(json_text);
    std::vector<Quaternion> pts;
    for (const auto& v : j.at("vertices")) {
        Quaternion q;
        const auto& ex = v.at("exact");
        if (ex.size() != 4) throw std::invalid_argument("points_from_json: bad vertex");
        for (int i = 0; i < 4; ++i) q[i] = field_from_strings(ex[i].get<std::vector<std::string>>());
        pts.push_back(q);
    }
    return PointSet(std::move(pts));
}

std::string to_csv(const PointSet& pts) {
    std::string out = "x0,x1,x2,x3\n";
    for (const auto& p : pts) {
        for (int i = 0; i < 4; ++i) {
            out += format_double(p[i].to_double());
            out += i == 3 ? '\n' : ',';
        }
    }
    return out;
}

std::string to_off(const Solid3& solid) {
    std::string out = "OFF\n";
    out += std::to_string(solid.vertices.size()) + " " + std::to_string(solid.faces.size()) +
           " " + std::to_string(solid.edge_count()) + "\n";
    for (const auto& v : solid.vertices) {
        for (int i = 0; i < 3; ++i) {
            out += format_double(v[i].to_double());
            out += i == 2 ? '\n' : ' ';
        }
    }
    for (const auto& f : solid.faces) {
        out += std::to_string(f.size());
        for (int i : f) out += " " + std::to_string(i);
        out += "\n";
    }
    return out;
}

std::string census_json(const Solid3& solid) {
    ordered j;
    j["vertices"] = solid.vertices.size();
    j["edges"] = solid.edge_count();
    j["faces"] = solid.faces.size();
    std::map<std::string, int> counts;
    std::map<std::string, std::vector<std::string>> lens;
    for (const auto& pc : solid.classify_faces()) {
        counts[pc.name()]++;
        if (!lens.count(pc.name())) {
            std::vector<std::string> d;
            for (const auto& l2 : pc.distinct_len2()) {
                d.push_back(format_double(std::sqrt(l2.to_double())));
            }
            lens[pc.name()] = std::move(d);
        }
    }
    j["face_census"] = ordered::object();
    for (const auto& [nm, n] : counts) {
        j["face_census"][nm]["count"] = n;
        j["face_census"][nm]["edge_lengths"] = lens[nm];
    }
    return j.dump(2) + "\n";
}

}  // namespace qp
