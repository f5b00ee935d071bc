#include "quatpoly/named.hpp"

#include <stdexcept>

namespace qp::named {

namespace {

FieldScalar half() { return FieldScalar::rational(1, 2); }

std::vector<Quaternion> v0_set() {
    std::vector<Quaternion> out;
    for (int i = 0; i < 4; ++i) {
        out.push_back(Quaternion::unit(i));
        out.push_back(-Quaternion::unit(i));
    }
    return out;
}

// (+-1 +-e1 +-e2 +-e3)/2 with even (parity=0) or odd (parity=1) minus count.
std::vector<Quaternion> vpm_set(int parity) {
    std::vector<Quaternion> out;
    for (int mask = 0; mask < 16; ++mask) {
        if (__builtin_popcount(mask) % 2 != parity) continue;
        Quaternion v;
        for (int i = 0; i < 4; ++i)
            v += Quaternion::unit(i) * ((mask >> i) & 1 ? -half() : half());
        out.push_back(v);
    }
    return out;
}

// V_i = {(+-1 +- e_i)/sqrt2, (+-e_j +- e_k)/sqrt2} with (i,j,k) cyclic in {1,2,3}.
std::vector<Quaternion> v123_set(int i) {
    const int j = i % 3 + 1, k = j % 3 + 1;
    FieldScalar r = FieldScalar::inv_sqrt2();
    std::vector<Quaternion> out;
    for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
            out.push_back((Quaternion::unit(0) * FieldScalar(s1) + Quaternion::unit(i) * FieldScalar(s2)) * r);
            out.push_back((Quaternion::unit(j) * FieldScalar(s1) + Quaternion::unit(k) * FieldScalar(s2)) * r);
        }
    return out;
}

std::vector<Quaternion> t_set() {
    auto out = v0_set();
    auto vp = vpm_set(0), vm = vpm_set(1);
    out.insert(out.end(), vp.begin(), vp.end());
    out.insert(out.end(), vm.begin(), vm.end());
    return out;
}

std::vector<Quaternion> tprime_set() {
    std::vector<Quaternion> out;
    for (int i : {1, 2, 3}) {
        auto v = v123_set(i);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

// The 96 snub 24-cell vertices as twelve sign patterns:
// each row lists the coefficient magnitudes on (1, e1, e2, e3); the three
// nonzero entries take all 8 sign choices, everything scaled by 1/2.
std::vector<Quaternion> s_set() {
    const FieldScalar t = FieldScalar::tau(), s = FieldScalar::sigma(), o = FieldScalar(1), z = FieldScalar(0);
    const FieldScalar rows[12][4] = {
        {t, o, z, s}, {t, s, o, z}, {t, z, s, o},
        {s, o, t, z}, {s, z, o, t}, {s, t, z, o},
        {o, t, s, z}, {o, z, t, s}, {o, s, z, t},
        {z, s, t, o}, {z, o, s, t}, {z, t, o, s}};
    std::vector<Quaternion> out;
    out.reserve(96);
    for (const auto& row : rows) {
        int nz[3], n = 0;
        for (int i = 0; i < 4; ++i)
            if (!row[i].is_zero()) nz[n++] = i;
        for (int mask = 0; mask < 8; ++mask) {
            Quaternion v;
            for (int b = 0; b < 3; ++b) {
                FieldScalar coeff = row[nz[b]] * half();
                v += Quaternion::unit(nz[b]) * ((mask >> b) & 1 ? -coeff : coeff);
            }
            out.push_back(v);
        }
    }
    return out;
}

std::vector<GroupElement> pair_block(const std::vector<Quaternion>& ps,
                                     const std::vector<Quaternion>& qs, bool star) {
    std::vector<GroupElement> els;
    els.reserve(ps.size() * qs.size());
    for (const auto& p : ps)
        for (const auto& q : qs) els.emplace_back(p, q, star);
    return els;
}

std::vector<GroupElement> merged(std::initializer_list<std::vector<GroupElement>> blocks) {
    std::vector<GroupElement> all;
    for (const auto& b : blocks) all.insert(all.end(), b.begin(), b.end());
    return all;
}

std::vector<GroupElement> rotation_generators(const RootSystemData& rs) {
    auto refl = rs.reflections();
    std::vector<GroupElement> gens;
    for (size_t i = 0; i < refl.size(); ++i)
        for (size_t j = 0; j < refl.size(); ++j)
            if (i != j) gens.push_back(refl[i] * refl[j]);
    return gens;
}

}  // namespace

const RootSystemData& d4() {
    static const RootSystemData rs = RootSystemData::from_roots({
        Quaternion(0, 0, 1, -1),   // e2 - e3
        Quaternion(0, 1, 0, 1),    // e1 + e3
        Quaternion(0, 0, -1, -1),  // -e2 - e3
        Quaternion(1, -1, 0, 0),   // 1 - e1
    });
    return rs;
}

const RootSystemData& a3() {
    static const RootSystemData rs = RootSystemData::from_roots({
        Quaternion(0, 1, 1, 0),    // e1 + e2
        Quaternion(0, 0, -1, 1),   // -e2 + e3
        Quaternion(0, -1, 1, 0),   // -e1 + e2
    });
    return rs;
}

const RootSystemData& f4() {
    const FieldScalar r = FieldScalar::inv_sqrt2();
    static const RootSystemData rs = RootSystemData::from_roots({
        Quaternion(r, -r, -r, -r),                    // (1 - e1 - e2 - e3)/sqrt2
        Quaternion(0, 0, 0, FieldScalar::sqrt2()),    // sqrt2 e3
        Quaternion(0, 0, 1, -1),                      // e2 - e3
        Quaternion(0, 1, -1, 0),                      // e1 - e2
    });
    return rs;
}

const RootSystemData& b3_3d() {
    static const RootSystemData rs = RootSystemData::from_roots({
        Quaternion(0, 1, -1, 0),   // e1 - e2
        Quaternion(0, 0, 1, -1),   // e2 - e3
        Quaternion(0, 0, 0, 1),    // e3
    });
    return rs;
}

PointSet quaternion_set(const std::string& name) {
    if (name == "V0") return PointSet(v0_set());
    if (name == "Vplus") return PointSet(vpm_set(0));
    if (name == "Vminus") return PointSet(vpm_set(1));
    if (name == "V1") return PointSet(v123_set(1));
    if (name == "V2") return PointSet(v123_set(2));
    if (name == "V3") return PointSet(v123_set(3));
    if (name == "T") return PointSet(t_set());
    if (name == "Tprime") return PointSet(tprime_set());
    if (name == "S") return PointSet(s_set());
    if (name == "Stilde") return PointSet(s_set()).galois_sqrt5();
    if (name == "I") return PointSet::set_union(PointSet(t_set()), PointSet(s_set()));
    if (name == "Itilde") return PointSet::set_union(PointSet(t_set()), PointSet(s_set()).galois_sqrt5());
    throw std::invalid_argument("quaternion_set: unknown name '" + name + "'");
}

Quaternion snub_seed() {
    return {FieldScalar::tau() * half(), half(), FieldScalar(0), FieldScalar::sigma() * half()};
}

Quaternion snub_seed_mirror() { return snub_seed().galois_sqrt5(); }

namespace {

Group build_group(const std::string& name) {
    if (name == "W_D4") return Group::generate(d4().reflections(), 384, name);
    if (name == "rot_D4") return Group::generate(rotation_generators(d4()), 192, name);
    if (name == "snub_group") {
        auto gens = rotation_generators(d4());
        // Dynkin-diagram S3 generators of D4 (sec 2):
        gens.emplace_back(Quaternion(half(), -half(), half(), -half()),
                          Quaternion(half(), half(), half(), half()), false);
        gens.emplace_back(Quaternion::e2(), -Quaternion::e2(), true);
        return Group::generate(std::move(gens), 1152, name);
    }
    if (name == "W_A3") return Group::generate(a3().reflections(), 48, name);
    if (name == "rot_A3") return Group::generate(rotation_generators(a3()), 24, name);
    if (name == "pyritohedral") {
        auto gens = rotation_generators(a3());
        gens.emplace_back(Quaternion::one(), -Quaternion::one(), false);  // central inversion
        return Group::generate(std::move(gens), 48, name);
    }
    if (name == "W_B3") {
        auto refl = f4().reflections();
        return Group::generate({refl[0], refl[1], refl[2]}, 96, name);
    }
    if (name == "W_F4") return Group::generate(f4().reflections(), 2304, name);
    if (name == "W_H4") {
        // I is generated by two quaternions; the star flips come from [1,1]*.
        Quaternion g1(half(), half(), half(), half());
        Quaternion g2 = snub_seed();
        std::vector<GroupElement> gens = {
            GroupElement(g1, Quaternion::one(), false), GroupElement(g2, Quaternion::one(), false),
            GroupElement(Quaternion::one(), g1, false), GroupElement(Quaternion::one(), g2, false),
            GroupElement(Quaternion::one(), Quaternion::one(), true)};
        return Group::generate(std::move(gens), 28800, name);
    }
    throw std::invalid_argument("group: unknown name '" + name + "'");
}

}  // namespace

const Group& group(const std::string& name) {
    static const Group w_a3 = build_group("W_A3");
    static const Group rot_a3 = build_group("rot_A3");
    static const Group pyrito = build_group("pyritohedral");
    static const Group w_d4 = build_group("W_D4");
    static const Group rot_d4 = build_group("rot_D4");
    static const Group snub = build_group("snub_group");
    static const Group w_b3 = build_group("W_B3");
    static const Group w_f4 = build_group("W_F4");
    if (name == "W_A3") return w_a3;
    if (name == "rot_A3") return rot_a3;
    if (name == "pyritohedral") return pyrito;
    if (name == "W_D4") return w_d4;
    if (name == "rot_D4") return rot_d4;
    if (name == "snub_group") return snub;
    if (name == "W_B3") return w_b3;
    if (name == "W_F4") return w_f4;
    if (name == "W_H4") {
        static const Group w_h4 = build_group("W_H4");  // built lazily, ~14k elements
        return w_h4;
    }
    throw std::invalid_argument("group: unknown name '" + name + "'");
}

const Group& pyritohedral_4d() {
    static const Group g = [] {
        std::vector<GroupElement> els;
        for (const auto& t : t_set()) {
            els.emplace_back(t, t.conjugate(), false);
            els.emplace_back(t, t.conjugate(), true);
        }
        return Group::from_elements(std::move(els), "pyritohedral_4d");
    }();
    return g;
}

const Group& octahedral_3d() {
    static const Group g = Group::generate(b3_3d().reflections(), 96, "W_B3_3d");
    return g;
}

Group d4_pair_set() {
    return Group::from_elements(
        merged({pair_block(v0_set(), v0_set(), false),
                pair_block(vpm_set(0), vpm_set(1), false),
                pair_block(vpm_set(1), vpm_set(0), false),
                pair_block(v123_set(1), v123_set(1), true),
                pair_block(v123_set(2), v123_set(2), true),
                pair_block(v123_set(3), v123_set(3), true)}),
        "W_D4 (pair set)");
}

Group rot_d4_pair_set() {
    return Group::from_elements(merged({pair_block(v0_set(), v0_set(), false),
                                        pair_block(vpm_set(0), vpm_set(1), false),
                                        pair_block(vpm_set(1), vpm_set(0), false)}),
                                "rot_D4 (pair set)");
}

Group snub_pair_set() {
    auto t = t_set();
    return Group::from_elements(
        merged({pair_block(t, t, false), pair_block(t, t, true)}), "snub (pair set)");
}

Group f4_pair_set() {
    auto t = t_set(), tp = tprime_set();
    return Group::from_elements(merged({pair_block(t, t, false), pair_block(t, t, true),
                                        pair_block(tp, tp, false), pair_block(tp, tp, true)}),
                                "W_F4 (pair set)");
}

Group a3_pair_set() {
    std::vector<GroupElement> els;
    for (const auto& t : t_set()) els.emplace_back(t, t.conjugate(), false);
    for (const auto& t : tprime_set()) els.emplace_back(t, t.conjugate(), true);
    return Group::from_elements(std::move(els), "W_A3 (pair set)");
}

Group rot_a3_pair_set() {
    std::vector<GroupElement> els;
    for (const auto& t : t_set()) els.emplace_back(t, t.conjugate(), false);
    return Group::from_elements(std::move(els), "rot_A3 (pair set)");
}

Group pyritohedral_pair_set() {
    std::vector<GroupElement> els;
    for (const auto& t : t_set()) {
        els.emplace_back(t, t.conjugate(), false);
        els.emplace_back(t, -t.conjugate(), false);
    }
    return Group::from_elements(std::move(els), "pyritohedral (pair set)");
}

Group b3_pair_set() {
    const FieldScalar r = FieldScalar::inv_sqrt2();
    const Quaternion w4(r, r, FieldScalar(0), FieldScalar(0));  // unit (1+e1)/sqrt2
    std::vector<GroupElement> els;
    for (const auto& t : t_set()) {
        els.emplace_back(t, w4.conjugate() * t.conjugate() * w4, false);
        els.emplace_back(t, w4 * t.conjugate() * w4, true);
    }
    for (const auto& t : tprime_set()) {
        els.emplace_back(t, w4.conjugate() * t.conjugate() * w4, false);
        els.emplace_back(t, w4 * t.conjugate() * w4, true);
    }
    return Group::from_elements(std::move(els), "W_B3 (pair set)");
}

Group h4_pair_set() {
    auto icosians = quaternion_set("I");
    std::vector<GroupElement> els;
    els.reserve(2 * 120 * 120);
    for (const auto& p : icosians)
        for (const auto& q : icosians) {
            els.emplace_back(p, q, false);
            els.emplace_back(p, q, true);
        }
    return Group::from_elements(std::move(els), "W_H4 (pair set)");
}

const std::vector<std::string>& group_names() {
    static const std::vector<std::string> names = {"W_A3",   "rot_A3",     "pyritohedral",
                                                   "W_D4",   "rot_D4",     "snub_group",
                                                   "W_B3",   "W_F4",       "W_H4"};
    return names;
}

const std::vector<std::string>& construction_names() {
    static const std::vector<std::string> names = {
        "24cell", "24cell-prime", "snub24", "snub24-mirror", "600cell",
        "f4-union", "icosa-a3", "icosa-a3-mirror", "trunc-oct-b3"};
    return names;
}

Construction construction(const std::string& name) {
    Construction c;
    c.name = name;
    if (name == "24cell") {
        c.points = quaternion_set("T");
        c.summary = "binary tetrahedral group T = V0 u V+ u V-, the 24-cell vertices";
    } else if (name == "24cell-prime") {
        c.points = quaternion_set("Tprime");
        c.summary = "T' = V1 u V2 u V3, the rotated 24-cell";
    } else if (name == "snub24") {
        c.points = orbit(group("snub_group"), snub_seed());
        c.group_name = "snub_group";
        c.seed_dynkin = "(tau, 1, tau, tau) * sigma^2/2";
        c.summary = "snub 24-cell S, orbit of (tau + e1 + sigma e3)/2";
    } else if (name == "snub24-mirror") {
        c.points = orbit(group("snub_group"), snub_seed_mirror());
        c.group_name = "snub_group";
        c.seed_dynkin = "(sigma, 1, sigma, sigma) * tau^2/2";
        c.summary = "mirror snub 24-cell S~ (tau <-> sigma)";
    } else if (name == "600cell") {
        c.points = quaternion_set("I");
        c.summary = "600-cell vertices, icosians I = T u S";
    } else if (name == "f4-union") {
        c.points = orbit(group("W_F4"), snub_seed_mirror());
        c.group_name = "W_F4";
        c.seed_dynkin = "(0, 0, tau, 1) * sigma^2/2";
        c.summary = "S u S~, W(F4) orbit; 24 cubes + 24 truncated octahedra";
    } else if (name == "icosa-a3") {
        c.points = orbit(group("rot_A3"), Quaternion(0, 0, 1, FieldScalar::tau()));
        c.group_name = "rot_A3";
        c.seed_dynkin = "-sigma * (tau, 1, tau)";
        c.summary = "icosahedron, rot_A3 orbit of e2 + tau e3";
    } else if (name == "icosa-a3-mirror") {
        c.points = orbit(group("rot_A3"), Quaternion(0, 0, FieldScalar::tau(), -FieldScalar(1)));
        c.group_name = "rot_A3";
        c.seed_dynkin = "-tau^2 * (sigma, 1, sigma)";
        c.summary = "mirror icosahedron, rot_A3 orbit of tau e2 - e3";
    } else if (name == "trunc-oct-b3") {
        const auto& rs = b3_3d();
        Quaternion seed = rs.weights[0] + rs.weights[1] * FieldScalar::tau();
        c.points = orbit(octahedral_3d(), seed);
        c.group_name = "W_B3_3d";
        c.seed_dynkin = "(1, tau, 0)";
        c.summary = "quasi-regular truncated octahedron, W(B3) orbit of (1, tau, 0)";
    } else {
        throw std::invalid_argument("construction: unknown name '" + name + "'");
    }
    return c;
}

}  // namespace qp::named
