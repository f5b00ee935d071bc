#pragma once

#include <string>
#include <vector>

#include "quatpoly/group.hpp"
#include "quatpoly/point_set.hpp"
#include "quatpoly/root_system.hpp"

namespace qp::named {

/// Quaternion sets: V0, Vplus, Vminus, V1, V2, V3, T, Tprime, S, Stilde, I, Itilde.
/// T is the binary tetrahedral group / 24-cell vertices; S the snub 24-cell;
/// I = T u S the icosians / 600-cell. Throws on unknown name.
PointSet quaternion_set(const std::string& name);

/// Simple-root data. d4: e2-e3, e1+e3, -e2-e3, 1-e1.  a3: e1+e2, -e2+e3,
/// -e1+e2 (reconstructed from the A3 Cartan matrix and dual basis).
/// f4: (1-e1-e2-e3)/sqrt2, sqrt2 e3, e2-e3, e1-e2.  b3_3d: e1-e2, e2-e3, e3
/// (octahedral group acting on the imaginary subspace).
const RootSystemData& d4();
const RootSystemData& a3();
const RootSystemData& f4();
const RootSystemData& b3_3d();

/// Named group, memoized. Names: W_A3, rot_A3, pyritohedral, W_D4, rot_D4,
/// snub_group, W_B3, W_F4, W_H4. Throws on unknown name.
const Group& group(const std::string& name);

/// The real-part-preserving pyritohedral form {[T,Tbar] u [T,Tbar]*} used for
/// the 4D orbit decomposition (the named `pyritohedral` group is [T,+-Tbar]).
const Group& pyritohedral_4d();

/// The 3D octahedral reflection group from b3_3d(), order 48, acting on pure
/// imaginary quaternions (fixes the real axis).
const Group& octahedral_3d();

/// Lambda'_I = (tau + e1 + sigma e3)/2, the snub 24-cell seed; the mirror
/// seed Lambda'_II = (sigma + e1 + tau e3)/2.
Quaternion snub_seed();
Quaternion snub_seed_mirror();

/// Direct product-set constructions used as structural cross-checks against
/// the generated groups (exact set equality).
Group d4_pair_set();            // [V0,V0]+[V+,V-]+[V-,V+]+[V1,V1]*+[V2,V2]*+[V3,V3]*
Group rot_d4_pair_set();        // [V0,V0]+[V+,V-]+[V-,V+]
Group snub_pair_set();          // [T,T]+[T,T]*
Group f4_pair_set();            // [T,T]+[T,T]*+[T',T']+[T',T']*
Group a3_pair_set();            // [T,Tbar]+[T',T'bar]*
Group rot_a3_pair_set();        // [T,Tbar]
Group pyritohedral_pair_set();  // [T,+-Tbar]
Group b3_pair_set();            // [T,w4bar Tbar w4]+[T,w4 Tbar w4]* + same with T', w4 = (1+e1)/sqrt2
Group h4_pair_set();            // [I,I]+[I,I]*

/// Point-set constructions by CLI name: 24cell, 24cell-prime, snub24,
/// snub24-mirror, 600cell, f4-union, icosa-a3, icosa-a3-mirror, trunc-oct-b3.
/// Built as group orbits where the construction is one.
struct Construction {
    std::string name;
    PointSet points;
    std::string group_name;      // acting group, when orbit-built
    std::string seed_dynkin;     // seed in the Dynkin basis, when applicable
    std::string summary;
};
Construction construction(const std::string& name);

const std::vector<std::string>& group_names();
const std::vector<std::string>& construction_names();

}  // namespace qp::named
