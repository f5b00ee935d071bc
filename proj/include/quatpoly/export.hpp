#pragma once

#include <string>
#include <vector>

#include "quatpoly/polytope.hpp"
#include "quatpoly/solid3.hpp"

namespace qp {

/// Locale-independent float with 12 significant digits.
std::string format_double(double v);

/// Exact coefficient quadruple ["a","b","c","d"] of rational strings.
std::vector<std::string> field_to_strings(const FieldScalar& x);
FieldScalar field_from_strings(const std::vector<std::string>& s);

/// 4D construction export: vertices carry exact rational-string quadruples
/// (lossless round trip) and 12-digit float approximations; edges and facets
/// are index lists. Byte-identical output for identical inputs.
std::string to_json(const std::string& name, const std::string& group_name,
                    const std::string& seed_dynkin, const PointSet& pts,
                    const EdgeGraph* edges, const FacetList* cells);

/// Parse the `exact` vertex records back into a PointSet.
PointSet points_from_json(const std::string& json_text);

/// One vertex per row, float columns (12 significant digits).
std::string to_csv(const PointSet& pts);

/// OFF mesh for a 3D solid: "OFF\nV F E", float vertices, faces with
/// canonical outward orientation.
std::string to_off(const Solid3& solid);

/// Face-census JSON for one solid (counts by polygon class with exact edge
/// lengths), used by the projection subcommand.
std::string census_json(const Solid3& solid);

}  // namespace qp
