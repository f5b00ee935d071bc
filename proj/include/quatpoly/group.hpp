#pragma once

#include <string>
#include <vector>

#include "quatpoly/group_element.hpp"
#include "quatpoly/point_set.hpp"

namespace qp {

/// Finite group of quaternion-pair transformations. Elements are stored
/// deduplicated in canonical (lexicographic) order; consumers may share a
/// Group freely across threads, it is immutable after construction.
class Group {
public:
    Group() = default;

    /// Breadth-first closure of the generators under composition.
    /// Deterministic element ordering. Throws std::runtime_error with a
    /// diagnostic if the closure exceeds order_cap (guards against
    /// sign-canonicalization bugs).
    static Group generate(std::vector<GroupElement> generators, int order_cap,
                          std::string name = {});

    /// Group from an explicit element set (deduplicated, identity required).
    static Group from_elements(std::vector<GroupElement> elements, std::string name = {});

    int order() const { return static_cast<int>(elements_.size()); }
    const std::vector<GroupElement>& elements() const { return elements_; }
    const std::vector<GroupElement>& generators() const { return generators_; }
    const std::string& name() const { return name_; }
    bool contains(const GroupElement& g) const;
    bool operator==(const Group& o) const { return elements_ == o.elements_; }

    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }

private:
    std::vector<GroupElement> elements_;
    std::vector<GroupElement> generators_;
    std::string name_;
};

/// Deduplicated orbit { g(seed) : g in group }. |orbit| divides |group|.
PointSet orbit(const Group& group, const Quaternion& seed);

/// Subgroup fixing a single point (pointwise).
Group stabilizer(const Group& group, const Quaternion& target);

/// Subgroup mapping a point set to itself (setwise).
Group stabilizer(const Group& group, const PointSet& target);

/// True iff `reflection` maps set_a bijectively onto set_b.
bool mirror_check(const PointSet& set_a, const PointSet& set_b, const GroupElement& reflection);

/// Image { g(p) : p in pts } as a PointSet.
PointSet apply_to_set(const GroupElement& g, const PointSet& pts);

}  // namespace qp
