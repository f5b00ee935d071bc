#include "quatpoly/group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace qp {

Group Group::generate(std::vector<GroupElement> generators, int order_cap, std::string name) {
    if (generators.empty()) throw std::invalid_argument("Group::generate: no generators");
    std::set<GroupElement> seen;
    seen.insert(GroupElement::identity());
    std::deque<GroupElement> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        GroupElement f = frontier.front();
        frontier.pop_front();
        for (const auto& g : generators) {
            GroupElement e = g * f;
            if (seen.insert(e).second) {
                if (static_cast<int>(seen.size()) > order_cap)
                    throw std::runtime_error(
                        "Group::generate('" + name + "'): closure exceeded order cap " +
                        std::to_string(order_cap) + "; sign canonicalization or generator bug?");
                frontier.push_back(e);
            }
        }
    }
    Group out;
    out.elements_.assign(seen.begin(), seen.end());
    out.generators_ = std::move(generators);
    out.name_ = std::move(name);
    return out;
}

Group Group::from_elements(std::vector<GroupElement> elements, std::string name) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    Group out;
    out.elements_ = std::move(elements);
    out.name_ = std::move(name);
    if (!out.contains(GroupElement::identity()))
        throw std::invalid_argument("Group::from_elements: identity missing");
    return out;
}

bool Group::contains(const GroupElement& g) const {
    return std::binary_search(elements_.begin(), elements_.end(), g);
}

PointSet orbit(const Group& group, const Quaternion& seed) {
    std::vector<Quaternion> pts;
    pts.reserve(group.order());
    for (const auto& g : group) pts.push_back(g.apply(seed));
    return PointSet(std::move(pts));
}

Group stabilizer(const Group& group, const Quaternion& target) {
    std::vector<GroupElement> fix;
    for (const auto& g : group)
        if (g.apply(target) == target) fix.push_back(g);
    return Group::from_elements(std::move(fix), group.name() + "/stab");
}

Group stabilizer(const Group& group, const PointSet& target) {
    std::vector<GroupElement> fix;
    for (const auto& g : group) {
        bool ok = true;
        for (const auto& p : target)
            if (!target.contains(g.apply(p))) { ok = false; break; }
        if (ok) fix.push_back(g);
    }
    return Group::from_elements(std::move(fix), group.name() + "/setstab");
}

bool mirror_check(const PointSet& set_a, const PointSet& set_b, const GroupElement& reflection) {
    if (set_a.size() != set_b.size()) return false;
    for (const auto& p : set_a)
        if (!set_b.contains(reflection.apply(p))) return false;
    return true;
}

PointSet apply_to_set(const GroupElement& g, const PointSet& pts) {
    std::vector<Quaternion> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(g.apply(p));
    return PointSet(std::move(out));
}

}  // namespace qp
