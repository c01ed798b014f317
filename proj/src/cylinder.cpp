#include "hotspot/cylinder.hpp"

#include <algorithm>
#include <stdexcept>

namespace hotspot {

Relation relate(const Cylinder& a, const Cylinder& b) {
    const std::size_t common = std::min(a.word.size(), b.word.size());
    for (std::size_t i = 0; i < common; ++i) {
        if (a.word[i] != b.word[i]) return Relation::disjoint;
    }
    if (a.word.size() == b.word.size()) return Relation::equal;
    return a.word.size() < b.word.size() ? Relation::a_contains_b : Relation::b_contains_a;
}

CylinderUnion CylinderUnion::canonicalize(std::vector<Cylinder> cylinders) {
    std::sort(cylinders.begin(), cylinders.end());
    CylinderUnion out;
    out.members_.reserve(cylinders.size());
    for (auto& c : cylinders) {
        // in lex order any containing member is the most recently kept one
        if (!out.members_.empty() && out.members_.back().word.is_prefix_of(c.word)) continue;
        out.members_.push_back(std::move(c));
    }
    return out;
}

std::size_t CylinderUnion::max_depth() const {
    std::size_t out = 0;
    for (const auto& c : members_) out = std::max(out, c.word.size());
    return out;
}

Digit CylinderUnion::max_digit() const {
    Digit out = 0;
    for (const auto& c : members_) out = std::max(out, c.word.max_digit());
    return out;
}

bool CylinderUnion::covers_prefix(const Word& point_prefix) const {
    for (const auto& c : members_) {
        if (c.word.is_prefix_of(point_prefix)) return true;
    }
    return false;
}

ComplementDecomposition complement_decomposition(const Word& xi, Digit cutoff) {
    if (cutoff < 1) throw std::invalid_argument("complement_decomposition: cutoff must be >= 1");
    ComplementDecomposition out;
    if (xi.empty()) return out;  // complement of X is empty, nothing dropped
    out.residual = true;         // each level's sibling family is countably infinite
    std::vector<Cylinder> members;
    for (std::size_t level = 0; level < xi.size(); ++level) {
        const Word prefix = xi.prefix(level);
        if (prefix.max_digit() > cutoff) break;  // all deeper members carry this digit too
        for (Digit b = 1; b <= cutoff; ++b) {
            if (b == xi[level]) continue;
            members.emplace_back(prefix.appended(b));
        }
    }
    out.members = CylinderUnion::canonicalize(std::move(members));
    return out;
}

}  // namespace hotspot
