#pragma once

#include <vector>

#include "hotspot/word.hpp"

namespace hotspot {

/// The cylinder set [ξ]: all digit sequences beginning with the word ξ.
/// [ε] is the whole space. Two cylinders are equal iff their words are.
struct Cylinder {
    Word word;

    Cylinder() = default;
    explicit Cylinder(Word w) : word(std::move(w)) {}

    bool operator==(const Cylinder&) const = default;
    std::strong_ordering operator<=>(const Cylinder&) const = default;
};

/// Cylinders form a laminar family: any two are nested or disjoint.
enum class Relation { equal, a_contains_b, b_contains_a, disjoint };

Relation relate(const Cylinder& a, const Cylinder& b);

/// Finite union of cylinders in canonical form: an antichain (no member's
/// word is a prefix of another's), sorted lexicographically. Members are
/// then pairwise disjoint.
class CylinderUnion {
public:
    CylinderUnion() = default;

    /// Drops duplicates and any cylinder contained in another member.
    static CylinderUnion canonicalize(std::vector<Cylinder> cylinders);

    const std::vector<Cylinder>& members() const { return members_; }
    bool empty() const { return members_.empty(); }
    std::size_t size() const { return members_.size(); }

    std::size_t max_depth() const;
    Digit max_digit() const;

    /// True iff the word, read as a point prefix, lies in some member
    /// cylinder (a member word is a prefix of it).
    bool covers_prefix(const Word& point_prefix) const;

    bool operator==(const CylinderUnion&) const = default;

private:
    std::vector<Cylinder> members_;
};

/// Members of the canonical countable decomposition of the complement
/// X \ [ξ] = U_j U_{b != ξ_{j+1}} [ξ_1..ξ_j, b], truncated to digits <= cutoff.
/// The union is countably infinite whenever ξ is nonempty, so `residual`
/// reports that members were dropped.
struct ComplementDecomposition {
    CylinderUnion members;
    bool residual = false;
};

ComplementDecomposition complement_decomposition(const Word& xi, Digit cutoff);

}  // namespace hotspot
