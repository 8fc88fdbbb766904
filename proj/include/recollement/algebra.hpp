#pragma once

#include "recollement/fp.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace recoll {

/// Element of an algebra, as a coordinate row over the basis.
using Element = std::vector<uint32_t>;

struct QuiverArrow {
    std::string label;
    std::string source;
    std::string target;
};

struct RelationTerm {
    uint32_t coeff = 1;
    std::vector<std::string> arrows; // composed left to right
};

using Relation = std::vector<RelationTerm>;

/// Presentation of a bound path algebra. Relations must be homogeneous in
/// path length; the nilpotency cap certifies finite-dimensionality.
struct QuiverPresentation {
    std::vector<std::string> vertices;
    std::vector<QuiverArrow> arrows;
    std::vector<Relation> relations;
    std::size_t nilpotency_cap = 8;
};

/// Provenance kept when an algebra was built from a quiver: which basis
/// elements are trivial paths, and the length of each basis path. The
/// radical and the vertex-subset idempotent tier rely on it.
struct QuiverInfo {
    std::vector<std::string> vertices;
    std::vector<QuiverArrow> arrows;
    std::vector<std::size_t> vertex_basis_index;
    std::vector<std::size_t> path_length;
};

/// Finite-dimensional associative unital algebra over F_p, given by structure
/// constants c_{ijk} (b_i * b_j = sum_k c_{ijk} b_k) with a named basis.
/// Immutable after validated construction. dim 0 is a legal value.
class Algebra {
public:
    /// Validates: p prime <= 97, consistent table, associativity on all basis
    /// triples, two-sided unit law.
    static Algebra from_table(uint32_t p, std::vector<std::string> labels,
                              std::vector<uint32_t> table, Element unit);

    static Algebra zero_algebra(uint32_t p);

    uint32_t p() const { return p_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const Element& unit() const { return unit_; }
    const std::optional<QuiverInfo>& quiver() const { return quiver_; }

    /// c_{ijk}
    uint32_t c(std::size_t i, std::size_t j, std::size_t k) const {
        return table_[(i * dim_ + j) * dim_ + k];
    }

    /// Coordinates of b_i * b_j.
    std::vector<uint32_t> basis_product(std::size_t i, std::size_t j) const;
    Element mul(const Element& x, const Element& y) const;
    Element add(const Element& x, const Element& y) const;
    Element sub(const Element& x, const Element& y) const;
    Element scale(uint32_t c, const Element& x) const;
    Element zero_element() const { return Element(dim_, 0); }
    Element basis_element(std::size_t i) const;
    bool is_idempotent(const Element& e) const;
    bool is_zero(const Element& e) const;

    /// Matrix of right multiplication by b_i on the algebra itself: row j
    /// holds the coordinates of b_j * b_i. These are the action matrices of
    /// the right regular module.
    FpMat right_mult_matrix(std::size_t i) const;
    FpMat right_mult_by(const Element& x) const;
    /// Matrix of left multiplication by x: row j = x * b_j.
    FpMat left_mult_by(const Element& x) const;

    std::optional<std::size_t> label_index(const std::string& label) const;
    std::string element_str(const Element& x) const;

    /// Structural equality (labels ignored); used for category membership.
    bool same_structure(const Algebra& o) const {
        return p_ == o.p_ && dim_ == o.dim_ && table_ == o.table_ && unit_ == o.unit_;
    }

    void attach_quiver(QuiverInfo q) { quiver_ = std::move(q); }

private:
    Algebra() = default;
    uint32_t p_ = 2;
    std::size_t dim_ = 0;
    std::vector<std::string> labels_;
    std::vector<uint32_t> table_;
    Element unit_;
    std::optional<QuiverInfo> quiver_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Two-sided ideal, stored as an echelonized row basis of a subspace closed
/// under multiplication by every basis element on both sides.
struct Ideal {
    AlgebraPtr algebra;
    FpMat rows;

    std::size_t dim() const { return rows.rows(); }
    bool operator==(const Ideal& o) const { return rows == o.rows; }
};

/// Path algebra of the quiver modulo its relations, with basis the surviving
/// paths of length <= nilpotency_cap. Trivial paths are labelled by their
/// vertex, composite paths by the arrow labels joined with '*'.
Algebra path_algebra(const QuiverPresentation& q, uint32_t p);

/// Jacobson radical. Tiers: quiver input (arrow ideal), p > dim (trace-form
/// kernel), small p^dim (sum of principal nilpotent ideals); otherwise
/// CharacteristicTooSmall.
Ideal radical(const AlgebraPtr& a);

struct SemiprimaryWitness {
    bool semiprimary = true;
    std::size_t nilpotency_index = 1; // least k with J^k = 0
    std::size_t radical_dim = 0;
    bool quotient_semisimple = true;
};

SemiprimaryWitness is_semiprimary(const AlgebraPtr& a);

/// All e with e*e = e, enumerated exhaustively over p^dim elements.
std::vector<Element> enumerate_idempotents(const Algebra& a,
                                           unsigned long long budget = 1ull << 16);

/// The 2^(#vertices) sums of trivial paths (quiver input only).
std::vector<Element> vertex_idempotents(const Algebra& a);

struct CornerAlgebra {
    AlgebraPtr algebra;  // eAe with unit e
    FpMat embedding;     // corner basis rows in ambient coordinates
    Element idempotent;  // e in ambient coordinates
};

/// Peirce corner eAe. Degenerates to the zero algebra when e = 0.
CornerAlgebra peirce_corner(const AlgebraPtr& a, const Element& e);

struct QuotientAlgebra {
    AlgebraPtr algebra;             // A/I
    FpMat projection;               // dim(A) x dim(A/I): b_j -> coordinates of its coset
    std::vector<std::size_t> reps;  // ambient columns whose cosets form the basis
};

QuotientAlgebra quotient_algebra(const AlgebraPtr& a, const Ideal& i);

} // namespace recoll
