#pragma once

#include "recollement/ideal.hpp"
#include "recollement/module.hpp"
#include "recollement/report.hpp"

#include <vector>

namespace recoll {

/// TTF-triple (X, Y, Z) attached to an idempotent ideal I:
///   X = {M : M*I = M},  Y = {M : M*I = 0},  Z = {M : M[I] = 0}.
/// (X, Y) and (Y, Z) are torsion pairs; membership is decided by the
/// ideal-derived predicates, never by closure-class search.
struct TTFTriple {
    Ideal ideal;

    bool in_x(const Module& m) const;
    bool in_y(const Module& m) const;
    bool in_z(const Module& m) const;
};

/// Requires I idempotent (Jans direction: idempotent ideals give TTF-triples).
TTFTriple ttf_from_ideal(const AlgebraPtr& a, const Ideal& i);

/// Inverse direction: the torsion part of the regular module under (X, Y),
/// read back as a two-sided ideal. Round-trips with ttf_from_ideal exactly.
Ideal ideal_from_ttf(const TTFTriple& t);

struct TorsionDecomposition {
    Module module;
    SubmoduleBasis torsion_rows;
    Module torsion_sub;
    ModuleMap inclusion;
    Module quotient;
    ModuleMap projection;
};

enum class TorsionPairSide { Lower, Upper }; // Lower = (X, Y), Upper = (Y, Z)

TorsionDecomposition torsion_decompose(const Module& m, const Ideal& i,
                                       TorsionPairSide side);

/// Decompositions, class membership of both ends of each sequence, and all
/// pairwise Hom vanishings over the catalog.
CheckList verify_torsion_pair(const Ideal& i, TorsionPairSide side,
                              const std::vector<Module>& catalog);

/// Y closed under submodules, quotients, finite direct sums, and the
/// extensions realizable within the catalog bound.
CheckList verify_ttf_closure(const TTFTriple& t, const std::vector<Module>& catalog,
                             unsigned long long budget = 1ull << 14);

/// Functor laws of the triple. F = (-)[I] is a left exact radical functor
/// preserving finite products; the coradical companion, the reflection
/// G = (-) tensor A/I = M/MI, is right exact and preserves finite
/// coproducts. The trace functor (-)*I is checked for its own true
/// properties (idempotence on images, surjection preservation, additivity);
/// it is not right exact, so no such record is emitted for it.
CheckList verify_radical_functor(const Ideal& i, const std::vector<Module>& catalog,
                                 unsigned long long budget = 1ull << 14);

/// Independent oracle for the bijection with idempotent ideals: enumerate
/// subsets of the iso-class catalog that are simultaneously torsion and
/// torsion-free classes (closed under sub, quotient, finite sum, extension,
/// and admitting both decompositions for every catalog module).
struct TTFEnumeration {
    std::vector<Module> catalog;
    /// Each entry: sorted catalog indices of the nonzero members of Y.
    std::vector<std::vector<std::size_t>> ttf_classes;
    std::size_t count() const { return ttf_classes.size(); }
};

TTFEnumeration brute_force_ttf_triples(const AlgebraPtr& a, std::size_t dim_bound,
                                       unsigned long long budget = 1ull << 14);

} // namespace recoll
