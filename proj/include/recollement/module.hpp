#pragma once

#include "recollement/algebra.hpp"

#include <optional>
#include <vector>

namespace recoll {

/// Finite-dimensional right module over an Algebra. Elements are row vectors;
/// the action of basis element b_i is right multiplication by action(i), so
/// action(i) * action(j) = sum_k c_{ijk} action(k) and the unit acts as the
/// identity. Both laws are verified at construction.
class Module {
public:
    static Module make(AlgebraPtr a, std::vector<FpMat> action);
    static Module zero(AlgebraPtr a);
    /// Right regular representation; action(i) has row j = coords of b_j*b_i.
    static Module regular(AlgebraPtr a);

    const AlgebraPtr& algebra() const { return alg_; }
    std::size_t dim() const { return dim_; }
    const FpMat& action(std::size_t i) const { return action_[i]; }
    const std::vector<FpMat>& actions() const { return action_; }

    /// Matrix of the action of an arbitrary algebra element.
    FpMat act_element(const Element& x) const;

    /// Representation equality: same algebra structure, same matrices.
    bool operator==(const Module& o) const;
    bool operator!=(const Module& o) const { return !(*this == o); }

private:
    Module() = default;
    AlgebraPtr alg_;
    std::size_t dim_ = 0;
    std::vector<FpMat> action_;
};

/// Module homomorphism x |-> x * mat, mat: source.dim x target.dim, with
/// action(i) * mat = mat * action'(i) for every i.
struct ModuleMap {
    Module source;
    Module target;
    FpMat mat;

    static ModuleMap make(Module src, Module tgt, FpMat m);
    static ModuleMap zero(const Module& src, const Module& tgt);
    static ModuleMap id(const Module& m);
    ModuleMap then(const ModuleMap& g) const;
    bool is_zero() const { return mat.is_zero(); }
    bool is_injective() const;
    bool is_surjective() const;
    bool is_isomorphism() const;
};

/// Action-stable subspace of a module, rows in reduced echelon form.
struct SubmoduleBasis {
    Module ambient;
    FpMat rows;
    std::size_t dim() const { return rows.rows(); }
};

bool is_stable_subspace(const Module& m, const FpMat& rows);
SubmoduleBasis submodule_from_rows(const Module& m, const FpMat& rows);

/// Echelonized basis of the intertwiner space Hom_A(m, n).
std::vector<ModuleMap> hom_space(const Module& m, const Module& n);
std::size_t hom_dim(const Module& m, const Module& n);

SubmoduleBasis submodule_generated(const Module& m,
                                   const std::vector<std::vector<uint32_t>>& gens);

struct SubmoduleModule {
    Module module;
    ModuleMap inclusion;
};
SubmoduleModule submodule_module(const SubmoduleBasis& s);

struct QuotientModule {
    Module module;
    ModuleMap projection;
};
QuotientModule quotient_module(const Module& m, const SubmoduleBasis& s);

SubmoduleBasis kernel(const ModuleMap& f);
SubmoduleBasis image(const ModuleMap& f);
QuotientModule cokernel(const ModuleMap& f);

struct DirectSum {
    Module module;
    ModuleMap in1, in2, pr1, pr2;
};
DirectSum direct_sum(const Module& m, const Module& n);

/// B-A bimodule: commuting left B-action and right A-action on one space.
/// Encodings on row vectors: b.x = x * left_action(b) (so the left law is
/// anti-multiplicative) and x.a = x * right_action(a).
struct Bimodule {
    AlgebraPtr left_algebra;
    AlgebraPtr right_algebra;
    std::size_t dim = 0;
    std::vector<FpMat> left_action;
    std::vector<FpMat> right_action;

    static Bimodule make(AlgebraPtr left, AlgebraPtr right, std::size_t dim,
                         std::vector<FpMat> left_action,
                         std::vector<FpMat> right_action);
    Module as_right_module() const;
    FpMat left_act_element(const Element& x) const;
    FpMat right_act_element(const Element& x) const;
};

/// x tensor_B n for x a right B-module and n a B-A bimodule: the quotient of
/// the plain tensor space by (x.b (x) y - x (x) b.y), with the inherited right
/// A-action. `project` sends pure-tensor coordinates to module coordinates.
struct TensorResult {
    Module module;
    FpMat project;                  // (x.dim * n.dim) x module.dim
    std::vector<std::size_t> reps;  // pure-tensor indices carrying the basis
};
TensorResult tensor_over(const Module& x, const Bimodule& n);

/// Hom_B(n, x) for n an A-B bimodule and x a right B-module, with right
/// A-action (f.a)(v) = f(a.v). basis_maps hold the solution intertwiners.
struct HomResult {
    Module module;
    std::vector<FpMat> basis_maps;
};
HomResult hom_over(const Bimodule& n, const Module& x);

/// M*I: span of the images of M under right multiplication by the ideal.
SubmoduleBasis trace_ideal_part(const Module& m, const Ideal& i);

/// M[I] = {x : x*I = 0}, the largest submodule killed by the ideal.
SubmoduleBasis annihilated_part(const Module& m, const Ideal& i);

struct FreePresentation {
    Module free;        // A^(dim m)
    ModuleMap onto;     // surjection onto m
    SubmoduleBasis ker; // kernel, inside free
};
FreePresentation free_presentation(const Module& m);

/// dim Ext^1_A(m, n) from a free presentation 0 -> K -> A^(dim m) -> m -> 0.
std::size_t ext1(const Module& m, const Module& n);

/// Same dimension from the cocycle description of extensions of m by n;
/// an independent route kept for cross-checks.
std::size_t ext1_cocycle_dim(const Module& m, const Module& n);

/// All middle terms of extensions 0 -> s -> E -> q -> 0, one per cocycle
/// class representative (not deduplicated up to isomorphism).
std::vector<Module> extension_middles(const Module& q, const Module& s,
                                      unsigned long long budget = 1ull << 12);

std::optional<ModuleMap> find_isomorphism(const Module& m, const Module& n,
                                          unsigned long long budget = 1ull << 20);
bool modules_isomorphic(const Module& m, const Module& n);

/// Simple modules, one per isomorphism class, found as composition factors
/// of the regular module.
std::vector<Module> simple_modules(const AlgebraPtr& a,
                                   unsigned long long budget = 1ull << 16);

/// One representative per isomorphism class of modules of dimension <=
/// dim_bound, built by extending catalog members by simples and
/// deduplicating. Deterministic order: by dimension, then by action bytes.
std::vector<Module> module_catalog(const AlgebraPtr& a, std::size_t dim_bound,
                                   unsigned long long budget = 1ull << 16);

/// Every action-stable subspace (enumerates all subspaces, so only for small
/// p^dim).
std::vector<SubmoduleBasis> all_submodules(const Module& m,
                                           unsigned long long budget = 1ull << 16);

} // namespace recoll
