#pragma once

#include "recollement/algebra.hpp"
#include "recollement/report.hpp"

#include <vector>

namespace recoll {

class Module;

/// Smallest two-sided ideal containing the given elements (closure to a
/// fixpoint under both-sided basis multiplication).
Ideal ideal_generated(const AlgebraPtr& a, const std::vector<Element>& elements);

Ideal zero_ideal(const AlgebraPtr& a);
Ideal unit_ideal(const AlgebraPtr& a);

/// Reinterpret an echelonized subspace as an ideal, verifying closure.
Ideal ideal_from_subspace(const AlgebraPtr& a, const FpMat& rows);

bool is_ideal_subspace(const Algebra& a, const FpMat& rows);

/// Span of pairwise products of basis elements; already two-sided when both
/// inputs are ideals.
Ideal ideal_product(const Ideal& i, const Ideal& j);

bool is_idempotent_ideal(const Ideal& i);

/// Least k >= 1 with I^k = 0, or nullopt if the power chain stabilizes
/// at a nonzero ideal.
std::optional<std::size_t> nilpotency_index(const Ideal& i);

/// The ideal AeA.
Ideal idempotent_to_ideal(const AlgebraPtr& a, const Element& e);

enum class IdealEnumMode { Brute, Vertex };

/// Idempotent ideals of a. Brute mode scans every subspace (complete, budget
/// on the subspace count); vertex mode takes AeA over vertex-subset
/// idempotents (complete for basic semiprimary algebras).
std::vector<Ideal> enumerate_idempotent_ideals(const AlgebraPtr& a, IdealEnumMode mode,
                                               unsigned long long budget = 100000);

/// dim I/I^2 together with an independently computed dim Tor_1(A/I, A/I)
/// from a free presentation of A/I. Throws InternalInconsistency if the two
/// numbers disagree.
std::pair<std::size_t, std::size_t> tor1_self_quotient(const Ideal& i);

/// Catalog-relative bireflectivity of the modules killed by I: closure under
/// kernels, cokernels and finite direct sums, and the reflection property of
/// the unit M -> M/MI (it kills I, its kernel is M*I, it is surjective, and
/// precomposition with it is a bijection Hom(M/MI, N) -> Hom(M, N) for every
/// N killed by I).
CheckList check_bireflective_image(const Ideal& i, const std::vector<Module>& catalog);

} // namespace recoll
