#pragma once

#include <vector>

#include "qalg/coact.hpp"

namespace qalg {

/**
 * Basis of the degree-d coinvariants of one of the coactions lambda, rho,
 * alpha, beta, computed as the exact kernel of the linearized coinvariance
 * condition on the graded component A_d. For alpha and beta the gl and sl
 * coinvariant spaces coincide degreewise (the group legs have Z-degree
 * zero, where the quotient map is injective), so the same basis serves
 * both targets; for lambda and rho the target changes the answer.
 */
struct CoinvBasis {
  int degree = 0;
  CoKind kind = CoKind::alpha;
  Target target = Target::sl;
  std::vector<AlgElem> basis;
};

/// dims[d] = dim of the degree-d coinvariant space; dims[0] = 1.
using HilbertPrefix = std::vector<int>;

CoinvBasis coinvariant_basis(CoKind kind, Target target, int n, int degree);

HilbertPrefix hilbert_prefix(CoKind kind, Target target, int n,
                             int max_degree);

/// Minimal homogeneous generating set of the coinvariant algebra truncated
/// at max_degree: at each degree the new generators are reduced-echelon
/// representatives of the complement of the span of products of
/// lower-degree generators.
std::vector<AlgElem> generators_up_to(CoKind kind, Target target, int n,
                                      int max_degree);

/// True iff products of gens span the coinvariants in every degree up to
/// max_degree with the free-commutative-polynomial dimension count, which
/// certifies algebraic independence up to that degree. Throws
/// not_coinvariant when a generator fails the predicate.
bool spanning_check(CoKind kind, Target target, int n,
                    const std::vector<AlgElem>& gens, int max_degree);

/// Basis of the relative invariants {v in A_d : gamma(v) = v (x)
/// det_q^weight} with the coaction gamma taken at the gl target (the
/// det_q^weight leg sits left for lambda). The coinvariant space of the
/// sl-target coaction decomposes as the direct sum of these over the
/// weights.
std::vector<AlgElem> relative_invariant_basis(CoKind kind, int n, int degree,
                                              int weight);

}  // namespace qalg
