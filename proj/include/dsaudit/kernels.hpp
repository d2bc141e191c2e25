#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dsaudit/evidence.hpp"
#include "dsaudit/rational.hpp"

// Dense power-set kernels. Every table is indexed by subset mask and has
// 2^frame.size() entries. The *_reference variants are straightforward
// serial loops kept as the ground truth for tests and benchmarks; the
// *_parallel variants are subset-sum transforms parallelised with OpenMP.
namespace dsaudit::kernels {

/// Below this many entries the parallel kernels run single-threaded.
inline constexpr std::size_t kParallelThreshold = 1024;

/// Dense mass table m[mask] (zero for non-focal subsets).
std::vector<Rational> dense_mass(const BodyOfEvidence& body);

/// bel[S] = sum of m[A] over focal A ⊆ S, one subset at a time.
std::vector<Rational> belief_reference(const BodyOfEvidence& body);
/// Same table via the subset-sum (zeta) transform.
std::vector<Rational> belief_parallel(const BodyOfEvidence& body);

/// m[S] = sum over T ⊆ S of (-1)^{|S-T|} bel[T], enumerating the submasks
/// of every S term by term. O(3^n).
std::vector<Rational> mobius_reference(std::span<const Rational> belief);
/// Same inversion via the fast Möbius transform. O(n 2^n).
std::vector<Rational> mobius_parallel(std::span<const Rational> belief);

/// pl[S] = 1 - bel[Ω - S].
std::vector<Rational> plausibility_from_belief(std::span<const Rational> belief);

}  // namespace dsaudit::kernels
