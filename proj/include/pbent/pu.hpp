#pragma once

// The (P_U) property: g(x + sum_i w_i u_i) = g(x) + sum_i w_i g_i(x) for all x
// and all w in Z_p^t. The only possible witnesses are g_i = D_{u_i} g, and the
// property holds iff every second derivative D_{u_i} D_{u_j} g vanishes.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pbent/pfunc.hpp"
#include "pbent/spectral.hpp"

namespace pbent {

struct PUWitness {
  std::vector<Index> U;
  std::vector<PFunc> witnesses;  // g_i = D_{u_i} g
};

/// U as a list of domain points; true iff it is F_p-linearly independent.
bool independent(const Space& domain, std::span<const Index> U);

/// True iff g(x + u + v) - g(x + u) - g(x + v) + g(x) = 0 everywhere.
bool second_derivative_vanishes(const PFunc& g, Index u, Index v);

/// Verifies the defining identity over all x and all w in Z_p^t.
/// Throws DependentU if U is not linearly independent.
std::optional<PUWitness> check_pu_definition(const PFunc& g, std::span<const Index> U);

/// D_{u_i} D_{u_j} g = 0 for all i <= j. Throws DependentU.
bool check_pu_derivatives(const PFunc& g, std::span<const Index> U);

struct LambdaPU {
  Index lambda = 0;
  std::optional<PUWitness> witness;  // present iff the dual of this component satisfies (P_U)
};

struct DualsPUResult {
  bool satisfied = false;
  std::vector<LambdaPU> per_lambda;
};

/// Checks (P_U) on the dual of every component of G.
/// Throws NotWeaklyRegular if a component has no dual, DependentU for bad U.
DualsPUResult duals_satisfy_pu(const VPFunc& G, std::span<const Index> U);
/// Same, reusing a classification that kept its duals.
DualsPUResult duals_satisfy_pu(const VectorialReport& report, std::span<const Index> U);

/// Admissible t-subsets U (independent, all second derivatives of every
/// function in `duals` vanish), in canonical-index lexicographic order, at most
/// `limit` of them. TooLarge for t >= 2 over more than 3^6 points.
std::vector<std::vector<Index>> search_u_sets(const std::vector<PFunc>& duals, int t, std::size_t limit);
/// Classifies G first; NotWeaklyRegular if some component has no dual.
std::vector<std::vector<Index>> search_u_sets(const VPFunc& G, int t, std::size_t limit);

inline constexpr std::uint64_t kPairSearchLimit = 729;  // 3^6

}  // namespace pbent
