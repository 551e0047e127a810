#pragma once

#include "aq/simplicial.hpp"

namespace aq {

// Standard Eilenberg-MacLane-style model K(k, n) with zero multiplication:
// level m basis = monotone surjections [m] -> [n], labeled by their value
// strings (prefix + digits).  All generators carry `gen_weight`.
SimplicialAlgebra make_K(const Field& F, int n, int max_degree, int max_weight,
                         int gen_weight = 1, const std::string& prefix = "e");

// Free commutative non-unital algebra on K(k,1) (one generator in degree 1,
// weight 1), truncated at the given bounds.  Level-m basis: nonempty
// multisets of K(k,1)_m generators with weight sum <= W, labels joined by '.'.
SimplicialAlgebra make_free_one(const Field& F, int max_degree, int max_weight);

// Free commutative algebra on two degree-1 generators x (weight 1) and
// y (weight 2), same construction.
SimplicialAlgebra make_free_two(const Field& F, int max_degree, int max_weight);

// K(k,2) with a single face-map entry redirected: d_1 of the first level-2
// generator picks up a spurious term.  Violates d_i d_j = d_{j-1} d_i.
SimplicialAlgebra make_mutated_K2(const Field& F, int max_degree, int max_weight);

// Direct sum; labels prefixed "A_" / "B_" to stay distinct.
SimplicialAlgebra direct_sum(const SimplicialAlgebra& A, const SimplicialAlgebra& B);

}  // namespace aq
