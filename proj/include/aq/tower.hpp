#pragma once

#include "aq/bar.hpp"

#include <functional>

namespace aq {

// true iff some depth-`cut` subtree of m has a top multiset of size >= 2
bool decomposable_at_cut(const Monomial& m, int cut);

// Modified Adams tower level r inside b^r X: monomials that are decomposable
// at every cut i(n+1), i = 1..r.  Returned as indices into brX.basis(n, w).
std::vector<int> tower_basis_indices(const BarObject& brX, int n, int w);
Subspace tower_span(const BarObject& brX, int n, int w);

// the diagonal map b^{r-i} eta b^i on the (n, w) block, 1 <= i <= r
LinearMap eta_cut_block(const BarObject& brX, int i, int n, int w);
// intersection of the kernels of all r eta-cut maps (full space for r = 0
// by the empty-intersection convention; brX supplies r)
Subspace tower_kernel_oracle(const BarObject& brX, int n, int w);

// Simplicial sub-vector-space of b^r X spanned by the monomials passing
// `keep`; throws LinAlgError if a structure map escapes the sub-basis.
BlockSpace monomial_subspace(const BarObject& brX,
                             const std::function<bool(const Monomial&, int)>& keep);
BlockSpace tower_space(const BarObject& brX);

// D-tilde_t P^s(A) realized inside b^t A: root multiset of size >= s plus the
// decomposability cuts at i(n+1) for i = 1..t-1.  t = btA.iterations().
BlockSpace derived_power_space(const BarObject& btA, int s);
// Surjectivity of each recursion stage onto its realized codomain; throws on
// failure.
void assert_derived_power_surjections(const BarObject& btA, int s);

// delta variant i: layer part of b^i eps b^{r-1-i} at level n (0 <= i < r).
OpWord delta_word(int r, int i, int n);
// the canonical tower map is variant i = r-1 (innermost counits)
AlgebraElement apply_delta(const BarObject& brX, int i, int n, const AlgebraElement& x);
// block of delta_i as a map b^r X -> b^{r-1} X at (n, w)
LinearMap delta_block(const BarObject& brX, const BarObject& br1X, int i, int n, int w);

// span of s-fold products inside the (n, w) block of X
Subspace power_span(const SimplicialAlgebra& X, int s, int n, int w);

// delta^r (D-tilde_r X) lands in P^{r+1} X, blockwise, for r = 1..r_max
ValidationReport check_delta_powers(const SimplicialAlgebra& X, int r_max);

struct ConnectivityRow {
  int q, w, dim;
  bool falsified;  // q <= s - t with dim > 0
};
std::vector<ConnectivityRow> connectivity_report(const SimplicialAlgebra& A, int t,
                                                 int s, int q_max);

struct ConvergenceVerdict {
  int t = 0, q = 0;
  struct Block {
    int w, src_dim, tgt_dim;
    bool zero;
  };
  std::vector<Block> blocks;
  bool all_zero() const;
  bool vacuous() const;  // every source dimension is zero
};
// induced map pi_q(D-tilde_{2t+q-1} X) -> pi_q(D-tilde_t X)
ConvergenceVerdict convergence_check(const SimplicialAlgebra& X, int t, int q);

// all delta variants D-tilde_n X -> D-tilde_{n-1} X induce one map on pi_q
// (q <= q_max), and the appendix homotopy between variants 0 and 1 restricts
// to the tower sub-objects
ValidationReport twisting_check(const SimplicialAlgebra& X, int n, int q_max);

// Composition of the recursion: iterating the tower construction over the
// bar algebra b^s X and imposing the s inner cuts reproduces the flat level
// s+t; the tower of the tower subalgebra embeds.  Compared by flattening
// labels.
ValidationReport tower_composition_check(const SimplicialAlgebra& X, int s, int t);

// reversible encoding of monomial renders as generator symbols
std::string encode_label(const std::string& render);
std::string decode_label(const std::string& label);

// D-tilde_t X presented as a simplicial algebra (generators = encoded
// monomial renders), suitable for iterating the constructions
SimplicialAlgebra tower_algebra(const BarObject& btX);

// b^s X itself presented as a simplicial algebra (all monomials, free
// top-layer multiplication)
SimplicialAlgebra bar_algebra(const BarObject& bsX);

}  // namespace aq
