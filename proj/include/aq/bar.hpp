#pragma once

#include "aq/opword.hpp"
#include "aq/simplicial.hpp"

#include <map>
#include <optional>

namespace aq {

struct ResourceError : std::runtime_error {
  ResourceError(const std::string& msg, long requested)
      : std::runtime_error(msg), requested(requested) {}
  long requested;
};

// Iterated bar construction b^r X, realized lazily per (level, weight) block.
// Level n consists of depth-r(n+1) iterated monomials over the X_n basis;
// the weight grading keeps every block finite.
class BarObject {
 public:
  BarObject(const SimplicialAlgebra& X, int r, long basis_cap = 200000);

  const SimplicialAlgebra& source() const { return *X_; }
  const Field& field() const { return X_->field(); }
  int iterations() const { return r_; }
  int max_degree() const { return X_->max_degree(); }
  int max_weight() const { return X_->max_weight(); }
  int depth_at(int n) const { return r_ * (n + 1); }

  const std::vector<Monomial>& basis(int n, int w) const;
  const BlockSpace& blocks() const;

  // layer parts of the fused structure maps (leaf maps excluded)
  OpWord face_word(int i, int n) const;
  OpWord degen_word(int i, int n) const;

  AlgebraElement apply_face(int i, int n, const AlgebraElement& x) const;
  AlgebraElement apply_degen(int i, int n, const AlgebraElement& x) const;

  SparseVec coords(int n, int w, const AlgebraElement& x) const;
  AlgebraElement from_coords(int n, int w, const SparseVec& v) const;

  // monomial from its basis label at level n
  Monomial parse_label(int n, const std::string& label) const;

 private:
  const SimplicialAlgebra* X_;
  int r_;
  long cap_;
  mutable std::map<std::pair<int, int>, std::vector<Monomial>> bases_;
  mutable std::map<std::pair<int, int>, std::map<std::string, int>> index_;
  mutable std::optional<BlockSpace> space_;

  const std::map<std::string, int>& index(int n, int w) const;
};

// Layer words of the natural maps on b^r X at level q (r implied by use):
OpWord augmentation_word(int q);   // eps: bX_q -> X_q, counits at layers q..0
OpWord eps_outer_word(int q);      // eps_{bX} on (b^2 X)_q, layers 2q+1..q+1
OpWord eps_inner_word(int q);      // b(eps) on (b^2 X)_q, layers q..0
OpWord homotopy_word(int j, int q);  // counit part of h_{j,q}; empty at q = 0

// h_{j,q}: (b^2 X)_q -> (bX)_{q+1}: the counit word followed by s_j on leaves
AlgebraElement apply_homotopy(const BarObject& b2X, int j, int q,
                              const AlgebraElement& x);
LinearMap homotopy_block(const BarObject& b2X, const BarObject& bX, int j, int q,
                         int w);

// eps_{bX}, b(eps): (b^2 X) -> bX blockwise; augmentation bX -> X blockwise
BlockMap eps_outer_blocks(const BarObject& b2X, const BarObject& bX, int q_max,
                          int w_max);
BlockMap eps_inner_blocks(const BarObject& b2X, const BarObject& bX, int q_max,
                          int w_max);
BlockMap augmentation_blocks(const BarObject& bX, int q_max, int w_max);

// Full appendix verification: the five (b)-layer word identities by operator
// normal form, then the five identity families plus boundary conditions as
// exact LinearMap equalities via the generic homotopy checker.
ValidationReport verify_appendix(const SimplicialAlgebra& X, int q_max, int w_max);

// Same run with one counit index of h perturbed; used by negative tests.
ValidationReport verify_appendix_perturbed(const SimplicialAlgebra& X, int q_max,
                                           int w_max);

}  // namespace aq
