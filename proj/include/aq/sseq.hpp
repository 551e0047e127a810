#pragma once

#include "aq/tower.hpp"

namespace aq {

// P^p(bA)/P^{p+1}(bA): monomials whose top multiset has size exactly p, with
// structure maps followed by the projection killing deeper filtration terms.
BlockSpace power_quotient_space(const BarObject& bA, int p);

// P^s(bA) itself: top multiset size >= s.
BlockSpace power_space(const BarObject& bA, int s);

// Levelwise symmetric coinvariants (V_n^{tensor p})_{Sigma_p}: orbit basis of
// p-element multisets of block labels, diagonal structure maps, no signs.
BlockSpace sym_coinvariants(const BlockSpace& V, int p);

struct DoldPuppeVerdict {
  int p = 0;
  PiTable table;
  bool pass = false;  // pi_q = 0 for q <= p-1, all weights
};
DoldPuppeVerdict dold_puppe_check(const BlockSpace& V, int p, int q_max);

// dimension equality N_q(P^p(bA)/P^{p+1}(bA)) = N_q((QbA)^{tensor p}_{Sigma_p})
ValidationReport power_quotient_check(const SimplicialAlgebra& A, int p, int q_max);

struct E0Entry {
  int p, q, w, dim;
};
struct E0Page {
  int s = 0;
  std::vector<E0Entry> entries;  // rows s <= p <= p_max only; lower rows vanish
};
E0Page e0_page(const SimplicialAlgebra& A, int s, int p_max, int q_max);

// checks: rows vanish above the weight (p > w), and the per-weight column sum
// dominates dim pi_q(P^s(bA))
ValidationReport e0_check(const SimplicialAlgebra& A, int s, int p_max, int q_max);

}  // namespace aq
