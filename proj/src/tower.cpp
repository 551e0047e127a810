#include "aq/tower.hpp"

#include <algorithm>

namespace aq {

bool decomposable_at_cut(const Monomial& m, int cut) {
  if (cut < 1 || m.depth() < cut)
    throw TermError("cut out of range for monomial of depth " +
                    std::to_string(m.depth()));
  if (m.depth() == cut) return m.top_size() >= 2;
  for (auto& kid : m.children())
    if (decomposable_at_cut(kid, cut)) return true;
  return false;
}

namespace {

bool tower_keep(const Monomial& m, int n, int r) {
  for (int i = 1; i <= r; ++i)
    if (!decomposable_at_cut(m, i * (n + 1))) return false;
  return true;
}

}  // namespace

std::vector<int> tower_basis_indices(const BarObject& brX, int n, int w) {
  const int r = brX.iterations();
  std::vector<int> out;
  const auto& b = brX.basis(n, w);
  for (size_t k = 0; k < b.size(); ++k)
    if (tower_keep(b[k], n, r)) out.push_back(static_cast<int>(k));
  return out;
}

Subspace tower_span(const BarObject& brX, int n, int w) {
  Subspace S(brX.field(), static_cast<int>(brX.basis(n, w).size()));
  for (int idx : tower_basis_indices(brX, n, w)) S.insert({{idx, Coeff(1)}});
  return S;
}

LinearMap eta_cut_block(const BarObject& brX, int i, int n, int w) {
  if (i < 1 || i > brX.iterations()) throw TermError("eta cut index out of range");
  const auto& b = brX.basis(n, w);
  BasisPtr block = brX.blocks().block(n, w);
  LinearMap m(brX.field(), block, block);
  for (size_t c = 0; c < b.size(); ++c)
    if (!decomposable_at_cut(b[c], i * (n + 1)))
      m.set_column(static_cast<int>(c), {{static_cast<int>(c), Coeff(1)}});
  return m;
}

Subspace tower_kernel_oracle(const BarObject& brX, int n, int w) {
  std::vector<Subspace> kers;
  for (int i = 1; i <= brX.iterations(); ++i)
    kers.push_back(kernel(eta_cut_block(brX, i, n, w)));
  return intersect_all(brX.field(), static_cast<int>(brX.basis(n, w).size()), kers);
}

BlockSpace monomial_subspace(const BarObject& brX,
                             const std::function<bool(const Monomial&, int)>& keep) {
  const Field& F = brX.field();
  const int N = brX.max_degree(), W = brX.max_weight();
  const BlockSpace& full = brX.blocks();
  BlockSpace sub(F, N, W);
  // kept indices per block, and full-index -> sub-index maps
  std::map<std::pair<int, int>, std::vector<int>> kept;
  std::map<std::pair<int, int>, std::map<int, int>> to_sub;
  for (int n = 0; n <= N; ++n)
    for (int w = 0; w <= W; ++w) {
      std::vector<std::string> labels;
      const auto& b = brX.basis(n, w);
      for (size_t k = 0; k < b.size(); ++k)
        if (keep(b[k], n)) {
          to_sub[{n, w}][static_cast<int>(k)] =
              static_cast<int>(kept[{n, w}].size());
          kept[{n, w}].push_back(static_cast<int>(k));
          labels.push_back(b[k].render());
        }
      sub.set_block(n, w, make_basis(std::move(labels)));
    }
  auto restrict_col = [&](const SparseVec& col, int n, int w) {
    SparseVec out;
    const auto& dict = to_sub[{n, w}];
    for (auto& [row, c] : col) {
      auto it = dict.find(row);
      if (it == dict.end())
        throw LinAlgError("structure map escapes the monomial sub-basis at level " +
                          std::to_string(n));
      out.emplace_back(it->second, c);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  for (int n = 0; n <= N; ++n)
    for (int w = 0; w <= W; ++w)
      for (int i = 0; i <= n; ++i) {
        if (n >= 1) {
          LinearMap m(F, sub.block(n, w), sub.block(n - 1, w));
          const LinearMap& fm = full.face(i, n, w);
          for (size_t c = 0; c < kept[{n, w}].size(); ++c)
            m.set_column(static_cast<int>(c),
                         restrict_col(fm.column(kept[{n, w}][c]), n - 1, w));
          sub.set_face(i, n, w, std::move(m));
        }
        if (n + 1 <= N) {
          LinearMap m(F, sub.block(n, w), sub.block(n + 1, w));
          const LinearMap& sm = full.degen(i, n, w);
          for (size_t c = 0; c < kept[{n, w}].size(); ++c)
            m.set_column(static_cast<int>(c),
                         restrict_col(sm.column(kept[{n, w}][c]), n + 1, w));
          sub.set_degen(i, n, w, std::move(m));
        }
      }
  return sub;
}

BlockSpace tower_space(const BarObject& brX) {
  const int r = brX.iterations();
  return monomial_subspace(
      brX, [r](const Monomial& m, int n) { return tower_keep(m, n, r); });
}

BlockSpace derived_power_space(const BarObject& btA, int s) {
  const int t = btA.iterations();
  return monomial_subspace(btA, [s, t](const Monomial& m, int n) {
    if (m.top_size() < s) return false;
    for (int i = 1; i <= t - 1; ++i)
      if (!decomposable_at_cut(m, i * (n + 1))) return false;
    return true;
  });
}

void assert_derived_power_surjections(const BarObject& btA, int s) {
  const int t = btA.iterations();
  for (int stage = 1; stage <= t - 1; ++stage) {
    for (int n = 0; n <= btA.max_degree(); ++n)
      for (int w = 0; w <= btA.max_weight(); ++w) {
        const auto& b = btA.basis(n, w);
        auto in_domain = [&](const Monomial& m) {
          if (m.top_size() < s) return false;
          for (int i = 1; i < stage; ++i)
            if (!decomposable_at_cut(m, i * (n + 1))) return false;
          return true;
        };
        // the stage map is the diagonal eta at cut `stage`; its realized
        // codomain consists of the domain monomials it does not kill
        long target = 0, hit = 0;
        for (auto& m : b) {
          if (!in_domain(m)) continue;
          if (!decomposable_at_cut(m, stage * (n + 1))) {
            ++target;
            ++hit;  // diagonal map sends the monomial to itself
          }
        }
        if (hit != target)
          throw LinAlgError("derived power recursion stage not surjective");
      }
  }
}

OpWord delta_word(int r, int i, int n) {
  if (i < 0 || i >= r) throw OpError("delta variant out of range");
  OpWord word;
  for (int t = 0; t <= n; ++t) {
    int level = r * (n + 1) - 1 - t;
    int layer = (r - 1 - i) * (n + 1) + (n - t);
    word.push({true, level - layer, level});
  }
  return word;
}

AlgebraElement apply_delta(const BarObject& brX, int i, int n,
                           const AlgebraElement& x) {
  if (x.is_zero()) return x;
  int depth = x.depth();
  if (depth % (n + 1) != 0 || depth == 0)
    throw TermError("delta operand depth is not a multiple of n+1");
  int r = depth / (n + 1);
  LeafAlgebra base = brX.source().leaf_algebra(n);
  return delta_word(r, i, n).apply(x, i == r - 1 ? &base : nullptr);
}

LinearMap delta_block(const BarObject& brX, const BarObject& br1X, int i, int n,
                      int w) {
  const Field& F = brX.field();
  LinearMap m(F, brX.blocks().block(n, w), br1X.blocks().block(n, w));
  const auto& b = brX.basis(n, w);
  for (size_t c = 0; c < b.size(); ++c)
    m.set_column(static_cast<int>(c),
                 br1X.coords(n, w, apply_delta(brX, i, n,
                                               AlgebraElement::single(F, b[c]))));
  return m;
}

Subspace power_span(const SimplicialAlgebra& X, int s, int n, int w) {
  const Field& F = X.field();
  int ambient = X.blocks().dim(n, w);
  Subspace S(F, ambient);
  if (s <= 1) return Subspace::full(F, ambient);
  const LabeledBasis& block = *X.blocks().block(n, w);
  auto& gens = X.generators(n);
  std::vector<size_t> pick;
  auto emit = [&]() {
    LinComb acc = {{gens[pick[0]].symbol, Coeff(1)}};
    for (size_t k = 1; k < pick.size(); ++k) {
      LinComb next;
      for (auto& [l, c] : acc)
        for (auto& [dst, d] : X.mult_of(n, l, gens[pick[k]].symbol))
          next.emplace_back(dst, F.mul(c, d));
      acc = std::move(next);
      if (acc.empty()) return;
    }
    SparseVec v;
    for (auto& [l, c] : acc) {
      auto idx = block.index_of(l);
      if (!idx) throw LinAlgError("product escapes the level basis");
      v.emplace_back(*idx, F.reduce(c));
    }
    std::sort(v.begin(), v.end());
    S.insert(sparse_normalize(F, v));
  };
  auto rec = [&](auto&& self, size_t from, int wsum) -> void {
    if (static_cast<int>(pick.size()) == s) {
      if (wsum == w) emit();
      return;
    }
    for (size_t k = from; k < gens.size(); ++k) {
      if (wsum + gens[k].weight > w) continue;
      pick.push_back(k);
      self(self, k, wsum + gens[k].weight);
      pick.pop_back();
    }
  };
  rec(rec, 0, 0);
  return S;
}

ValidationReport check_delta_powers(const SimplicialAlgebra& X, int r_max) {
  ValidationReport rep;
  const Field& F = X.field();
  for (int r = 1; r <= r_max; ++r) {
    BarObject brX(X, r);
    for (int n = 0; n <= X.max_degree(); ++n)
      for (int w = 0; w <= X.max_weight(); ++w) {
        Subspace P = power_span(X, r + 1, n, w);
        const auto& b = brX.basis(n, w);
        const LabeledBasis& block = *X.blocks().block(n, w);
        for (int idx : tower_basis_indices(brX, n, w)) {
          AlgebraElement e = AlgebraElement::single(F, b[idx]);
          for (int rr = r; rr >= 1; --rr) e = apply_delta(brX, rr - 1, n, e);
          SparseVec v;
          for (auto& [m, c] : e.terms()) {
            auto j = block.index_of(m.render());
            if (!j) throw LinAlgError("delta image escapes the level basis");
            v.emplace_back(*j, c);
          }
          std::sort(v.begin(), v.end());
          if (!P.contains(sparse_normalize(F, v)))
            rep.push_back({"delta^" + std::to_string(r) + " lands in P^" +
                               std::to_string(r + 1),
                           b[idx].render() + " at (n=" + std::to_string(n) +
                               ", w=" + std::to_string(w) + ")"});
        }
      }
  }
  return rep;
}

std::vector<ConnectivityRow> connectivity_report(const SimplicialAlgebra& A, int t,
                                                 int s, int q_max) {
  if (!is_connected(A)) throw TruncationError("connectivity check needs a connected input");
  BarObject btA(A, t);
  assert_derived_power_surjections(btA, s);
  BlockSpace D = derived_power_space(btA, s);
  std::vector<ConnectivityRow> rows;
  for (int q = 0; q <= q_max; ++q)
    for (int w = 0; w <= A.max_weight(); ++w) {
      int d = pi_dim(D, q, w);
      rows.push_back({q, w, d, q <= s - t && d > 0});
    }
  return rows;
}

bool ConvergenceVerdict::all_zero() const {
  return std::all_of(blocks.begin(), blocks.end(),
                     [](const Block& b) { return b.zero; });
}

bool ConvergenceVerdict::vacuous() const {
  return std::all_of(blocks.begin(), blocks.end(),
                     [](const Block& b) { return b.src_dim == 0; });
}

namespace {

// block of the composite canonical delta from level r1 down to r2, restricted
// to the tower sub-bases (throws if containment fails)
LinearMap restricted_delta_composite(const BarObject& src_bar, const BlockSpace& S,
                                     const BlockSpace& T, int r2, int n, int w) {
  const Field& F = src_bar.field();
  int r1 = src_bar.iterations();
  LinearMap m(F, S.block(n, w), T.block(n, w));
  const LabeledBasis& tgt = *T.block(n, w);
  for (int c = 0; c < S.block(n, w)->dim(); ++c) {
    AlgebraElement e = AlgebraElement::single(
        F, src_bar.parse_label(n, S.block(n, w)->label(c)));
    for (int rr = r1; rr > r2; --rr) e = apply_delta(src_bar, rr - 1, n, e);
    SparseVec v;
    for (auto& [mono, coef] : e.terms()) {
      auto j = tgt.index_of(mono.render());
      if (!j)
        throw LinAlgError("delta composite escapes the tower sub-basis: " +
                          mono.render());
      v.emplace_back(*j, coef);
    }
    std::sort(v.begin(), v.end());
    m.set_column(c, std::move(v));
  }
  return m;
}

}  // namespace

ConvergenceVerdict convergence_check(const SimplicialAlgebra& X, int t, int q) {
  if (!is_connected(X)) throw TruncationError("convergence check needs a connected input");
  const int r1 = 2 * t + q - 1;
  BarObject src_bar(X, r1);
  BarObject tgt_bar(X, t);
  BlockSpace S = tower_space(src_bar);
  BlockSpace T = tower_space(tgt_bar);
  ConvergenceVerdict v;
  v.t = t;
  v.q = q;
  for (int w = 0; w <= X.max_weight(); ++w) {
    HomologyBlock hs(S, q, w), ht(T, q, w);
    LinearMap f = restricted_delta_composite(src_bar, S, T, t, q, w);
    auto cols = induced_on_homology(hs, ht, f);
    bool zero = std::all_of(cols.begin(), cols.end(),
                            [](const SparseVec& c) { return c.empty(); });
    v.blocks.push_back({w, hs.dim(), ht.dim(), zero});
  }
  return v;
}

namespace {

// flattened appendix homotopy at Z = b^{n-2} X between delta variants 0 and 1:
// counit word, then the Z-degeneracy s_j on the depth-(n-2)(q+1) subtrees
AlgebraElement apply_twisting_h(const SimplicialAlgebra& X, int n, int j, int q,
                                const AlgebraElement& x) {
  const int base_depth = (n - 2) * (q + 1);
  OpWord word;
  {
    int depth = n * (q + 1);
    int steps = q;  // layers 2q-j .. q+1-j above the Z part
    for (int t = 0; t < steps; ++t) {
      int level = depth - 1 - t;
      int layer = base_depth + 2 * q - j - t;
      word.push({true, level - layer, level});
    }
  }
  AlgebraElement y = word.apply(x);
  if (y.is_zero()) return y;
  if (n == 2) {
    return map_at_depth(y, 0, [&X, j, q](const Monomial& leaf) {
      MonoImage out;
      for (auto& [dst, c] : X.degen_of(j, q, leaf.symbol()))
        out.emplace_back(Monomial::leaf(dst, *X.weight_of(q + 1, dst)), c);
      return out;
    });
  }
  BarObject Z(X, n - 2);
  const Field& F = X.field();
  return map_at_depth(y, base_depth, [&Z, &F, j, q](const Monomial& m) {
    MonoImage out;
    AlgebraElement img = Z.apply_degen(j, q, AlgebraElement::single(F, m));
    for (auto& [mono, c] : img.terms()) out.emplace_back(mono, c);
    return out;
  });
}

}  // namespace

ValidationReport twisting_check(const SimplicialAlgebra& X, int n, int q_max) {
  ValidationReport rep;
  if (n < 1) throw TruncationError("twisting check needs n >= 1");
  if (q_max + 1 > X.max_degree())
    throw TruncationError("twisting check needs max degree >= q_max + 1");
  if (n == 1) return rep;  // a single map; nothing to compare

  BarObject src_bar(X, n);
  BarObject tgt_bar(X, n - 1);
  BlockSpace S = tower_space(src_bar);
  BlockSpace T = tower_space(tgt_bar);
  const Field& F = X.field();

  for (int q = 0; q <= q_max; ++q)
    for (int w = 0; w <= X.max_weight(); ++w) {
      HomologyBlock hs(S, q, w), ht(T, q, w);
      std::optional<std::vector<SparseVec>> reference;
      for (int i = 0; i < n; ++i) {
        // restriction of variant i to the tower sub-bases
        LinearMap f(F, S.block(q, w), T.block(q, w));
        const LabeledBasis& tgt = *T.block(q, w);
        for (int c = 0; c < S.block(q, w)->dim(); ++c) {
          AlgebraElement e = apply_delta(
              src_bar, i, q,
              AlgebraElement::single(F, src_bar.parse_label(q, S.block(q, w)->label(c))));
          SparseVec v;
          for (auto& [mono, coef] : e.terms()) {
            auto jdx = tgt.index_of(mono.render());
            if (!jdx) {
              rep.push_back({"delta variant " + std::to_string(i) +
                                 " restricts to the tower",
                             mono.render()});
              v.clear();
              break;
            }
            v.emplace_back(*jdx, coef);
          }
          std::sort(v.begin(), v.end());
          f.set_column(c, std::move(v));
        }
        auto cols = induced_on_homology(hs, ht, f);
        if (!reference) {
          reference = std::move(cols);
        } else if (*reference != cols) {
          rep.push_back({"delta variants agree on pi_" + std::to_string(q),
                         "variant " + std::to_string(i) + " differs at w=" +
                             std::to_string(w)});
        }
      }
      // the restricted appendix homotopy stays inside the tower sub-object
      for (int j = 0; j <= q; ++j) {
        const LabeledBasis& tgt_up = *T.block(q + 1, w);
        for (int c = 0; c < S.block(q, w)->dim(); ++c) {
          AlgebraElement e = apply_twisting_h(
              X, n, j, q,
              AlgebraElement::single(F, src_bar.parse_label(q, S.block(q, w)->label(c))));
          for (auto& [mono, coef] : e.terms())
            if (!tgt_up.index_of(mono.render()))
              rep.push_back({"restricted homotopy h_{" + std::to_string(j) + "," +
                                 std::to_string(q) + "} stays in the tower",
                             mono.render()});
        }
      }
    }
  return rep;
}

std::string encode_label(const std::string& render) {
  std::string s = render;
  for (char& c : s) {
    if (c == '{') c = '(';
    else if (c == '}') c = ')';
    else if (c == ',') c = ';';
  }
  return s;
}

std::string decode_label(const std::string& label) {
  std::string s = label;
  for (char& c : s) {
    if (c == '(') c = '{';
    else if (c == ')') c = '}';
    else if (c == ';') c = ',';
  }
  return s;
}

namespace {

SimplicialAlgebra monomial_algebra(const BarObject& btX, bool tower_only) {
  const SimplicialAlgebra& X = btX.source();
  const Field& F = X.field();
  const int N = X.max_degree(), W = X.max_weight();
  SimplicialAlgebra Y(F, N, W,
                      X.name() + (tower_only ? ".tower" : ".bar") +
                          std::to_string(btX.iterations()));
  std::map<std::pair<int, int>, std::vector<Monomial>> kept;
  for (int n = 0; n <= N; ++n)
    for (int w = 0; w <= W; ++w) {
      const auto& b = btX.basis(n, w);
      std::vector<int> keep;
      if (tower_only) {
        keep = tower_basis_indices(btX, n, w);
      } else {
        keep.resize(b.size());
        for (size_t k = 0; k < b.size(); ++k) keep[k] = static_cast<int>(k);
      }
      for (int idx : keep) {
        kept[{n, w}].push_back(b[idx]);
        Y.add_generator(n, encode_label(b[idx].render()), w);
      }
    }
  auto to_comb = [&](const AlgebraElement& e, int n) {
    LinComb out;
    for (auto& [m, c] : e.terms()) {
      std::string sym = encode_label(m.render());
      if (!Y.weight_of(n, sym))
        throw LinAlgError("tower structure map escapes the tower basis: " + m.render());
      out.emplace_back(sym, c);
    }
    return out;
  };
  for (auto& [key, monos] : kept) {
    auto [n, w] = key;
    for (auto& m : monos) {
      std::string sym = encode_label(m.render());
      for (int i = 0; i <= n; ++i) {
        if (n >= 1)
          Y.set_face(i, n, sym,
                     to_comb(btX.apply_face(i, n, AlgebraElement::single(F, m)), n - 1));
        if (n + 1 <= N)
          Y.set_degen(i, n, sym,
                      to_comb(btX.apply_degen(i, n, AlgebraElement::single(F, m)), n + 1));
      }
    }
  }
  for (int n = 0; n <= N; ++n) {
    std::vector<const Monomial*> all;
    for (int w = 0; w <= W; ++w)
      for (auto& m : kept[{n, w}]) all.push_back(&m);
    for (size_t a = 0; a < all.size(); ++a)
      for (size_t b = a; b < all.size(); ++b) {
        if (all[a]->weight() + all[b]->weight() > W) continue;
        AlgebraElement prod = multiply(AlgebraElement::single(F, *all[a]),
                                       AlgebraElement::single(F, *all[b]));
        Y.set_mult(n, encode_label(all[a]->render()), encode_label(all[b]->render()),
                   to_comb(prod, n));
      }
  }
  return Y;
}

}  // namespace

SimplicialAlgebra tower_algebra(const BarObject& btX) {
  return monomial_algebra(btX, true);
}

SimplicialAlgebra bar_algebra(const BarObject& bsX) {
  return monomial_algebra(bsX, false);
}

ValidationReport tower_composition_check(const SimplicialAlgebra& X, int s, int t) {
  ValidationReport rep;
  // functor-level composite: iterate the construction over the bar algebra
  // b^s X, flatten, and impose the remaining s inner decomposability cuts;
  // this must reproduce the flat level s+t exactly
  SimplicialAlgebra Y = bar_algebra(BarObject(X, s));
  BarObject btY(Y, t);
  // the tower of the tower *sub*algebra only embeds: its leaves satisfy every
  // inner cut separately, which is stronger than one witness per cut
  SimplicialAlgebra Ysub = tower_algebra(BarObject(X, s));
  BarObject btYsub(Ysub, t);
  BarObject flat(X, s + t);
  auto leaf_weight = [&X](int n) {
    return [&X, n](const std::string& sym) {
      auto w = X.weight_of(n, sym);
      if (!w) throw TermError("unknown generator '" + sym + "'");
      return *w;
    };
  };
  // substitute decoded depth-s(n+1) trees for the Y-labeled leaves
  std::function<Monomial(const Monomial&, int)> flatten =
      [&](const Monomial& m, int n) -> Monomial {
    if (m.is_leaf())
      return Monomial::parse(decode_label(m.symbol()), leaf_weight(n));
    std::vector<Monomial> kids;
    for (auto& kid : m.children()) kids.push_back(flatten(kid, n));
    return Monomial::node(std::move(kids));
  };
  auto inner_cuts = [&](const Monomial& m, int n) {
    for (int i = 1; i <= s; ++i)
      if (!decomposable_at_cut(m, i * (n + 1))) return false;
    return true;
  };
  for (int n = 0; n <= X.max_degree(); ++n)
    for (int w = 0; w <= X.max_weight(); ++w) {
      std::vector<std::string> lhs;
      for (int idx : tower_basis_indices(btY, n, w)) {
        Monomial m = flatten(btY.basis(n, w)[idx], n);
        if (inner_cuts(m, n)) lhs.push_back(m.render());
      }
      std::vector<std::string> rhs;
      for (int idx : tower_basis_indices(flat, n, w))
        rhs.push_back(flat.basis(n, w)[idx].render());
      std::sort(lhs.begin(), lhs.end());
      std::sort(rhs.begin(), rhs.end());
      if (lhs != rhs)
        rep.push_back({"iterated construction equals the flat level",
                       "(n=" + std::to_string(n) + ", w=" + std::to_string(w) +
                           "): " + std::to_string(lhs.size()) + " vs " +
                           std::to_string(rhs.size()) + " monomials"});
      for (int idx : tower_basis_indices(btYsub, n, w)) {
        std::string r = flatten(btYsub.basis(n, w)[idx], n).render();
        if (!std::binary_search(rhs.begin(), rhs.end(), r))
          rep.push_back({"iterated subobject embeds in the flat level", r});
      }
    }
  return rep;
}

}  // namespace aq
