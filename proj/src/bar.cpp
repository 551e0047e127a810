#include "aq/bar.hpp"

#include <algorithm>

namespace aq {

BarObject::BarObject(const SimplicialAlgebra& X, int r, long basis_cap)
    : X_(&X), r_(r), cap_(basis_cap) {
  if (r < 1) throw TruncationError("bar iteration count must be >= 1");
  std::string why;
  if (!X.is_weight_graded(&why))
    throw TruncationError("bar construction needs a weight-graded input: " + why);
}

const std::vector<Monomial>& BarObject::basis(int n, int w) const {
  auto key = std::make_pair(n, w);
  auto it = bases_.find(key);
  if (it != bases_.end()) return it->second;

  const int W = max_weight();
  // realize all weights at level n at once: by_depth[d][v] = trees of weight v
  std::vector<std::vector<std::vector<Monomial>>> by_depth(depth_at(n) + 1);
  for (auto& bw : by_depth) bw.resize(W + 1);
  for (int v = 1; v <= W; ++v) by_depth[0][v] = X_->leaf_monomials(n, v);
  for (int d = 1; d <= depth_at(n); ++d) {
    // pool of depth-(d-1) trees ordered by (weight, render)
    std::vector<const Monomial*> pool;
    for (int v = 1; v <= W; ++v)
      for (auto& m : by_depth[d - 1][v]) pool.push_back(&m);
    std::vector<const Monomial*> cur;
    long count = 0;
    auto rec = [&](auto&& self, size_t from, int wsum) -> void {
      if (!cur.empty()) {
        std::vector<Monomial> kids;
        kids.reserve(cur.size());
        for (auto* p : cur) kids.push_back(*p);
        Monomial node = Monomial::node(std::move(kids));
        by_depth[d][node.weight()].push_back(std::move(node));
        if (++count > cap_)
          throw ResourceError("bar block at level " + std::to_string(n) +
                                  " exceeds the basis cap",
                              count);
      }
      for (size_t k = from; k < pool.size(); ++k) {
        int v = pool[k]->weight();
        if (wsum + v > W) continue;
        cur.push_back(pool[k]);
        self(self, k, wsum + v);
        cur.pop_back();
      }
    };
    rec(rec, 0, 0);
    for (int v = 1; v <= W; ++v) std::sort(by_depth[d][v].begin(), by_depth[d][v].end());
  }
  for (int v = 0; v <= W; ++v)
    bases_[{n, v}] = std::move(by_depth[depth_at(n)][v]);
  return bases_.at(key);
}

const std::map<std::string, int>& BarObject::index(int n, int w) const {
  auto key = std::make_pair(n, w);
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  std::map<std::string, int> idx;
  const auto& b = basis(n, w);
  for (size_t k = 0; k < b.size(); ++k) idx[b[k].render()] = static_cast<int>(k);
  return index_.emplace(key, std::move(idx)).first->second;
}

const BlockSpace& BarObject::blocks() const {
  if (space_) return *space_;
  const Field& F = field();
  BlockSpace B(F, max_degree(), max_weight());
  for (int n = 0; n <= max_degree(); ++n)
    for (int w = 0; w <= max_weight(); ++w) {
      std::vector<std::string> labels;
      for (auto& m : basis(n, w)) labels.push_back(m.render());
      B.set_block(n, w, make_basis(std::move(labels)));
    }
  for (int n = 0; n <= max_degree(); ++n)
    for (int w = 0; w <= max_weight(); ++w)
      for (int i = 0; i <= n; ++i) {
        if (n >= 1) {
          LinearMap m(F, B.block(n, w), B.block(n - 1, w));
          const auto& bs = basis(n, w);
          for (size_t c = 0; c < bs.size(); ++c)
            m.set_column(static_cast<int>(c),
                         coords(n - 1, w, apply_face(i, n, AlgebraElement::single(F, bs[c]))));
          B.set_face(i, n, w, std::move(m));
        }
        if (n + 1 <= max_degree()) {
          LinearMap m(F, B.block(n, w), B.block(n + 1, w));
          const auto& bs = basis(n, w);
          for (size_t c = 0; c < bs.size(); ++c)
            m.set_column(static_cast<int>(c),
                         coords(n + 1, w, apply_degen(i, n, AlgebraElement::single(F, bs[c]))));
          B.set_degen(i, n, w, std::move(m));
        }
      }
  space_ = std::move(B);
  return *space_;
}

OpWord BarObject::face_word(int i, int n) const {
  OpWord word;
  int depth = depth_at(n);
  for (int t = 0; t < r_; ++t) {
    int k = r_ - 1 - t;
    int level = depth - t - 1;
    int layer = k * (n + 1) + (n - i);
    word.push({true, level - layer, level});
  }
  return word;
}

OpWord BarObject::degen_word(int i, int n) const {
  OpWord word;
  int depth = depth_at(n);
  for (int t = 0; t < r_; ++t) {
    int k = r_ - 1 - t;
    int level = depth + t - 1;
    int layer = k * (n + 1) + (n - i);
    word.push({false, level - layer, level});
  }
  return word;
}

AlgebraElement BarObject::apply_face(int i, int n, const AlgebraElement& x) const {
  LeafAlgebra base = X_->leaf_algebra(n);
  AlgebraElement y = face_word(i, n).apply(x, &base);
  if (y.is_zero()) return y;
  return map_at_depth(y, 0, [this, i, n](const Monomial& leaf) {
    MonoImage out;
    for (auto& [dst, c] : X_->face_of(i, n, leaf.symbol()))
      out.emplace_back(Monomial::leaf(dst, *X_->weight_of(n - 1, dst)), c);
    return out;
  });
}

AlgebraElement BarObject::apply_degen(int i, int n, const AlgebraElement& x) const {
  AlgebraElement y = degen_word(i, n).apply(x);
  if (y.is_zero()) return y;
  return map_at_depth(y, 0, [this, i, n](const Monomial& leaf) {
    MonoImage out;
    for (auto& [dst, c] : X_->degen_of(i, n, leaf.symbol()))
      out.emplace_back(Monomial::leaf(dst, *X_->weight_of(n + 1, dst)), c);
    return out;
  });
}

SparseVec BarObject::coords(int n, int w, const AlgebraElement& x) const {
  const auto& idx = index(n, w);
  SparseVec v;
  for (auto& [m, c] : x.terms()) {
    auto it = idx.find(m.render());
    if (it == idx.end())
      throw TermError("element escapes the realized block: " + m.render());
    v.emplace_back(it->second, c);
  }
  std::sort(v.begin(), v.end());
  return v;
}

AlgebraElement BarObject::from_coords(int n, int w, const SparseVec& v) const {
  AlgebraElement x(field());
  const auto& b = basis(n, w);
  for (auto& [i, c] : v) x.add_term(b.at(i), c);
  return x;
}

Monomial BarObject::parse_label(int n, const std::string& label) const {
  return Monomial::parse(label, [this, n](const std::string& sym) {
    auto w = X_->weight_of(n, sym);
    if (!w) throw TermError("unknown generator '" + sym + "' in label");
    return *w;
  });
}

OpWord augmentation_word(int q) {
  OpWord word;
  for (int t = 0; t <= q; ++t) word.push({true, 0, q - t});
  return word;
}

OpWord eps_outer_word(int q) {
  OpWord word;
  for (int t = 0; t <= q; ++t) word.push({true, 0, 2 * q + 1 - t});
  return word;
}

OpWord eps_inner_word(int q) {
  OpWord word;
  for (int t = 0; t <= q; ++t) word.push({true, q + 1, 2 * q + 1 - t});
  return word;
}

OpWord homotopy_word(int j, int q) {
  OpWord word;
  for (int k = 2 * q + 1; k >= q + 2; --k) word.push({true, j + 1, k});
  return word;
}

namespace {

// counit index j instead of j+1: stays evaluable but breaks the identities
OpWord perturbed_homotopy_word(int j, int q) {
  OpWord word;
  for (int k = 2 * q + 1; k >= q + 2; --k) word.push({true, j, k});
  return word;
}

AlgebraElement apply_h_word(const BarObject& b2X, const OpWord& word, int j, int q,
                            const AlgebraElement& x) {
  const SimplicialAlgebra& X = b2X.source();
  AlgebraElement y = word.apply(x);
  if (y.is_zero()) return y;
  return map_at_depth(y, 0, [&X, j, q](const Monomial& leaf) {
    MonoImage out;
    for (auto& [dst, c] : X.degen_of(j, q, leaf.symbol()))
      out.emplace_back(Monomial::leaf(dst, *X.weight_of(q + 1, dst)), c);
    return out;
  });
}

}  // namespace

AlgebraElement apply_homotopy(const BarObject& b2X, int j, int q,
                              const AlgebraElement& x) {
  return apply_h_word(b2X, homotopy_word(j, q), j, q, x);
}

LinearMap homotopy_block(const BarObject& b2X, const BarObject& bX, int j, int q,
                         int w) {
  const Field& F = b2X.field();
  LinearMap m(F, b2X.blocks().block(q, w), bX.blocks().block(q + 1, w));
  const auto& bs = b2X.basis(q, w);
  for (size_t c = 0; c < bs.size(); ++c)
    m.set_column(static_cast<int>(c),
                 bX.coords(q + 1, w, apply_homotopy(b2X, j, q,
                                                    AlgebraElement::single(F, bs[c]))));
  return m;
}

namespace {

BlockMap word_blocks(const BarObject& src_bar, const BlockSpace& dst,
                     const std::function<OpWord(int)>& word_of,
                     const std::function<SparseVec(int, int, const AlgebraElement&)>& to_coords,
                     bool needs_base, int q_max, int w_max) {
  const Field& F = src_bar.field();
  BlockMap out;
  for (int q = 0; q <= q_max; ++q)
    for (int w = 0; w <= w_max; ++w) {
      OpWord word = word_of(q);
      LinearMap m(F, src_bar.blocks().block(q, w), dst.block(q, w));
      const auto& bs = src_bar.basis(q, w);
      LeafAlgebra base = src_bar.source().leaf_algebra(q);
      for (size_t c = 0; c < bs.size(); ++c) {
        AlgebraElement y =
            word.apply(AlgebraElement::single(F, bs[c]), needs_base ? &base : nullptr);
        m.set_column(static_cast<int>(c), to_coords(q, w, y));
      }
      out.emplace(BlockKey{q, w}, std::move(m));
    }
  return out;
}

}  // namespace

BlockMap eps_outer_blocks(const BarObject& b2X, const BarObject& bX, int q_max,
                          int w_max) {
  return word_blocks(
      b2X, bX.blocks(), eps_outer_word,
      [&bX](int q, int w, const AlgebraElement& y) { return bX.coords(q, w, y); },
      false, q_max, w_max);
}

BlockMap eps_inner_blocks(const BarObject& b2X, const BarObject& bX, int q_max,
                          int w_max) {
  return word_blocks(
      b2X, bX.blocks(), eps_inner_word,
      [&bX](int q, int w, const AlgebraElement& y) { return bX.coords(q, w, y); },
      true, q_max, w_max);
}

BlockMap augmentation_blocks(const BarObject& bX, int q_max, int w_max) {
  const BlockSpace& XB = bX.source().blocks();
  return word_blocks(
      bX, XB, augmentation_word,
      [&XB](int q, int w, const AlgebraElement& y) {
        SparseVec v;
        const LabeledBasis& basis = *XB.block(q, w);
        for (auto& [m, c] : y.terms()) {
          auto i = basis.index_of(m.render());
          if (!i) throw TermError("augmentation image escapes the level basis");
          v.emplace_back(*i, c);
        }
        std::sort(v.begin(), v.end());
        return v;
      },
      true, q_max, w_max);
}

namespace {

ValidationReport verify_appendix_impl(const SimplicialAlgebra& X, int q_max,
                                      int w_max, bool perturb) {
  if (q_max + 1 > X.max_degree())
    throw TruncationError("appendix verification needs max degree >= q_max + 1");
  auto hword = [&](int j, int q) {
    return perturb ? perturbed_homotopy_word(j, q) : homotopy_word(j, q);
  };

  ValidationReport rep;
  auto word_check = [&](const std::string& id, OpWord a, OpWord b) {
    if (!a.same_transformation(b))
      rep.push_back({id, a.str() + "  vs  " + b.str()});
  };
  auto cat = [](OpWord first, const OpWord& then) {
    for (auto& op : then.ops()) first.push(op);
    return first;
  };

  BarObject bX(X, 1);
  BarObject b2X(X, 2);

  // (b)-layer identities as operator normal forms
  for (int q = 0; q <= q_max; ++q) {
    for (int i = 0; i <= q; ++i) {
      // two expansions of the doubled face / degeneracy layer operators
      OpWord alt_face({{true, q + 1 + i, 2 * q + 1}, {true, i, 2 * q}});
      word_check("fused face expansion (i=" + std::to_string(i) + ", q=" +
                     std::to_string(q) + ")",
                 b2X.face_word(i, q), alt_face);
      OpWord alt_degen({{false, q + 1 + i, 2 * q + 1}, {false, i, 2 * q + 2}});
      word_check("fused degeneracy expansion (i=" + std::to_string(i) + ", q=" +
                     std::to_string(q) + ")",
                 b2X.degen_word(i, q), alt_degen);
    }
    auto tag = [&](const char* fam, int i, int j) {
      return std::string(fam) + " layers (i=" + std::to_string(i) +
             ", j=" + std::to_string(j) + ", q=" + std::to_string(q) + ")";
    };
    for (int j = 0; j <= q; ++j) {
      for (int i = 0; i < j; ++i)
        word_check(tag("(1)", i, j),
                   cat(hword(j, q), bX.face_word(i, q + 1)),
                   cat(b2X.face_word(i, q), hword(j - 1, q - 1)));
      if (j + 1 <= q)
        word_check(tag("(2)", j + 1, j),
                   cat(hword(j, q), bX.face_word(j + 1, q + 1)),
                   cat(hword(j + 1, q), bX.face_word(j + 1, q + 1)));
      for (int i = j + 2; i <= q + 1 && q >= 1; ++i)
        word_check(tag("(3)", i, j),
                   cat(hword(j, q), bX.face_word(i, q + 1)),
                   cat(b2X.face_word(i - 1, q), hword(j, q - 1)));
      for (int i = 0; i <= j; ++i)
        word_check(tag("(4)", i, j),
                   cat(hword(j, q), bX.degen_word(i, q + 1)),
                   cat(b2X.degen_word(i, q), hword(j + 1, q + 1)));
      for (int i = j + 1; i <= q + 1; ++i)
        word_check(tag("(5)", i, j),
                   cat(hword(j, q), bX.degen_word(i, q + 1)),
                   cat(b2X.degen_word(i - 1, q), hword(j, q + 1)));
    }
    word_check("boundary d_0 h_0 = eps_{bX} layers (q=" + std::to_string(q) + ")",
               cat(hword(0, q), bX.face_word(0, q + 1)), eps_outer_word(q));
    word_check("boundary d_{q+1} h_q = b(eps) layers (q=" + std::to_string(q) + ")",
               cat(hword(q, q), bX.face_word(q + 1, q + 1)), eps_inner_word(q));
  }

  // exact linear-algebra verification via the generic checker
  HomotopyFamily h;
  const Field& F = X.field();
  for (int q = 0; q <= q_max; ++q)
    for (int j = 0; j <= q; ++j)
      for (int w = 0; w <= w_max; ++w) {
        OpWord word = hword(j, q);
        LinearMap m(F, b2X.blocks().block(q, w), bX.blocks().block(q + 1, w));
        const auto& bs = b2X.basis(q, w);
        for (size_t c = 0; c < bs.size(); ++c)
          m.set_column(static_cast<int>(c),
                       bX.coords(q + 1, w,
                                 apply_h_word(b2X, word, j, q,
                                              AlgebraElement::single(F, bs[c]))));
        h.maps.emplace(std::make_tuple(j, q, w), std::move(m));
      }
  BlockMap f = eps_outer_blocks(b2X, bX, q_max, w_max);
  BlockMap g = eps_inner_blocks(b2X, bX, q_max, w_max);
  ValidationReport linrep =
      check_simplicial_homotopy(b2X.blocks(), bX.blocks(), h, f, g, q_max, w_max);
  rep.insert(rep.end(), linrep.begin(), linrep.end());
  return rep;
}

}  // namespace

ValidationReport verify_appendix(const SimplicialAlgebra& X, int q_max, int w_max) {
  return verify_appendix_impl(X, q_max, w_max, false);
}

ValidationReport verify_appendix_perturbed(const SimplicialAlgebra& X, int q_max,
                                           int w_max) {
  return verify_appendix_impl(X, q_max, w_max, true);
}

}  // namespace aq
