#include "aq/sseq.hpp"

#include <algorithm>

namespace aq {

BlockSpace power_space(const BarObject& bA, int s) {
  return monomial_subspace(
      bA, [s](const Monomial& m, int) { return m.top_size() >= s; });
}

BlockSpace power_quotient_space(const BarObject& bA, int p) {
  const Field& F = bA.field();
  const int N = bA.max_degree(), W = bA.max_weight();
  const BlockSpace& full = bA.blocks();
  BlockSpace quot(F, N, W);
  std::map<std::pair<int, int>, std::vector<int>> kept;
  std::map<std::pair<int, int>, std::map<int, int>> to_sub;
  for (int n = 0; n <= N; ++n)
    for (int w = 0; w <= W; ++w) {
      std::vector<std::string> labels;
      const auto& b = bA.basis(n, w);
      for (size_t k = 0; k < b.size(); ++k)
        if (b[k].top_size() == p) {
          to_sub[{n, w}][static_cast<int>(k)] = static_cast<int>(kept[{n, w}].size());
          kept[{n, w}].push_back(static_cast<int>(k));
          labels.push_back(b[k].render());
        }
      quot.set_block(n, w, make_basis(std::move(labels)));
    }
  // apply the full map and project: terms deeper in the filtration vanish,
  // terms shallower would signal a broken filtration
  auto project = [&](const SparseVec& col, int n, int w) {
    SparseVec out;
    const auto& b = bA.basis(n, w);
    const auto& dict = to_sub[{n, w}];
    for (auto& [row, c] : col) {
      int sz = b[row].top_size();
      if (sz > p) continue;
      if (sz < p)
        throw LinAlgError("power filtration violated: structure map lowers the "
                          "top multiset size");
      out.emplace_back(dict.at(row), c);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  for (int n = 0; n <= N; ++n)
    for (int w = 0; w <= W; ++w)
      for (int i = 0; i <= n; ++i) {
        if (n >= 1) {
          LinearMap m(F, quot.block(n, w), quot.block(n - 1, w));
          const LinearMap& fm = full.face(i, n, w);
          for (size_t c = 0; c < kept[{n, w}].size(); ++c)
            m.set_column(static_cast<int>(c), project(fm.column(kept[{n, w}][c]), n - 1, w));
          quot.set_face(i, n, w, std::move(m));
        }
        if (n + 1 <= N) {
          LinearMap m(F, quot.block(n, w), quot.block(n + 1, w));
          const LinearMap& sm = full.degen(i, n, w);
          for (size_t c = 0; c < kept[{n, w}].size(); ++c)
            m.set_column(static_cast<int>(c), project(sm.column(kept[{n, w}][c]), n + 1, w));
          quot.set_degen(i, n, w, std::move(m));
        }
      }
  return quot;
}

namespace {

struct LevelComponents {
  // all labels of one level across weights, ordered by (weight, label)
  std::vector<std::pair<std::string, int>> comps;  // (label, weight)
  std::map<std::string, std::pair<int, int>> locate;  // label -> (weight, index in block)
};

LevelComponents level_components(const BlockSpace& V, int n) {
  LevelComponents lc;
  for (int w = 0; w <= V.max_weight(); ++w) {
    const auto& labels = V.block(n, w)->labels();
    for (size_t k = 0; k < labels.size(); ++k) {
      if (lc.locate.count(labels[k]))
        throw LinAlgError("coinvariants need level-unique labels");
      lc.comps.emplace_back(labels[k], w);
      lc.locate[labels[k]] = {w, static_cast<int>(k)};
    }
  }
  std::sort(lc.comps.begin(), lc.comps.end(),
            [](auto& a, auto& b) { return a.second != b.second ? a.second < b.second
                                                               : a.first < b.first; });
  return lc;
}

std::string orbit_label(std::vector<std::string> parts) {
  std::sort(parts.begin(), parts.end());
  std::string l = "[" + parts.front();
  for (size_t k = 1; k < parts.size(); ++k) l += "|" + parts[k];
  return l + "]";
}

}  // namespace

BlockSpace sym_coinvariants(const BlockSpace& V, int p) {
  if (p < 1) throw LinAlgError("coinvariant power must be >= 1");
  const Field& F = V.field();
  const int N = V.max_degree(), W = V.max_weight();
  BlockSpace C(F, N, W);
  std::map<int, LevelComponents> comps;
  std::map<std::pair<int, int>, std::vector<std::vector<std::string>>> orbits;
  for (int n = 0; n <= N; ++n) {
    comps[n] = level_components(V, n);
    std::vector<std::string> cur;
    auto rec = [&](auto&& self, size_t from, int wsum) -> void {
      if (static_cast<int>(cur.size()) == p) {
        if (wsum <= W) orbits[{n, wsum}].push_back(cur);
        return;
      }
      for (size_t k = from; k < comps[n].comps.size(); ++k) {
        int cw = comps[n].comps[k].second;
        if (wsum + cw > W) continue;
        cur.push_back(comps[n].comps[k].first);
        self(self, k, wsum + cw);
        cur.pop_back();
      }
    };
    rec(rec, 0, 0);
    for (int w = 0; w <= W; ++w) {
      std::vector<std::string> labels;
      for (auto& orb : orbits[{n, w}]) labels.push_back(orbit_label(orb));
      std::sort(labels.begin(), labels.end());
      C.set_block(n, w, make_basis(std::move(labels)));
    }
  }
  // diagonal structure maps
  auto build = [&](int n, int w, int target, bool is_face, int i) {
    LinearMap m(F, C.block(n, w), C.block(target, w));
    for (auto& orb : orbits[{n, w}]) {
      std::string src = orbit_label(orb);
      // componentwise images in V
      std::vector<std::vector<std::pair<std::string, Coeff>>> images;
      bool dead = false;
      for (auto& lbl : orb) {
        auto [cw, idx] = comps[n].locate.at(lbl);
        const LinearMap& vm = is_face ? V.face(i, n, cw) : V.degen(i, n, cw);
        std::vector<std::pair<std::string, Coeff>> img;
        for (auto& [row, c] : vm.column(idx))
          img.emplace_back(vm.codomain().label(row), c);
        if (img.empty()) {
          dead = true;
          break;
        }
        images.push_back(std::move(img));
      }
      if (dead) continue;
      std::vector<std::string> pick;
      auto rec = [&](auto&& self, size_t idx, Coeff coef) -> void {
        if (idx == images.size()) {
          m.add_entry(src, orbit_label(pick), coef);
          return;
        }
        for (auto& [l, c] : images[idx]) {
          pick.push_back(l);
          self(self, idx + 1, F.mul(coef, c));
          pick.pop_back();
        }
      };
      rec(rec, 0, Coeff(1));
    }
    return m;
  };
  for (int n = 0; n <= N; ++n)
    for (int w = 0; w <= W; ++w)
      for (int i = 0; i <= n; ++i) {
        if (n >= 1) C.set_face(i, n, w, build(n, w, n - 1, true, i));
        if (n + 1 <= N) C.set_degen(i, n, w, build(n, w, n + 1, false, i));
      }
  return C;
}

DoldPuppeVerdict dold_puppe_check(const BlockSpace& V, int p, int q_max) {
  DoldPuppeVerdict v;
  v.p = p;
  BlockSpace C = sym_coinvariants(V, p);
  v.table = homotopy_groups(C, q_max, V.max_weight());
  v.pass = true;
  for (auto& [key, dim] : v.table)
    if (key.first <= p - 1 && dim != 0) v.pass = false;
  return v;
}

ValidationReport power_quotient_check(const SimplicialAlgebra& A, int p, int q_max) {
  ValidationReport rep;
  BarObject bA(A, 1);
  BlockSpace quot = power_quotient_space(bA, p);
  BlockSpace QbA = power_quotient_space(bA, 1);
  BlockSpace coinv = sym_coinvariants(QbA, p);
  for (int q = 0; q <= q_max; ++q)
    for (int w = 0; w <= A.max_weight(); ++w) {
      int lhs = moore_chain(quot, q, w).dim();
      int rhs = moore_chain(coinv, q, w).dim();
      if (lhs != rhs)
        rep.push_back({"N_" + std::to_string(q) + "(P^" + std::to_string(p) +
                           "/P^" + std::to_string(p + 1) +
                           ") = N_q(coinvariants)",
                       "(q=" + std::to_string(q) + ", w=" + std::to_string(w) +
                           "): " + std::to_string(lhs) + " vs " +
                           std::to_string(rhs)});
    }
  return rep;
}

E0Page e0_page(const SimplicialAlgebra& A, int s, int p_max, int q_max) {
  E0Page page;
  page.s = s;
  BarObject bA(A, 1);
  for (int p = s; p <= p_max; ++p) {
    BlockSpace quot = power_quotient_space(bA, p);
    for (int q = 0; q <= q_max; ++q)
      for (int w = 0; w <= A.max_weight(); ++w)
        page.entries.push_back({p, q, w, moore_chain(quot, q, w).dim()});
  }
  return page;
}

ValidationReport e0_check(const SimplicialAlgebra& A, int s, int p_max, int q_max) {
  ValidationReport rep;
  const int W = A.max_weight();
  int rows = std::max(p_max, W);
  E0Page page = e0_page(A, s, rows, q_max);
  BarObject bA(A, 1);
  BlockSpace Ps = power_space(bA, s);
  for (auto& e : page.entries)
    if (e.p > e.w && e.dim != 0)
      rep.push_back({"E0 rows vanish above the weight",
                     "(p=" + std::to_string(e.p) + ", q=" + std::to_string(e.q) +
                         ", w=" + std::to_string(e.w) + ")"});
  for (int q = 0; q <= q_max; ++q)
    for (int w = 0; w <= W; ++w) {
      int colsum = 0;
      for (auto& e : page.entries)
        if (e.q == q && e.w == w) colsum += e.dim;
      int pi = pi_dim(Ps, q, w);
      if (pi > colsum)
        rep.push_back({"E0 column sum bounds dim pi_q(P^s(bA))",
                       "(q=" + std::to_string(q) + ", w=" + std::to_string(w) +
                           "): pi=" + std::to_string(pi) +
                           " > sum=" + std::to_string(colsum)});
    }
  return rep;
}

}  // namespace aq
