#include "aq/fixtures.hpp"

#include <algorithm>
#include <map>

namespace aq {

namespace {

// monotone surjections [m] -> [n] as value strings of length m+1
std::vector<std::string> surjections(int m, int n) {
  std::vector<std::string> out;
  std::string cur;
  auto rec = [&](auto&& self, int pos, int val) -> void {
    if (pos == m + 1) {
      if (val == n) out.push_back(cur);
      return;
    }
    // remaining positions must still reach n
    cur.push_back(char('0' + val));
    self(self, pos + 1, val);
    cur.pop_back();
    if (val < n) {
      cur.push_back(char('0' + val + 1));
      self(self, pos + 1, val + 1);
      cur.pop_back();
    }
  };
  cur.push_back('0');
  rec(rec, 1, 0);
  // prepend handled: strings start with '0' already via initial push
  std::vector<std::string> fixed;
  for (auto& s : out) fixed.push_back(s);
  return fixed;
}

bool surjective_onto(const std::string& vals, int n) {
  std::vector<bool> seen(n + 1, false);
  for (char c : vals) seen[c - '0'] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::string drop_at(const std::string& s, int i) {
  std::string t = s;
  t.erase(t.begin() + i);
  return t;
}

std::string dup_at(const std::string& s, int i) {
  std::string t = s;
  t.insert(t.begin() + i, s[i]);
  return t;
}

}  // namespace

SimplicialAlgebra make_K(const Field& F, int n, int max_degree, int max_weight,
                         int gen_weight, const std::string& prefix) {
  SimplicialAlgebra X(F, max_degree, max_weight,
                      "K" + std::to_string(n) + "_" + prefix);
  std::map<int, std::vector<std::string>> levels;
  for (int m = 0; m <= max_degree; ++m) {
    levels[m] = surjections(m, n);
    for (auto& s : levels[m]) X.add_generator(m, prefix + s, gen_weight);
  }
  for (int m = 0; m <= max_degree; ++m) {
    for (auto& s : levels[m]) {
      for (int i = 0; i <= m; ++i) {
        if (m >= 1) {
          std::string t = drop_at(s, i);
          X.set_face(i, m, prefix + s,
                     surjective_onto(t, n) ? LinComb{{prefix + t, Coeff(1)}}
                                           : LinComb{});
        }
        if (m + 1 <= max_degree)
          X.set_degen(i, m, prefix + s, {{prefix + dup_at(s, i), Coeff(1)}});
      }
    }
  }
  return X;
}

namespace {

// Free commutative non-unital algebra on a base object whose multiplication
// is ignored; level-m generators are nonempty multisets of base level-m
// generators with weight sum <= W.
SimplicialAlgebra make_free(const SimplicialAlgebra& V, const std::string& name) {
  const Field& F = V.field();
  const int N = V.max_degree(), W = V.max_weight();
  SimplicialAlgebra X(F, N, W, name);

  auto label_of = [](std::vector<std::string> comps) {
    std::sort(comps.begin(), comps.end());
    std::string l = comps.front();
    for (size_t k = 1; k < comps.size(); ++k) l += "." + comps[k];
    return l;
  };

  std::map<int, std::vector<std::vector<std::string>>> monos;
  for (int m = 0; m <= N; ++m) {
    auto& base = V.generators(m);
    std::vector<std::string> cur;
    auto rec = [&](auto&& self, size_t from, int wsum) -> void {
      if (!cur.empty()) monos[m].push_back(cur);
      for (size_t k = from; k < base.size(); ++k) {
        if (wsum + base[k].weight > W) continue;
        cur.push_back(base[k].symbol);
        self(self, k, wsum + base[k].weight);
        cur.pop_back();
      }
    };
    rec(rec, 0, 0);
    for (auto& mono : monos[m]) {
      int w = 0;
      for (auto& c : mono) w += *V.weight_of(m, c);
      X.add_generator(m, label_of(mono), w);
    }
  }

  // image of a monomial under a base map applied componentwise
  auto push_image = [&](const std::vector<std::string>& mono, int target,
                        auto&& img_of) -> LinComb {
    std::vector<LinComb> images;
    for (auto& c : mono) {
      images.push_back(img_of(c));
      if (images.back().empty()) return {};
    }
    LinComb out;
    std::vector<std::string> comps;
    Coeff coeff(1);
    auto rec = [&](auto&& self, size_t idx, Coeff coef) -> void {
      if (idx == images.size()) {
        out.emplace_back(label_of(comps), coef);
        return;
      }
      for (auto& [l, c] : images[idx]) {
        comps.push_back(l);
        self(self, idx + 1, F.mul(coef, c));
        comps.pop_back();
      }
    };
    rec(rec, 0, coeff);
    (void)target;
    return out;
  };

  for (int m = 0; m <= N; ++m) {
    for (auto& mono : monos[m]) {
      std::string l = label_of(mono);
      for (int i = 0; i <= m; ++i) {
        if (m >= 1)
          X.set_face(i, m, l, push_image(mono, m - 1, [&](const std::string& c) {
                       return V.face_of(i, m, c);
                     }));
        if (m + 1 <= N)
          X.set_degen(i, m, l, push_image(mono, m + 1, [&](const std::string& c) {
                        return V.degen_of(i, m, c);
                      }));
      }
    }
    // multiplication: multiset union within the weight bound
    for (size_t a = 0; a < monos[m].size(); ++a)
      for (size_t b = a; b < monos[m].size(); ++b) {
        std::vector<std::string> merged = monos[m][a];
        merged.insert(merged.end(), monos[m][b].begin(), monos[m][b].end());
        std::string la = label_of(monos[m][a]), lb = label_of(monos[m][b]);
        int w = *X.weight_of(m, la) + *X.weight_of(m, lb);
        if (w <= W)
          X.set_mult(m, la, lb, {{label_of(merged), Coeff(1)}});
      }
  }
  return X;
}

}  // namespace

SimplicialAlgebra make_free_one(const Field& F, int max_degree, int max_weight) {
  SimplicialAlgebra V = make_K(F, 1, max_degree, max_weight, 1, "x");
  return make_free(V, "Free1");
}

SimplicialAlgebra make_free_two(const Field& F, int max_degree, int max_weight) {
  SimplicialAlgebra V(F, max_degree, max_weight, "V2");
  SimplicialAlgebra A = make_K(F, 1, max_degree, max_weight, 1, "x");
  SimplicialAlgebra B = make_K(F, 1, max_degree, max_weight, 2, "y");
  for (int m = 0; m <= max_degree; ++m) {
    for (auto& g : A.generators(m)) V.add_generator(m, g.symbol, g.weight);
    for (auto& g : B.generators(m)) V.add_generator(m, g.symbol, g.weight);
    for (auto& g : A.generators(m))
      for (int i = 0; i <= m; ++i) {
        if (m >= 1) V.set_face(i, m, g.symbol, A.face_of(i, m, g.symbol));
        if (m + 1 <= max_degree) V.set_degen(i, m, g.symbol, A.degen_of(i, m, g.symbol));
      }
    for (auto& g : B.generators(m))
      for (int i = 0; i <= m; ++i) {
        if (m >= 1) V.set_face(i, m, g.symbol, B.face_of(i, m, g.symbol));
        if (m + 1 <= max_degree) V.set_degen(i, m, g.symbol, B.degen_of(i, m, g.symbol));
      }
  }
  return make_free(V, "Free2");
}

SimplicialAlgebra make_mutated_K2(const Field& F, int max_degree, int max_weight) {
  if (max_degree < 4)
    throw TruncationError("mutated K(k,2) fixture needs max degree >= 4");
  SimplicialAlgebra X = make_K(F, 2, max_degree, max_weight);
  // kill one face image; breaks d_1 d_3 = d_2 d_1 at level 4
  X.set_face(1, 4, "e00122", {});
  return X;
}

SimplicialAlgebra direct_sum(const SimplicialAlgebra& A, const SimplicialAlgebra& B) {
  if (!(A.field() == B.field()) || A.max_degree() != B.max_degree() ||
      A.max_weight() != B.max_weight())
    throw TruncationError("direct sum needs matching field and truncation");
  SimplicialAlgebra X(A.field(), A.max_degree(), A.max_weight(),
                      A.name() + "+" + B.name());
  auto prefix_comb = [](const std::string& p, const LinComb& c) {
    LinComb out;
    for (auto& [l, v] : c) out.emplace_back(p + l, v);
    return out;
  };
  auto copy = [&](const SimplicialAlgebra& S, const std::string& p) {
    for (int m = 0; m <= S.max_degree(); ++m) {
      for (auto& g : S.generators(m)) X.add_generator(m, p + g.symbol, g.weight);
    }
    for (int m = 0; m <= S.max_degree(); ++m)
      for (auto& g : S.generators(m)) {
        for (int i = 0; i <= m; ++i) {
          if (m >= 1) X.set_face(i, m, p + g.symbol, prefix_comb(p, S.face_of(i, m, g.symbol)));
          if (m + 1 <= S.max_degree())
            X.set_degen(i, m, p + g.symbol, prefix_comb(p, S.degen_of(i, m, g.symbol)));
        }
        for (auto& h : S.generators(m)) {
          LinComb prod = S.mult_of(m, g.symbol, h.symbol);
          if (!prod.empty()) X.set_mult(m, p + g.symbol, p + h.symbol, prefix_comb(p, prod));
        }
      }
  };
  copy(A, "A_");
  copy(B, "B_");
  return X;
}

}  // namespace aq
