#include "aq/simplicial.hpp"

#include <algorithm>
#include <sstream>

namespace aq {

namespace {

LinComb comb_normalize(const Field& F, LinComb c) {
  std::map<std::string, Coeff> acc;
  for (auto& [l, x] : c) {
    Coeff r = F.reduce(x);
    if (r == 0) continue;
    auto [it, fresh] = acc.emplace(l, r);
    if (!fresh) {
      it->second = F.add(it->second, r);
      if (it->second == 0) acc.erase(it);
    }
  }
  return LinComb(acc.begin(), acc.end());
}

std::string comb_str(const LinComb& c) {
  if (c.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += " + ";
    if (c[i].second != 1) s += coeff_str(c[i].second) + "*";
    s += c[i].first;
  }
  return s;
}

}  // namespace

BlockSpace::BlockSpace(Field field, int max_degree, int max_weight)
    : field_(field), N_(max_degree), W_(max_weight),
      empty_(make_basis({})) {}

void BlockSpace::set_block(int n, int w, BasisPtr basis) {
  blocks_[{n, w}] = std::move(basis);
}

void BlockSpace::set_face(int i, int n, int w, LinearMap m) {
  faces_.insert_or_assign({i, n, w}, std::move(m));
}

void BlockSpace::set_degen(int i, int n, int w, LinearMap m) {
  degens_.insert_or_assign({i, n, w}, std::move(m));
}

BasisPtr BlockSpace::block(int n, int w) const {
  auto it = blocks_.find({n, w});
  return it == blocks_.end() ? empty_ : it->second;
}

int BlockSpace::dim(int n, int w) const { return block(n, w)->dim(); }

int BlockSpace::level_dim(int n) const {
  int d = 0;
  for (int w = 0; w <= W_; ++w) d += dim(n, w);
  return d;
}

const LinearMap& BlockSpace::zero_map(
    std::map<std::tuple<int, int, int>, LinearMap>& store, int i, int n, int w,
    bool is_face) const {
  auto it = store.find({i, n, w});
  if (it != store.end()) return it->second;
  int target = is_face ? n - 1 : n + 1;
  LinearMap z(field_, block(n, w), block(target, w));
  return store.emplace(std::make_tuple(i, n, w), std::move(z)).first->second;
}

const LinearMap& BlockSpace::face(int i, int n, int w) const {
  return zero_map(faces_, i, n, w, true);
}

const LinearMap& BlockSpace::degen(int i, int n, int w) const {
  return zero_map(degens_, i, n, w, false);
}

bool BlockSpace::has_face(int i, int n, int w) const {
  return faces_.count({i, n, w}) > 0;
}

ValidationReport validate_blocks(const BlockSpace& V) {
  ValidationReport rep;
  const int N = V.max_degree(), W = V.max_weight();
  auto mismatch_witness = [](const LinearMap& a, const LinearMap& b) {
    for (int j = 0; j < a.domain().dim(); ++j)
      if (a.column(j) != b.column(j)) return a.domain().label(j);
    return std::string("?");
  };
  for (int w = 0; w <= W; ++w) {
    for (int n = 0; n <= N; ++n) {
      // d_i d_j = d_{j-1} d_i for i < j
      if (n >= 2) {
        for (int j = 1; j <= n; ++j)
          for (int i = 0; i < j; ++i) {
            LinearMap lhs = compose(V.face(i, n - 1, w), V.face(j, n, w));
            LinearMap rhs = compose(V.face(j - 1, n - 1, w), V.face(i, n, w));
            if (!(lhs == rhs))
              rep.push_back({"d_" + std::to_string(i) + " d_" + std::to_string(j) +
                                 " = d_" + std::to_string(j - 1) + " d_" +
                                 std::to_string(i),
                             "level " + std::to_string(n) + " weight " +
                                 std::to_string(w) + " at " +
                                 mismatch_witness(lhs, rhs)});
          }
      }
      // s_i s_j = s_{j+1} s_i for i <= j
      if (n + 2 <= N) {
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i <= j; ++i) {
            LinearMap lhs = compose(V.degen(i, n + 1, w), V.degen(j, n, w));
            LinearMap rhs = compose(V.degen(j + 1, n + 1, w), V.degen(i, n, w));
            if (!(lhs == rhs))
              rep.push_back({"s_" + std::to_string(i) + " s_" + std::to_string(j) +
                                 " = s_" + std::to_string(j + 1) + " s_" +
                                 std::to_string(i),
                             "level " + std::to_string(n) + " weight " +
                                 std::to_string(w) + " at " +
                                 mismatch_witness(lhs, rhs)});
          }
      }
      // d_i s_j relations
      if (n + 1 <= N) {
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i <= n + 1; ++i) {
            LinearMap lhs = compose(V.face(i, n + 1, w), V.degen(j, n, w));
            LinearMap rhs(V.field(), V.block(n, w), V.block(n, w));
            std::string label;
            if (i == j || i == j + 1) {
              rhs = LinearMap::identity(V.field(), V.block(n, w));
              label = "d_" + std::to_string(i) + " s_" + std::to_string(j) + " = id";
            } else if (i < j) {
              if (n < 1) continue;
              rhs = compose(V.degen(j - 1, n - 1, w), V.face(i, n, w));
              label = "d_" + std::to_string(i) + " s_" + std::to_string(j) +
                      " = s_" + std::to_string(j - 1) + " d_" + std::to_string(i);
            } else {
              if (n < 1) continue;
              rhs = compose(V.degen(j, n - 1, w), V.face(i - 1, n, w));
              label = "d_" + std::to_string(i) + " s_" + std::to_string(j) +
                      " = s_" + std::to_string(j) + " d_" + std::to_string(i - 1);
            }
            if (!(lhs == rhs))
              rep.push_back({label, "level " + std::to_string(n) + " weight " +
                                        std::to_string(w) + " at " +
                                        mismatch_witness(lhs, rhs)});
          }
      }
      // degeneracies injective
      if (n + 1 <= N) {
        for (int i = 0; i <= n; ++i) {
          const LinearMap& s = V.degen(i, n, w);
          if (static_cast<int>(rank(s)) != s.domain().dim())
            rep.push_back({"s_" + std::to_string(i) + " injective",
                           "level " + std::to_string(n) + " weight " +
                               std::to_string(w)});
        }
      }
    }
  }
  return rep;
}

Subspace moore_chain(const BlockSpace& V, int q, int w) {
  Subspace acc = Subspace::full(V.field(), V.dim(q, w));
  for (int i = 1; i <= q; ++i) acc = acc.intersect(kernel(V.face(i, q, w)));
  return acc;
}

int pi_dim(const BlockSpace& V, int q, int w) {
  if (q + 1 > V.max_degree())
    throw TruncationError("truncation too small for pi_" + std::to_string(q));
  return HomologyBlock(V, q, w).dim();
}

PiTable homotopy_groups(const BlockSpace& V, int q_max, int w_max) {
  if (q_max + 1 > V.max_degree())
    throw TruncationError("truncation too small for pi_" + std::to_string(q_max));
  PiTable t;
  for (int q = 0; q <= q_max; ++q)
    for (int w = 0; w <= std::min(w_max, V.max_weight()); ++w)
      t[{q, w}] = pi_dim(V, q, w);
  return t;
}

bool is_connected(const BlockSpace& V) {
  for (int w = 0; w <= V.max_weight(); ++w)
    if (pi_dim(V, 0, w) != 0) return false;
  return true;
}

bool TrackedSpan::insert(const SparseVec& v, int tag) {
  SparseVec r = sparse_normalize(field_, v);
  SparseVec combo = {{tag, Coeff(1)}};
  while (!r.empty()) {
    int p = r.front().first;
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    if (it == pivots_.end() || *it != p) break;
    size_t k = it - pivots_.begin();
    Coeff c = field_.neg(field_.div(r.front().second, rows_[k].front().second));
    r = sparse_axpy(field_, r, c, rows_[k]);
    combo = sparse_axpy(field_, combo, c, combos_[k]);
  }
  if (r.empty()) return false;
  int p = r.front().first;
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  size_t k = it - pivots_.begin();
  pivots_.insert(it, p);
  rows_.insert(rows_.begin() + k, std::move(r));
  combos_.insert(combos_.begin() + k, std::move(combo));
  return true;
}

std::optional<SparseVec> TrackedSpan::solve(const SparseVec& v) const {
  SparseVec r = sparse_normalize(field_, v);
  SparseVec combo;
  while (!r.empty()) {
    int p = r.front().first;
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    if (it == pivots_.end() || *it != p) return std::nullopt;
    size_t k = it - pivots_.begin();
    Coeff c = field_.div(r.front().second, rows_[k].front().second);
    r = sparse_axpy(field_, r, field_.neg(c), rows_[k]);
    combo = sparse_axpy(field_, combo, c, combos_[k]);
  }
  return combo;
}

HomologyBlock::HomologyBlock(const BlockSpace& V, int q, int w)
    : cycles_(V.field(), V.dim(q, w)),
      boundaries_(V.field(), V.dim(q, w)),
      span_(V.field(), V.dim(q, w)) {
  if (q + 1 > V.max_degree())
    throw TruncationError("truncation too small for pi_" + std::to_string(q));
  Subspace chain = moore_chain(V, q, w);
  if (q == 0) {
    cycles_ = chain;
  } else {
    cycles_ = chain.intersect(kernel(V.face(0, q, w)));
  }
  Subspace chain_up = moore_chain(V, q + 1, w);
  const LinearMap& d0 = V.face(0, q + 1, w);
  for (auto& row : chain_up.rows()) boundaries_.insert(d0.apply(row));
  if (!cycles_.contains(boundaries_))
    throw LinAlgError("Moore boundaries escape cycles; simplicial structure broken");
  int tag = -1;
  for (auto& row : boundaries_.rows()) span_.insert(row, tag--);
  int rep_tag = 0;
  for (auto& row : cycles_.rows())
    if (span_.insert(row, rep_tag)) {
      reps_.push_back(row);
      ++rep_tag;
    }
}

std::optional<SparseVec> HomologyBlock::cls(const SparseVec& v) const {
  auto combo = span_.solve(v);
  if (!combo) return std::nullopt;
  SparseVec out;
  for (auto& [tag, c] : *combo)
    if (tag >= 0) out.emplace_back(tag, c);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SparseVec> induced_on_homology(const HomologyBlock& src,
                                           const HomologyBlock& dst,
                                           const LinearMap& f_block) {
  // well-definedness: boundaries map into boundaries
  for (auto& b : src.boundaries().rows()) {
    SparseVec img = f_block.apply(b);
    if (!dst.boundaries().contains(img))
      throw LinAlgError("induced map ill-defined: boundary image not a boundary");
  }
  std::vector<SparseVec> cols;
  for (auto& r : src.reps()) {
    SparseVec img = f_block.apply(r);
    auto c = dst.cls(img);
    if (!c) throw LinAlgError("induced map ill-defined: cycle image not a cycle");
    cols.push_back(std::move(*c));
  }
  return cols;
}

ValidationReport check_simplicial_homotopy(const BlockSpace& K,
                                           const BlockSpace& L,
                                           const HomotopyFamily& h,
                                           const BlockMap& f, const BlockMap& g,
                                           int q_max, int w_max) {
  ValidationReport rep;
  auto H = [&](int j, int q, int w) -> const LinearMap& {
    auto it = h.maps.find({j, q, w});
    if (it == h.maps.end())
      throw LinAlgError("missing homotopy map h_{" + std::to_string(j) + "," +
                        std::to_string(q) + "} at weight " + std::to_string(w));
    return it->second;
  };
  auto fail = [&](const std::string& id, int i, int j, int q, int w,
                  const LinearMap& lhs, const LinearMap& rhs) {
    std::string witness = "?";
    for (int c = 0; c < lhs.domain().dim(); ++c)
      if (lhs.column(c) != rhs.column(c)) {
        witness = lhs.domain().label(c);
        break;
      }
    rep.push_back({id + " (i=" + std::to_string(i) + ", j=" + std::to_string(j) +
                       ", q=" + std::to_string(q) + ", w=" + std::to_string(w) + ")",
                   witness});
  };
  for (int w = 0; w <= w_max; ++w) {
    for (int q = 0; q <= q_max; ++q) {
      // (1) d_i h_j = h_{j-1} d_i, 0 <= i < j <= q
      for (int j = 1; j <= q; ++j)
        for (int i = 0; i < j; ++i) {
          LinearMap lhs = compose(L.face(i, q + 1, w), H(j, q, w));
          LinearMap rhs = compose(H(j - 1, q - 1, w), K.face(i, q, w));
          if (!(lhs == rhs)) fail("(1) d_i h_j = h_{j-1} d_i", i, j, q, w, lhs, rhs);
        }
      // (2) d_{j+1} h_j = d_{j+1} h_{j+1}, 0 <= j <= q-1
      for (int j = 0; j + 1 <= q; ++j) {
        LinearMap lhs = compose(L.face(j + 1, q + 1, w), H(j, q, w));
        LinearMap rhs = compose(L.face(j + 1, q + 1, w), H(j + 1, q, w));
        if (!(lhs == rhs))
          fail("(2) d_{j+1} h_j = d_{j+1} h_{j+1}", j + 1, j, q, w, lhs, rhs);
      }
      // (3) d_i h_j = h_j d_{i-1}, j + 1 < i <= q + 1
      for (int j = 0; j <= q; ++j)
        for (int i = j + 2; i <= q + 1; ++i) {
          if (q < 1) continue;
          LinearMap lhs = compose(L.face(i, q + 1, w), H(j, q, w));
          LinearMap rhs = compose(H(j, q - 1, w), K.face(i - 1, q, w));
          if (!(lhs == rhs)) fail("(3) d_i h_j = h_j d_{i-1}", i, j, q, w, lhs, rhs);
        }
      if (q + 2 <= L.max_degree() && q + 1 <= q_max) {
        // (4) s_i h_j = h_{j+1} s_i, 0 <= i <= j <= q
        for (int j = 0; j <= q; ++j)
          for (int i = 0; i <= j; ++i) {
            LinearMap lhs = compose(L.degen(i, q + 1, w), H(j, q, w));
            LinearMap rhs = compose(H(j + 1, q + 1, w), K.degen(i, q, w));
            if (!(lhs == rhs)) fail("(4) s_i h_j = h_{j+1} s_i", i, j, q, w, lhs, rhs);
          }
        // (5) s_i h_j = h_j s_{i-1}, 0 <= j < i <= q + 1
        for (int j = 0; j <= q; ++j)
          for (int i = j + 1; i <= q + 1; ++i) {
            LinearMap lhs = compose(L.degen(i, q + 1, w), H(j, q, w));
            LinearMap rhs = compose(H(j, q + 1, w), K.degen(i - 1, q, w));
            if (!(lhs == rhs)) fail("(5) s_i h_j = h_j s_{i-1}", i, j, q, w, lhs, rhs);
          }
      }
      // boundary conditions
      auto fit = f.find({q, w});
      auto git = g.find({q, w});
      if (fit == f.end() || git == g.end())
        throw LinAlgError("missing f/g block at q=" + std::to_string(q));
      LinearMap d0h0 = compose(L.face(0, q + 1, w), H(0, q, w));
      if (!(d0h0 == fit->second)) fail("d_0 h_0 = f", 0, 0, q, w, d0h0, fit->second);
      LinearMap dqhq = compose(L.face(q + 1, q + 1, w), H(q, q, w));
      if (!(dqhq == git->second))
        fail("d_{q+1} h_q = g", q + 1, q, q, w, dqhq, git->second);
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

SimplicialAlgebra::SimplicialAlgebra(Field field, int max_degree, int max_weight,
                                     std::string name)
    : field_(field), N_(max_degree), W_(max_weight), name_(std::move(name)) {
  if (N_ < 1 || W_ < 1) throw TruncationError("truncation must satisfy N, W >= 1");
}

void SimplicialAlgebra::add_generator(int degree, const std::string& symbol,
                                      int weight) {
  if (degree < 0 || degree > N_) throw TruncationError("generator degree outside truncation");
  if (weight < 1 || weight > W_) throw TruncationError("generator weight outside truncation");
  for (auto& g : gens_[degree])
    if (g.symbol == symbol)
      throw TermError("duplicate generator symbol at level " + std::to_string(degree) +
                      ": " + symbol);
  gens_[degree].push_back({symbol, degree, weight});
  blocks_.reset();
  graded_.reset();
}

void SimplicialAlgebra::set_face(int i, int n, const std::string& src, LinComb img) {
  face_[{i, n}][src] = comb_normalize(field_, std::move(img));
  blocks_.reset();
  graded_.reset();
}

void SimplicialAlgebra::set_degen(int i, int n, const std::string& src, LinComb img) {
  degen_[{i, n}][src] = comb_normalize(field_, std::move(img));
  blocks_.reset();
  graded_.reset();
}

void SimplicialAlgebra::set_mult(int n, const std::string& a, const std::string& b,
                                 LinComb img) {
  auto key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
  mult_[n][key] = comb_normalize(field_, std::move(img));
  blocks_.reset();
  graded_.reset();
}

const std::vector<Generator>& SimplicialAlgebra::generators(int n) const {
  static const std::vector<Generator> none;
  auto it = gens_.find(n);
  return it == gens_.end() ? none : it->second;
}

std::optional<int> SimplicialAlgebra::weight_of(int n, const std::string& label) const {
  for (auto& g : generators(n))
    if (g.symbol == label) return g.weight;
  return std::nullopt;
}

LinComb SimplicialAlgebra::face_of(int i, int n, const std::string& label) const {
  auto it = face_.find({i, n});
  if (it == face_.end()) return {};
  auto jt = it->second.find(label);
  return jt == it->second.end() ? LinComb{} : jt->second;
}

LinComb SimplicialAlgebra::degen_of(int i, int n, const std::string& label) const {
  auto it = degen_.find({i, n});
  if (it == degen_.end()) return {};
  auto jt = it->second.find(label);
  return jt == it->second.end() ? LinComb{} : jt->second;
}

LinComb SimplicialAlgebra::mult_of(int n, const std::string& a,
                                   const std::string& b) const {
  auto it = mult_.find(n);
  if (it == mult_.end()) return {};
  auto key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
  auto jt = it->second.find(key);
  return jt == it->second.end() ? LinComb{} : jt->second;
}

bool SimplicialAlgebra::is_weight_graded(std::string* why) const {
  if (!graded_) {
    bool ok = true;
    std::string reason;
    auto check_map = [&](const auto& table, const char* kind) {
      for (auto& [key, cols] : table) {
        int n = key.second;
        int target = kind[0] == 'd' ? n - 1 : n + 1;
        for (auto& [src, img] : cols) {
          auto sw = weight_of(n, src);
          if (!sw) continue;
          for (auto& [dst, c] : img) {
            auto dw = weight_of(target, dst);
            if (!dw || *dw != *sw) {
              ok = false;
              reason = std::string(kind) + " image of " + src + " at level " +
                       std::to_string(n) + " changes weight";
              return;
            }
          }
        }
      }
    };
    check_map(face_, "d");
    if (ok) check_map(degen_, "s");
    if (ok) {
      for (auto& [n, table] : mult_) {
        for (auto& [pair, img] : table) {
          auto wa = weight_of(n, pair.first), wb = weight_of(n, pair.second);
          if (!wa || !wb) continue;
          for (auto& [dst, c] : img) {
            auto dw = weight_of(n, dst);
            if (!dw || *dw != *wa + *wb) {
              ok = false;
              reason = "product " + pair.first + "*" + pair.second + " at level " +
                       std::to_string(n) + " is not weight-additive";
              break;
            }
          }
          if (!ok) break;
        }
        if (!ok) break;
      }
    }
    graded_ = {ok, reason};
  }
  if (why) *why = graded_->second;
  return graded_->first;
}

const BlockSpace& SimplicialAlgebra::blocks() const {
  if (blocks_) return *blocks_;
  std::string why;
  if (!is_weight_graded(&why))
    throw TruncationError("input is not weight-graded: " + why);
  BlockSpace B(field_, N_, W_);
  for (int n = 0; n <= N_; ++n) {
    for (int w = 1; w <= W_; ++w) {
      std::vector<std::string> labels;
      for (auto& g : generators(n))
        if (g.weight == w) labels.push_back(g.symbol);
      B.set_block(n, w, make_basis(std::move(labels)));
    }
    B.set_block(n, 0, make_basis({}));
  }
  for (int n = 0; n <= N_; ++n) {
    for (int w = 1; w <= W_; ++w) {
      for (int i = 0; i <= n; ++i) {
        if (n >= 1) {
          LinearMap m(field_, B.block(n, w), B.block(n - 1, w));
          for (auto& l : B.block(n, w)->labels())
            for (auto& [dst, c] : face_of(i, n, l)) m.add_entry(l, dst, c);
          B.set_face(i, n, w, std::move(m));
        }
        if (n + 1 <= N_) {
          LinearMap m(field_, B.block(n, w), B.block(n + 1, w));
          for (auto& l : B.block(n, w)->labels())
            for (auto& [dst, c] : degen_of(i, n, l)) m.add_entry(l, dst, c);
          B.set_degen(i, n, w, std::move(m));
        }
      }
    }
  }
  blocks_ = std::move(B);
  return *blocks_;
}

ValidationReport SimplicialAlgebra::validate() const {
  ValidationReport rep;
  std::string why;
  bool graded = is_weight_graded(&why);

  // raw-level application helpers (used whether or not the input is graded)
  auto apply_face = [&](int i, int n, const LinComb& v) {
    LinComb out;
    for (auto& [l, c] : v)
      for (auto& [dst, d] : face_of(i, n, l)) out.emplace_back(dst, field_.mul(c, d));
    return comb_normalize(field_, out);
  };
  auto apply_degen = [&](int i, int n, const LinComb& v) {
    LinComb out;
    for (auto& [l, c] : v)
      for (auto& [dst, d] : degen_of(i, n, l)) out.emplace_back(dst, field_.mul(c, d));
    return comb_normalize(field_, out);
  };
  auto apply_mult = [&](int n, const LinComb& a, const LinComb& b) {
    LinComb out;
    for (auto& [la, ca] : a)
      for (auto& [lb, cb] : b)
        for (auto& [dst, d] : mult_of(n, la, lb))
          out.emplace_back(dst, field_.mul(field_.mul(ca, cb), d));
    return comb_normalize(field_, out);
  };

  for (int n = 0; n <= N_; ++n) {
    for (auto& gsrc : generators(n)) {
      LinComb v = {{gsrc.symbol, Coeff(1)}};
      // simplicial identities with this generator as witness
      if (n >= 2)
        for (int j = 1; j <= n; ++j)
          for (int i = 0; i < j; ++i)
            if (apply_face(i, n - 1, apply_face(j, n, v)) !=
                apply_face(j - 1, n - 1, apply_face(i, n, v)))
              rep.push_back({"d_" + std::to_string(i) + " d_" + std::to_string(j) +
                                 " = d_" + std::to_string(j - 1) + " d_" +
                                 std::to_string(i),
                             gsrc.symbol + " at level " + std::to_string(n)});
      if (n + 2 <= N_)
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i <= j; ++i)
            if (apply_degen(i, n + 1, apply_degen(j, n, v)) !=
                apply_degen(j + 1, n + 1, apply_degen(i, n, v)))
              rep.push_back({"s_" + std::to_string(i) + " s_" + std::to_string(j) +
                                 " = s_" + std::to_string(j + 1) + " s_" +
                                 std::to_string(i),
                             gsrc.symbol + " at level " + std::to_string(n)});
      if (n + 1 <= N_)
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i <= n + 1; ++i) {
            LinComb lhs = apply_face(i, n + 1, apply_degen(j, n, v));
            LinComb rhs;
            std::string label;
            if (i == j || i == j + 1) {
              rhs = v;
              label = "d_" + std::to_string(i) + " s_" + std::to_string(j) + " = id";
            } else if (i < j) {
              rhs = apply_degen(j - 1, n - 1, apply_face(i, n, v));
              label = "d_" + std::to_string(i) + " s_" + std::to_string(j) + " = s_" +
                      std::to_string(j - 1) + " d_" + std::to_string(i);
            } else {
              rhs = apply_degen(j, n - 1, apply_face(i - 1, n, v));
              label = "d_" + std::to_string(i) + " s_" + std::to_string(j) + " = s_" +
                      std::to_string(j) + " d_" + std::to_string(i - 1);
            }
            if (lhs != rhs)
              rep.push_back({label, gsrc.symbol + " at level " + std::to_string(n) +
                                        ": got " + comb_str(lhs) + ", expected " +
                                        comb_str(rhs)});
          }
    }
    // multiplicativity of structure maps and associativity
    auto gl = generators(n);
    for (size_t a = 0; a < gl.size(); ++a) {
      for (size_t b = a; b < gl.size(); ++b) {
        LinComb va = {{gl[a].symbol, Coeff(1)}}, vb = {{gl[b].symbol, Coeff(1)}};
        if (gl[a].weight + gl[b].weight > W_) continue;
        LinComb ab = apply_mult(n, va, vb);
        if (n >= 1)
          for (int i = 0; i <= n; ++i)
            if (apply_face(i, n, ab) !=
                apply_mult(n - 1, apply_face(i, n, va), apply_face(i, n, vb)))
              rep.push_back({"d_" + std::to_string(i) + " multiplicative",
                             gl[a].symbol + "*" + gl[b].symbol + " at level " +
                                 std::to_string(n)});
        if (n + 1 <= N_)
          for (int i = 0; i <= n; ++i)
            if (apply_degen(i, n, ab) !=
                apply_mult(n + 1, apply_degen(i, n, va), apply_degen(i, n, vb)))
              rep.push_back({"s_" + std::to_string(i) + " multiplicative",
                             gl[a].symbol + "*" + gl[b].symbol + " at level " +
                                 std::to_string(n)});
        for (size_t c = b; c < gl.size(); ++c) {
          if (gl[a].weight + gl[b].weight + gl[c].weight > W_) continue;
          LinComb vc = {{gl[c].symbol, Coeff(1)}};
          if (apply_mult(n, ab, vc) != apply_mult(n, va, apply_mult(n, vb, vc)))
            rep.push_back({"multiplication associative",
                           gl[a].symbol + "," + gl[b].symbol + "," + gl[c].symbol +
                               " at level " + std::to_string(n)});
        }
      }
    }
  }
  if (!graded)
    rep.push_back({"weight grading (informational)", why});
  // injectivity of degeneracies needs the block presentation
  if (graded) {
    for (auto& issue : validate_blocks(blocks()))
      if (issue.check.find("injective") != std::string::npos) rep.push_back(issue);
  }
  return rep;
}

LeafAlgebra SimplicialAlgebra::leaf_algebra(int n) const {
  LeafAlgebra la;
  la.mul = [this, n](const Monomial& a, const Monomial& b) {
    MonoImage out;
    for (auto& [dst, c] : mult_of(n, a.symbol(), b.symbol())) {
      auto w = weight_of(n, dst);
      if (!w) throw TermError("product lands outside level basis: " + dst);
      out.emplace_back(Monomial::leaf(dst, *w), c);
    }
    return out;
  };
  return la;
}

std::vector<Monomial> SimplicialAlgebra::leaf_monomials(int n, int w) const {
  std::vector<Monomial> out;
  for (auto& g : generators(n))
    if (g.weight == w) out.push_back(Monomial::leaf(g.symbol, g.weight));
  return out;
}

std::string SimplicialAlgebra::fingerprint() const {
  std::ostringstream os;
  os << field_.name() << "|" << N_ << "," << W_ << "|";
  for (auto& [n, gl] : gens_) {
    os << n << ":";
    for (auto& g : gl) os << g.symbol << "/" << g.weight << ";";
  }
  for (auto& [key, cols] : face_)
    for (auto& [src, img] : cols)
      os << "d" << key.first << "," << key.second << ":" << src << "=" << comb_str(img) << ";";
  for (auto& [key, cols] : degen_)
    for (auto& [src, img] : cols)
      os << "s" << key.first << "," << key.second << ":" << src << "=" << comb_str(img) << ";";
  for (auto& [n, table] : mult_)
    for (auto& [pair, img] : table)
      os << "m" << n << ":" << pair.first << "*" << pair.second << "=" << comb_str(img) << ";";
  std::string s = os.str();
  unsigned long long h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[20];
  snprintf(buf, sizeof buf, "%016llx", h);
  return buf;
}

bool is_connected(const SimplicialAlgebra& X) { return is_connected(X.blocks()); }

}  // namespace aq
