#include "aq/linmap.hpp"

#include <algorithm>
#include <map>

namespace aq {

LabeledBasis::LabeledBasis(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  index_.reserve(labels_.size());
  for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
    auto [it, fresh] = index_.emplace(labels_[i], i);
    if (!fresh) throw LinAlgError("duplicate basis label: " + labels_[i]);
  }
}

std::optional<int> LabeledBasis::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

BasisPtr make_basis(std::vector<std::string> labels) {
  return std::make_shared<const LabeledBasis>(std::move(labels));
}

SparseVec sparse_normalize(const Field& f, SparseVec v) {
  std::map<int, Coeff> acc;
  for (auto& [i, c] : v) {
    Coeff r = f.reduce(c);
    if (r == 0) continue;
    auto [it, fresh] = acc.emplace(i, r);
    if (!fresh) {
      it->second = f.add(it->second, r);
      if (it->second == 0) acc.erase(it);
    }
  }
  SparseVec out(acc.begin(), acc.end());
  return out;
}

SparseVec sparse_axpy(const Field& f, const SparseVec& a, const Coeff& c,
                      const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      Coeff v = f.mul(c, b[j].second);
      if (v != 0) out.emplace_back(b[j].first, v);
      ++j;
    } else {
      Coeff v = f.add(a[i].second, f.mul(c, b[j].second));
      if (v != 0) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec sparse_add(const Field& f, const SparseVec& a, const SparseVec& b) {
  return sparse_axpy(f, a, Coeff(1), b);
}

SparseVec sparse_scale(const Field& f, const Coeff& c, const SparseVec& a) {
  SparseVec out;
  if (c == 0) return out;
  out.reserve(a.size());
  for (auto& [i, x] : a) {
    Coeff v = f.mul(c, x);
    if (v != 0) out.emplace_back(i, v);
  }
  return out;
}

std::string sparse_str(const SparseVec& v, const LabeledBasis& basis) {
  if (v.empty()) return "0";
  std::string s;
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) s += " + ";
    if (v[k].second != 1) s += coeff_str(v[k].second) + "*";
    s += basis.label(v[k].first);
  }
  return s;
}

LinearMap::LinearMap(Field field, BasisPtr domain, BasisPtr codomain)
    : field_(field), domain_(std::move(domain)), codomain_(std::move(codomain)) {
  cols_.resize(domain_->dim());
}

LinearMap LinearMap::identity(const Field& field, const BasisPtr& basis) {
  LinearMap m(field, basis, basis);
  for (int j = 0; j < basis->dim(); ++j) m.cols_[j] = {{j, Coeff(1)}};
  return m;
}

void LinearMap::set_column(int j, SparseVec v) {
  v = sparse_normalize(field_, std::move(v));
  for (auto& [i, c] : v)
    if (i < 0 || i >= codomain_->dim())
      throw LinAlgError("column entry outside codomain");
  cols_.at(j) = std::move(v);
}

void LinearMap::set_column(const std::string& domain_label, SparseVec v) {
  auto j = domain_->index_of(domain_label);
  if (!j) throw LinAlgError("label not in domain: " + domain_label);
  set_column(*j, std::move(v));
}

void LinearMap::add_entry(const std::string& domain_label,
                          const std::string& codomain_label, const Coeff& c) {
  auto j = domain_->index_of(domain_label);
  if (!j) throw LinAlgError("label not in domain: " + domain_label);
  auto i = codomain_->index_of(codomain_label);
  if (!i) throw LinAlgError("label not in codomain: " + codomain_label);
  cols_[*j] = sparse_axpy(field_, cols_[*j], field_.reduce(c), {{*i, Coeff(1)}});
}

SparseVec LinearMap::apply(const SparseVec& v) const {
  SparseVec out;
  for (auto& [j, c] : v) {
    if (j < 0 || j >= domain_->dim()) throw LinAlgError("vector outside domain");
    out = sparse_axpy(field_, out, c, cols_[j]);
  }
  return out;
}

bool LinearMap::is_zero() const {
  for (auto& c : cols_)
    if (!c.empty()) return false;
  return true;
}

bool LinearMap::operator==(const LinearMap& o) const {
  return *domain_ == *o.domain_ && *codomain_ == *o.codomain_ && cols_ == o.cols_;
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
  if (!(g.codomain() == f.domain()))
    throw LinAlgError("compose: codomain/domain mismatch");
  LinearMap out(f.field(), g.domain_ptr(), f.codomain_ptr());
  for (int j = 0; j < g.domain().dim(); ++j)
    out.set_column(j, f.apply(g.column(j)));
  return out;
}

LinearMap map_add(const LinearMap& f, const LinearMap& g) {
  if (!(f.domain() == g.domain() && f.codomain() == g.codomain()))
    throw LinAlgError("map_add: basis mismatch");
  LinearMap out(f.field(), f.domain_ptr(), f.codomain_ptr());
  for (int j = 0; j < f.domain().dim(); ++j)
    out.set_column(j, sparse_add(f.field(), f.column(j), g.column(j)));
  return out;
}

LinearMap map_sub(const LinearMap& f, const LinearMap& g) {
  if (!(f.domain() == g.domain() && f.codomain() == g.codomain()))
    throw LinAlgError("map_sub: basis mismatch");
  LinearMap out(f.field(), f.domain_ptr(), f.codomain_ptr());
  for (int j = 0; j < f.domain().dim(); ++j)
    out.set_column(j, sparse_axpy(f.field(), f.column(j), Coeff(-1), g.column(j)));
  return out;
}

LinearMap stack(const std::vector<const LinearMap*>& maps) {
  if (maps.empty()) throw LinAlgError("stack: empty list");
  const LinearMap& first = *maps.front();
  std::vector<std::string> labels;
  for (size_t k = 0; k < maps.size(); ++k) {
    if (!(maps[k]->domain() == first.domain()))
      throw LinAlgError("stack: domain mismatch");
    for (auto& l : maps[k]->codomain().labels())
      labels.push_back("#" + std::to_string(k) + ":" + l);
  }
  LinearMap out(first.field(), first.domain_ptr(), make_basis(std::move(labels)));
  for (int j = 0; j < first.domain().dim(); ++j) {
    SparseVec col;
    int offset = 0;
    for (auto* m : maps) {
      for (auto& [i, c] : m->column(j)) col.emplace_back(i + offset, c);
      offset += m->codomain().dim();
    }
    out.set_column(j, std::move(col));
  }
  return out;
}

Subspace::Subspace(Field field, int ambient_dim)
    : field_(field), ambient_(ambient_dim) {}

Subspace Subspace::span(const Field& f, int ambient_dim,
                        const std::vector<SparseVec>& vectors) {
  Subspace s(f, ambient_dim);
  for (auto& v : vectors) s.insert(v);
  return s;
}

Subspace Subspace::full(const Field& f, int ambient_dim) {
  Subspace s(f, ambient_dim);
  for (int i = 0; i < ambient_dim; ++i) s.insert({{i, Coeff(1)}});
  return s;
}

SparseVec Subspace::reduce(const SparseVec& v) const {
  SparseVec r = sparse_normalize(field_, v);
  for (size_t k = 0; k < rows_.size() && !r.empty(); ++k) {
    // rows sorted by pivot; binary scan is unnecessary at this scale
    int p = pivots_[k];
    auto it = std::lower_bound(r.begin(), r.end(), p,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != r.end() && it->first == p)
      r = sparse_axpy(field_, r, field_.neg(it->second), rows_[k]);
  }
  return r;
}

bool Subspace::contains(const Subspace& other) const {
  for (auto& row : other.rows_)
    if (!contains(row)) return false;
  return true;
}

std::optional<std::vector<Coeff>> Subspace::coords(const SparseVec& v) const {
  std::vector<Coeff> out(rows_.size(), Coeff(0));
  SparseVec r = sparse_normalize(field_, v);
  for (size_t k = 0; k < rows_.size() && !r.empty(); ++k) {
    int p = pivots_[k];
    auto it = std::lower_bound(r.begin(), r.end(), p,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != r.end() && it->first == p) {
      out[k] = it->second;
      r = sparse_axpy(field_, r, field_.neg(it->second), rows_[k]);
    }
  }
  if (!r.empty()) return std::nullopt;
  return out;
}

bool Subspace::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  // normalize leading coefficient to 1
  Coeff lead = r.front().second;
  r = sparse_scale(field_, field_.inv(lead), r);
  int p = r.front().first;
  // back-substitute into existing rows
  for (size_t k = 0; k < rows_.size(); ++k) {
    auto it = std::lower_bound(rows_[k].begin(), rows_[k].end(), p,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != rows_[k].end() && it->first == p)
      rows_[k] = sparse_axpy(field_, rows_[k], field_.neg(it->second), r);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  size_t idx = pos - pivots_.begin();
  pivots_.insert(pos, p);
  rows_.insert(rows_.begin() + idx, std::move(r));
  return true;
}

Subspace Subspace::intersect(const Subspace& other) const {
  // Solve for vectors of `this` lying in `other`: stack the complement
  // constraints.  Implemented by expressing this's rows in a joint system:
  // v in both iff reducing v by other's rows gives zero.
  // Take kernel of the "residual after other" map on this's row space.
  std::vector<std::string> dl, cl;
  for (int i = 0; i < dim(); ++i) dl.push_back("r" + std::to_string(i));
  for (int i = 0; i < ambient_; ++i) cl.push_back("e" + std::to_string(i));
  LinearMap residual(field_, make_basis(dl), make_basis(cl));
  for (int i = 0; i < dim(); ++i) residual.set_column(i, other.reduce(rows_[i]));
  auto ker = kernel_basis(residual);
  Subspace out(field_, ambient_);
  for (auto& kv : ker) {
    SparseVec v;
    for (auto& [j, c] : kv) v = sparse_axpy(field_, v, c, rows_[j]);
    out.insert(v);
  }
  return out;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && rows_ == o.rows_;
}

unsigned rank(const LinearMap& f) {
  Subspace im(f.field(), f.codomain().dim());
  for (int j = 0; j < f.domain().dim(); ++j) im.insert(f.column(j));
  return im.dim();
}

std::vector<SparseVec> kernel_basis(const LinearMap& f) {
  // Column elimination with combination tracking.
  const Field& F = f.field();
  Subspace im(F, f.codomain().dim());
  std::vector<SparseVec> combos;         // combos[k] expresses im row k... not needed
  // Track, per processed column, its reduction trail.
  std::vector<SparseVec> rows;           // echelon rows (not reduced)
  std::vector<int> pivots;
  std::vector<SparseVec> row_combo;      // domain combination producing rows[k]
  std::vector<SparseVec> ker;
  for (int j = 0; j < f.domain().dim(); ++j) {
    SparseVec v = f.column(j);
    SparseVec combo = {{j, Coeff(1)}};
    while (!v.empty()) {
      int p = v.front().first;
      auto it = std::lower_bound(pivots.begin(), pivots.end(), p);
      if (it == pivots.end() || *it != p) break;
      size_t k = it - pivots.begin();
      Coeff c = F.neg(F.div(v.front().second, rows[k].front().second));
      v = sparse_axpy(F, v, c, rows[k]);
      combo = sparse_axpy(F, combo, c, row_combo[k]);
    }
    if (v.empty()) {
      ker.push_back(std::move(combo));
    } else {
      int p = v.front().first;
      auto it = std::lower_bound(pivots.begin(), pivots.end(), p);
      size_t k = it - pivots.begin();
      pivots.insert(it, p);
      rows.insert(rows.begin() + k, std::move(v));
      row_combo.insert(row_combo.begin() + k, std::move(combo));
    }
  }
  // echelonize the kernel vectors for a canonical result
  Subspace span = Subspace::span(F, f.domain().dim(), ker);
  return span.rows();
}

Subspace kernel(const LinearMap& f) {
  return Subspace::span(f.field(), f.domain().dim(), kernel_basis(f));
}

Subspace image(const LinearMap& f) {
  Subspace im(f.field(), f.codomain().dim());
  for (int j = 0; j < f.domain().dim(); ++j) im.insert(f.column(j));
  return im;
}

Subspace intersect_all(const Field& f, int ambient_dim,
                       const std::vector<Subspace>& subspaces) {
  Subspace acc = Subspace::full(f, ambient_dim);
  for (auto& s : subspaces) {
    if (s.ambient_dim() != ambient_dim)
      throw LinAlgError("intersect_all: ambient dimension mismatch");
    acc = acc.intersect(s);
  }
  return acc;
}

unsigned homology_dims(const LinearMap& d_in, const LinearMap& d_out) {
  if (!(d_in.codomain() == d_out.domain()))
    throw LinAlgError("homology_dims: d_in codomain != d_out domain");
  LinearMap comp = compose(d_out, d_in);
  if (!comp.is_zero())
    throw LinAlgError("homology_dims: composite d_out . d_in is nonzero");
  return kernel(d_out).dim() - rank(d_in);
}

std::vector<SparseVec> restrict_map(const LinearMap& f, const Subspace& sub,
                                    const Subspace& target) {
  if (sub.ambient_dim() != f.domain().dim())
    throw LinAlgError("restrict_map: subspace ambient mismatch");
  if (target.ambient_dim() != f.codomain().dim())
    throw LinAlgError("restrict_map: target ambient mismatch");
  std::vector<SparseVec> cols;
  for (auto& row : sub.rows()) {
    SparseVec img = f.apply(row);
    auto co = target.coords(img);
    if (!co)
      throw LinAlgError("restrict_map: image escapes target subspace");
    SparseVec col;
    for (int i = 0; i < static_cast<int>(co->size()); ++i)
      if ((*co)[i] != 0) col.emplace_back(i, (*co)[i]);
    cols.push_back(std::move(col));
  }
  return cols;
}

}  // namespace aq
