#pragma once

#include "aq/field.hpp"

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace aq {

struct LinAlgError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ordered sequence of distinct opaque labels.  The order is the canonical
// order fixed by the producing module and is part of the data.
class LabeledBasis {
 public:
  LabeledBasis() = default;
  explicit LabeledBasis(std::vector<std::string> labels);

  int dim() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> index_of(const std::string& label) const;

  bool operator==(const LabeledBasis& o) const { return labels_ == o.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

using BasisPtr = std::shared_ptr<const LabeledBasis>;

BasisPtr make_basis(std::vector<std::string> labels);

// Sparse vector: (index, coefficient) pairs sorted by index, no zeros.
using SparseVec = std::vector<std::pair<int, Coeff>>;

SparseVec sparse_normalize(const Field& f, SparseVec v);
SparseVec sparse_add(const Field& f, const SparseVec& a, const SparseVec& b);
// a + c*b
SparseVec sparse_axpy(const Field& f, const SparseVec& a, const Coeff& c,
                      const SparseVec& b);
SparseVec sparse_scale(const Field& f, const Coeff& c, const SparseVec& a);
std::string sparse_str(const SparseVec& v, const LabeledBasis& basis);

// Sparse matrix between labeled bases, stored by columns.
class LinearMap {
 public:
  LinearMap(Field field, BasisPtr domain, BasisPtr codomain);
  static LinearMap identity(const Field& field, const BasisPtr& basis);

  const Field& field() const { return field_; }
  const LabeledBasis& domain() const { return *domain_; }
  const LabeledBasis& codomain() const { return *codomain_; }
  const BasisPtr& domain_ptr() const { return domain_; }
  const BasisPtr& codomain_ptr() const { return codomain_; }

  const SparseVec& column(int j) const { return cols_.at(j); }
  void set_column(int j, SparseVec v);
  void set_column(const std::string& domain_label, SparseVec v);
  void add_entry(const std::string& domain_label,
                 const std::string& codomain_label, const Coeff& c);

  SparseVec apply(const SparseVec& v) const;
  bool is_zero() const;
  bool operator==(const LinearMap& o) const;

 private:
  Field field_;
  BasisPtr domain_, codomain_;
  std::vector<SparseVec> cols_;
};

// f after g (i.e. f(g(x))); requires codomain(g) == domain(f).
LinearMap compose(const LinearMap& f, const LinearMap& g);
LinearMap map_add(const LinearMap& f, const LinearMap& g);
LinearMap map_sub(const LinearMap& f, const LinearMap& g);
// Stack maps sharing a domain into one map with concatenated codomain.
LinearMap stack(const std::vector<const LinearMap*>& maps);

// Reduced row echelon span of vectors inside a fixed ambient dimension.
// Rows are kept sorted by pivot column; deterministic for a given insertion
// set (the span is canonical, the reduced echelon basis is unique).
class Subspace {
 public:
  Subspace(Field field, int ambient_dim);
  static Subspace span(const Field& f, int ambient_dim,
                       const std::vector<SparseVec>& vectors);
  static Subspace full(const Field& f, int ambient_dim);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseVec>& rows() const { return rows_; }

  // Residual of v after reduction against the rows; zero iff v is in the span.
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  bool contains(const Subspace& other) const;
  // Coordinates of v over rows(); nullopt if v is outside the span.
  std::optional<std::vector<Coeff>> coords(const SparseVec& v) const;

  // Inserts v if independent; returns true if the dimension grew.
  bool insert(const SparseVec& v);

  Subspace intersect(const Subspace& other) const;

  bool operator==(const Subspace& o) const;

 private:
  Field field_;
  int ambient_;
  std::vector<SparseVec> rows_;   // reduced echelon, pivots increasing
  std::vector<int> pivots_;
};

unsigned rank(const LinearMap& f);
// Echelonized spanning set of ker f, as vectors over the domain.
std::vector<SparseVec> kernel_basis(const LinearMap& f);
Subspace kernel(const LinearMap& f);
Subspace image(const LinearMap& f);

// Intersection of subspaces of one ambient space (empty list = full space).
Subspace intersect_all(const Field& f, int ambient_dim,
                       const std::vector<Subspace>& subspaces);

// dim ker(d_out) - rank(d_in); requires d_out . d_in == 0 (checked).
unsigned homology_dims(const LinearMap& d_in, const LinearMap& d_out);

// Matrix of f restricted to sub (columns) expressed in the codomain
// subspace coordinates; throws if the image escapes `target`.
// Columns are indexed by sub.rows(), rows by target.rows().
std::vector<SparseVec> restrict_map(const LinearMap& f, const Subspace& sub,
                                    const Subspace& target);

}  // namespace aq
