#pragma once

#include "aq/element.hpp"
#include "aq/linmap.hpp"
#include "aq/monomial.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace aq {

struct BlockKey {
  int n = 0;  // simplicial degree
  int w = 0;  // weight
  auto operator<=>(const BlockKey&) const = default;
};

// Weight-graded simplicial vector space presented by explicit finite blocks.
// Absent blocks are zero.  All structure maps preserve weight, so faces and
// degeneracies are stored per (i, n, w).
class BlockSpace {
 public:
  BlockSpace(Field field, int max_degree, int max_weight);

  const Field& field() const { return field_; }
  int max_degree() const { return N_; }
  int max_weight() const { return W_; }

  void set_block(int n, int w, BasisPtr basis);
  void set_face(int i, int n, int w, LinearMap m);
  void set_degen(int i, int n, int w, LinearMap m);

  BasisPtr block(int n, int w) const;  // empty basis if absent
  int dim(int n, int w) const;
  int level_dim(int n) const;
  const LinearMap& face(int i, int n, int w) const;
  const LinearMap& degen(int i, int n, int w) const;
  bool has_face(int i, int n, int w) const;

 private:
  Field field_;
  int N_, W_;
  std::map<BlockKey, BasisPtr> blocks_;
  mutable std::map<std::tuple<int, int, int>, LinearMap> faces_, degens_;
  BasisPtr empty_;
  const LinearMap& zero_map(std::map<std::tuple<int, int, int>, LinearMap>& store,
                            int i, int n, int w, bool is_face) const;
};

// Simplicial map between block spaces, one linear map per block.
using BlockMap = std::map<BlockKey, LinearMap>;

struct ValidationIssue {
  std::string check;    // the violated identity, e.g. "d_i d_j = d_{j-1} d_i"
  std::string witness;  // where it fails
};
using ValidationReport = std::vector<ValidationIssue>;

// Checks the simplicial identities on all blocks within truncation, plus
// injectivity of degeneracies.
ValidationReport validate_blocks(const BlockSpace& V);

// Moore (normalized) complex machinery.  Convention: the chain space in
// degree q is the intersection of ker d_i for 1 <= i <= q, the differential
// is d_0 restricted.
Subspace moore_chain(const BlockSpace& V, int q, int w);

struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// (q, w) -> dimension table of homotopy groups; requires q_max + 1 <= N.
using PiTable = std::map<std::pair<int, int>, int>;
PiTable homotopy_groups(const BlockSpace& V, int q_max, int w_max);
int pi_dim(const BlockSpace& V, int q, int w);

bool is_connected(const BlockSpace& V);

// Echelon span with coordinate tracking over the inserted generators.
class TrackedSpan {
 public:
  TrackedSpan(Field f, int ambient) : field_(f), ambient_(ambient) {}
  bool insert(const SparseVec& v, int tag);
  // coordinates of v over the inserted tags; nullopt if outside the span
  std::optional<SparseVec> solve(const SparseVec& v) const;
  int dim() const { return static_cast<int>(rows_.size()); }

 private:
  Field field_;
  int ambient_;
  std::vector<SparseVec> rows_, combos_;
  std::vector<int> pivots_;
};

// Homology of the Moore complex at (q, w) with representatives, supporting
// induced maps on homotopy groups.
class HomologyBlock {
 public:
  HomologyBlock(const BlockSpace& V, int q, int w);

  int dim() const { return static_cast<int>(reps_.size()); }
  const std::vector<SparseVec>& reps() const { return reps_; }  // block coords
  const Subspace& cycles() const { return cycles_; }
  const Subspace& boundaries() const { return boundaries_; }
  // class of a cycle, in rep coordinates; nullopt if v is not a cycle
  std::optional<SparseVec> cls(const SparseVec& v) const;

 private:
  Subspace cycles_, boundaries_;
  std::vector<SparseVec> reps_;
  TrackedSpan span_;
};

// Matrix (columns over source reps, rows over target reps) of the map
// induced on homology by a block map f at (q, w).  Checks that f maps
// cycles to cycles and boundaries to boundaries.
std::vector<SparseVec> induced_on_homology(const HomologyBlock& src,
                                           const HomologyBlock& dst,
                                           const LinearMap& f_block);

// Simplicial homotopy checker: verifies the five identity families and the
// boundary conditions d_0 h_0 = f, d_{q+1} h_q = g, all as exact equalities
// of block maps.  h maps are indexed by (j, q) and act per weight block.
struct HomotopyFamily {
  // (j, q, w) -> LinearMap from K-block (q, w) to L-block (q+1, w)
  std::map<std::tuple<int, int, int>, LinearMap> maps;
};
ValidationReport check_simplicial_homotopy(const BlockSpace& K,
                                           const BlockSpace& L,
                                           const HomotopyFamily& h,
                                           const BlockMap& f, const BlockMap& g,
                                           int q_max, int w_max);

// ---------------------------------------------------------------------------

using LinComb = std::vector<std::pair<std::string, Coeff>>;

// Weight-graded simplicial algebra given by generators, label-level
// structure maps and a multiplication table.  Absent entries are zero.
class SimplicialAlgebra {
 public:
  SimplicialAlgebra(Field field, int max_degree, int max_weight,
                    std::string name = "");

  const Field& field() const { return field_; }
  int max_degree() const { return N_; }
  int max_weight() const { return W_; }
  const std::string& name() const { return name_; }

  void add_generator(int degree, const std::string& symbol, int weight);
  void set_face(int i, int n, const std::string& src, LinComb img);
  void set_degen(int i, int n, const std::string& src, LinComb img);
  void set_mult(int n, const std::string& a, const std::string& b, LinComb img);

  const std::vector<Generator>& generators(int n) const;
  std::optional<int> weight_of(int n, const std::string& label) const;
  LinComb face_of(int i, int n, const std::string& label) const;
  LinComb degen_of(int i, int n, const std::string& label) const;
  LinComb mult_of(int n, const std::string& a, const std::string& b) const;
  bool has_mult() const { return !mult_.empty(); }

  // Weight-gradedness: every structure map preserves weight and the
  // multiplication is weight-additive.
  bool is_weight_graded(std::string* why = nullptr) const;

  // Block presentation (throws TruncationError if not weight-graded).
  const BlockSpace& blocks() const;

  // Full validation: simplicial identities, algebra-map property of the
  // structure maps, commutativity/associativity, weight additivity.
  ValidationReport validate() const;

  // The level-n multiplication as a LeafAlgebra for layer-0 counits.
  LeafAlgebra leaf_algebra(int n) const;
  // Level-n weight-w basis as leaf monomials.
  std::vector<Monomial> leaf_monomials(int n, int w) const;

  std::string fingerprint() const;  // stable content hash for reports

 private:
  Field field_;
  int N_, W_;
  std::string name_;
  std::map<int, std::vector<Generator>> gens_;
  std::map<std::pair<int, int>, std::map<std::string, LinComb>> face_, degen_;
  std::map<int, std::map<std::pair<std::string, std::string>, LinComb>> mult_;
  mutable std::optional<BlockSpace> blocks_;
  mutable std::optional<std::pair<bool, std::string>> graded_;

  friend class SchemaWriter;
};

// π_q criterion for connectivity, per the non-unital convention π_0 = 0.
bool is_connected(const SimplicialAlgebra& X);

}  // namespace aq
