#pragma once

#include "aq/element.hpp"

#include <string>
#include <vector>

namespace aq {

// One layer operation of the simplicial endofunctor 𝔟: the counit-at-layer
// face D(i, q) (depth q+1 -> q, multiplying out layer q-i) or the
// comultiplication degeneracy S(i, q) (depth q+1 -> q+2, splitting layer q-i).
struct LayerOp {
  bool is_counit;
  int i;
  int q;
  bool operator==(const LayerOp&) const = default;
};

struct OpError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Composite word of layer operations, applied front-to-back.  Two words are
// equal as natural transformations iff they have the same source/target
// levels and induce the same monotone map in the simplex category; that map
// is the normal form.
class OpWord {
 public:
  OpWord() = default;
  explicit OpWord(std::vector<LayerOp> ops) : ops_(std::move(ops)) {}

  void push(LayerOp op) { ops_.push_back(op); }
  const std::vector<LayerOp>& ops() const { return ops_; }

  // level the word starts at / ends at; checks internal consistency
  int source_level() const;
  int target_level() const;

  // induced monotone map [target] -> [source], as its value sequence;
  // throws OpError on inconsistent levels
  std::vector<int> normal_form() const;

  // apply to an element of depth source_level()+1; `base` is needed when a
  // counit reaches layer 0
  AlgebraElement apply(const AlgebraElement& x, const LeafAlgebra* base = nullptr) const;

  std::string str() const;

  bool same_transformation(const OpWord& other) const;

 private:
  std::vector<LayerOp> ops_;
};

// faces correspond to cofaces delta_i, degeneracies to codegeneracies sigma_i
std::vector<int> coface(int i, int m);        // [m] -> [m+1], skips i
std::vector<int> codegeneracy(int i, int m);  // [m] -> [m-1], repeats i

}  // namespace aq
