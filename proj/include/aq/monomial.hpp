#pragma once

#include <compare>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace aq {

struct TermError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Algebra generator: an opaque symbol with a simplicial degree and a weight.
struct Generator {
  std::string symbol;
  int degree = 0;
  int weight = 1;
};

// Iterated monomial: a depth-d tree of nested nonempty multisets whose
// leaves are generator symbols.  Always held in canonical form: every
// multiset is a sequence sorted under the global total order (depth first,
// then rendered form).  The rendered form, e.g. "{{x0},{x0,x1}}", doubles
// as the basis label.
class Monomial {
 public:
  static Monomial leaf(std::string symbol, int weight);
  // Canonicalizes (sorts) the children; they must be nonempty and share a depth.
  static Monomial node(std::vector<Monomial> children);

  int depth() const { return depth_; }
  int weight() const { return weight_; }
  bool is_leaf() const { return depth_ == 0; }
  const std::string& symbol() const;               // leaf only
  const std::vector<Monomial>& children() const;   // depth >= 1 only
  const std::string& render() const { return render_; }

  // Root multiset size; 1 for a leaf.
  int top_size() const { return depth_ == 0 ? 1 : static_cast<int>(kids_.size()); }

  std::strong_ordering operator<=>(const Monomial& o) const;
  bool operator==(const Monomial& o) const { return render_ == o.render_; }

  // Parses the canonical text grammar; leaf weights via the lookup.
  static Monomial parse(const std::string& text,
                        const std::function<int(const std::string&)>& leaf_weight);

 private:
  Monomial() = default;
  int depth_ = 0;
  int weight_ = 0;
  std::string symbol_;
  std::vector<Monomial> kids_;
  std::string render_;
};

}  // namespace aq
