#pragma once

#include "aq/field.hpp"
#include "aq/linmap.hpp"
#include "aq/monomial.hpp"

#include <map>

namespace aq {

// Linear combination of monomials (all of one depth and simplicial degree).
class AlgebraElement {
 public:
  explicit AlgebraElement(Field field) : field_(field) {}
  static AlgebraElement single(const Field& f, Monomial m, Coeff c = Coeff(1));

  const Field& field() const { return field_; }
  const std::map<Monomial, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int depth() const;  // throws on zero element

  void add_term(Monomial m, const Coeff& c);
  void add(const AlgebraElement& other, const Coeff& scale = Coeff(1));

  bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }

 private:
  Field field_;
  std::map<Monomial, Coeff> terms_;
};

// Result of evaluating an operator on one monomial.
using MonoImage = std::vector<std::pair<Monomial, Coeff>>;

// Multiplication of the underlying algebra level, needed when a counit
// reaches the innermost layer.  Product of two generators as a combination
// of generators; empty result means the product is zero.
struct LeafAlgebra {
  std::function<MonoImage(const Monomial&, const Monomial&)> mul;
};

// Free commutative product: top-layer multiset union, bilinear.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

// Counit at `layer` (0 = innermost): multiplies out each multiset at that
// layer in the layer below.  Layer 0 needs the base multiplication.
AlgebraElement counit_layer(const AlgebraElement& x, int layer,
                            const LeafAlgebra* base = nullptr);

// Comultiplication at `layer`: each multiset {m1,...,mk} at that layer
// becomes {{m1},...,{mk}}.
AlgebraElement comult_layer(const AlgebraElement& x, int layer);

// Natural surjection onto indecomposables: kills terms whose top multiset
// has size >= 2.
AlgebraElement eta_indecomposables(const AlgebraElement& x);

// Applies f to every depth-`cut` subtree, extending multilinearly through
// the layers above.  cut = 0 maps the leaves (the action of T^d on a map).
AlgebraElement map_at_depth(const AlgebraElement& x, int cut,
                            const std::function<MonoImage(const Monomial&)>& f);

struct NaturalityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// [Phi] m: the diagonal composite G(m) . Phi_A of a naturality square,
// asserted equal to Phi_B . F(m).
LinearMap diagonal_operator(const LinearMap& phi_a, const LinearMap& phi_b,
                            const LinearMap& fm, const LinearMap& gm);

}  // namespace aq
