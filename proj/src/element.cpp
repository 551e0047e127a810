#include "aq/element.hpp"

namespace aq {

AlgebraElement AlgebraElement::single(const Field& f, Monomial m, Coeff c) {
  AlgebraElement e(f);
  e.add_term(std::move(m), c);
  return e;
}

int AlgebraElement::depth() const {
  if (terms_.empty()) throw TermError("depth() of zero element");
  return terms_.begin()->first.depth();
}

void AlgebraElement::add_term(Monomial m, const Coeff& c) {
  Coeff r = field_.reduce(c);
  if (r == 0) return;
  if (!terms_.empty() && terms_.begin()->first.depth() != m.depth())
    throw TermError("mixed depths in one element");
  auto [it, fresh] = terms_.emplace(std::move(m), r);
  if (!fresh) {
    it->second = field_.add(it->second, r);
    if (it->second == 0) terms_.erase(it);
  }
}

void AlgebraElement::add(const AlgebraElement& other, const Coeff& scale) {
  for (auto& [m, c] : other.terms_) add_term(m, field_.mul(c, scale));
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.is_zero() || b.is_zero()) return AlgebraElement(a.field());
  if (a.depth() != b.depth()) throw TermError("multiply: depth mismatch");
  if (a.depth() < 1)
    throw TermError("multiply: bare generators multiply via the base algebra");
  AlgebraElement out(a.field());
  for (auto& [ma, ca] : a.terms()) {
    for (auto& [mb, cb] : b.terms()) {
      std::vector<Monomial> kids = ma.children();
      for (auto& k : mb.children()) kids.push_back(k);
      out.add_term(Monomial::node(std::move(kids)), a.field().mul(ca, cb));
    }
  }
  return out;
}

namespace {

// Multilinear expansion of per-child images into node monomials.
void expand_children(const Field& F, const std::vector<MonoImage>& images,
                     size_t idx, std::vector<Monomial>& acc, const Coeff& coeff,
                     MonoImage& out) {
  if (idx == images.size()) {
    auto kids = acc;
    out.emplace_back(Monomial::node(std::move(kids)), coeff);
    return;
  }
  for (auto& [m, c] : images[idx]) {
    acc.push_back(m);
    expand_children(F, images, idx + 1, acc, F.mul(coeff, c), out);
    acc.pop_back();
  }
}

MonoImage collapse_mono(const Field& F, const Monomial& m, int layer,
                        const LeafAlgebra* base) {
  if (layer < 0 || layer > m.depth() - 1) throw TermError("counit layer out of range");
  if (layer == m.depth() - 1) {
    // multiply out the root multiset in the layer below
    if (layer >= 1) {
      std::vector<Monomial> merged;
      for (auto& kid : m.children())
        for (auto& g : kid.children()) merged.push_back(g);
      return {{Monomial::node(std::move(merged)), Coeff(1)}};
    }
    // innermost layer: fold the base multiplication over the generators
    if (!base || !base->mul)
      throw TermError("counit at layer 0 requires the base multiplication");
    MonoImage acc = {{m.children().front(), Coeff(1)}};
    for (size_t k = 1; k < m.children().size(); ++k) {
      MonoImage next;
      for (auto& [g, c] : acc)
        for (auto& [h, d] : base->mul(g, m.children()[k]))
          next.emplace_back(h, F.mul(c, d));
      acc = std::move(next);
      if (acc.empty()) break;
    }
    return acc;
  }
  // recurse below the root
  std::vector<MonoImage> images;
  images.reserve(m.children().size());
  for (auto& kid : m.children()) {
    images.push_back(collapse_mono(F, kid, layer, base));
    if (images.back().empty()) return {};
  }
  MonoImage out;
  std::vector<Monomial> acc;
  expand_children(F, images, 0, acc, Coeff(1), out);
  return out;
}

Monomial comult_mono(const Monomial& m, int layer) {
  if (layer < 0 || layer > m.depth() - 1) throw TermError("comult layer out of range");
  if (layer == m.depth() - 1) {
    std::vector<Monomial> kids;
    kids.reserve(m.children().size());
    for (auto& kid : m.children()) kids.push_back(Monomial::node({kid}));
    return Monomial::node(std::move(kids));
  }
  std::vector<Monomial> kids;
  kids.reserve(m.children().size());
  for (auto& kid : m.children()) kids.push_back(comult_mono(kid, layer));
  return Monomial::node(std::move(kids));
}

MonoImage map_mono_at_depth(const Field& F, const Monomial& m, int cut,
                            const std::function<MonoImage(const Monomial&)>& f) {
  if (m.depth() == cut) return f(m);
  if (m.depth() < cut) throw TermError("map_at_depth: cut exceeds depth");
  std::vector<MonoImage> images;
  images.reserve(m.children().size());
  for (auto& kid : m.children()) {
    images.push_back(map_mono_at_depth(F, kid, cut, f));
    if (images.back().empty()) return {};
  }
  MonoImage out;
  std::vector<Monomial> acc;
  expand_children(F, images, 0, acc, Coeff(1), out);
  return out;
}

}  // namespace

AlgebraElement counit_layer(const AlgebraElement& x, int layer,
                            const LeafAlgebra* base) {
  AlgebraElement out(x.field());
  for (auto& [m, c] : x.terms())
    for (auto& [im, d] : collapse_mono(x.field(), m, layer, base))
      out.add_term(im, x.field().mul(c, d));
  return out;
}

AlgebraElement comult_layer(const AlgebraElement& x, int layer) {
  AlgebraElement out(x.field());
  for (auto& [m, c] : x.terms()) out.add_term(comult_mono(m, layer), c);
  return out;
}

AlgebraElement eta_indecomposables(const AlgebraElement& x) {
  AlgebraElement out(x.field());
  for (auto& [m, c] : x.terms()) {
    if (m.depth() < 1) throw TermError("eta on depth-0 element");
    if (m.top_size() == 1) out.add_term(m, c);
  }
  return out;
}

AlgebraElement map_at_depth(const AlgebraElement& x, int cut,
                            const std::function<MonoImage(const Monomial&)>& f) {
  AlgebraElement out(x.field());
  for (auto& [m, c] : x.terms()) {
    if (m.depth() == cut) {
      for (auto& [im, d] : f(m)) out.add_term(im, x.field().mul(c, d));
    } else {
      for (auto& [im, d] : map_mono_at_depth(x.field(), m, cut, f))
        out.add_term(im, x.field().mul(c, d));
    }
  }
  return out;
}

LinearMap diagonal_operator(const LinearMap& phi_a, const LinearMap& phi_b,
                            const LinearMap& fm, const LinearMap& gm) {
  LinearMap left = compose(gm, phi_a);
  LinearMap right = compose(phi_b, fm);
  if (!(left == right))
    throw NaturalityError("naturality square does not commute");
  return left;
}

}  // namespace aq
