#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "aq/bar.hpp"
#include "aq/fixtures.hpp"

#include <vector>

using namespace aq;

namespace {
const Field Q = Field::rationals();

// Independent counting oracle for the bar basis: trees of the given depth
// over the level generators, counted by weight via the multiset generating
// function, never constructing a single monomial.
std::vector<long> tree_counts(const SimplicialAlgebra& X, int n, int depth) {
  int W = X.max_weight();
  std::vector<long> cur(W + 1, 0);
  for (auto& g : X.generators(n))
    if (g.weight <= W) ++cur[g.weight];
  auto choose = [](long k, long m) {  // C(k+m-1, m): multisets of size m from k kinds
    long r = 1;
    for (long i = 1; i <= m; ++i) r = r * (k + i - 1) / i;
    return r;
  };
  for (int d = 1; d <= depth; ++d) {
    std::vector<long> next(W + 1, 0);
    next[0] = 1;  // empty multiset; removed at the end of each round
    for (int v = 1; v <= W; ++v) {
      if (cur[v] == 0) continue;
      std::vector<long> acc(W + 1, 0);
      for (int w = 0; w <= W; ++w)
        for (long m = 0; m * v + w <= W; ++m)
          acc[w + m * v] += next[w] * choose(cur[v], m);
      next = std::move(acc);
    }
    next[0] = 0;  // multisets are nonempty
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

TEST_CASE("bar basis dimensions match the counting oracle") {
  SimplicialAlgebra X = make_free_one(Q, 3, 4);
  for (int r = 1; r <= 2; ++r) {
    BarObject bar(X, r);
    for (int n = 0; n <= 2; ++n) {
      auto counts = tree_counts(X, n, bar.depth_at(n));
      for (int w = 0; w <= 4; ++w) {
        CAPTURE(r);
        CAPTURE(n);
        CAPTURE(w);
        CHECK(static_cast<long>(bar.basis(n, w).size()) == counts[w]);
      }
    }
  }
  SimplicialAlgebra K = make_K(Q, 2, 3, 3);
  BarObject bK(K, 1);
  for (int n = 0; n <= 3; ++n) {
    auto counts = tree_counts(K, n, bK.depth_at(n));
    for (int w = 0; w <= 3; ++w)
      CHECK(static_cast<long>(bK.basis(n, w).size()) == counts[w]);
  }
}

TEST_CASE("basis cap raises a resource error") {
  SimplicialAlgebra X = make_free_one(Q, 3, 4);
  BarObject small(X, 2, 5);
  CHECK_THROWS_AS(small.basis(2, 4), ResourceError);
}

TEST_CASE("bar constructions are simplicial") {
  for (Field F : {Field::rationals(), Field::prime(2)}) {
    SimplicialAlgebra X = make_free_one(F, 3, 3);
    CHECK(validate_blocks(BarObject(X, 1).blocks()).empty());
    CHECK(validate_blocks(BarObject(X, 2).blocks()).empty());
  }
  SimplicialAlgebra K = make_K(Q, 1, 3, 3);
  CHECK(validate_blocks(BarObject(K, 1).blocks()).empty());
  CHECK(validate_blocks(BarObject(K, 2).blocks()).empty());
}

TEST_CASE("augmentation examples") {
  SimplicialAlgebra X = make_free_one(Q, 2, 3);
  LeafAlgebra base = X.leaf_algebra(1);
  auto gen = [&](const std::string& s, int w) {
    return AlgebraElement::single(Q, Monomial::leaf(s, w));
  };
  std::string x0;  // the weight-1 level-1 generator
  for (auto& g : X.generators(1))
    if (g.weight == 1) x0 = g.symbol;
  REQUIRE_FALSE(x0.empty());

  // eps({x}) = x
  AlgebraElement singleton = AlgebraElement::single(
      Q, Monomial::node({Monomial::leaf(x0, 1)}));
  CHECK(augmentation_word(0).apply(singleton, &base) == gen(x0, 1));

  // eps({x,x}) = x*x = x.x (the free square)
  AlgebraElement sq = AlgebraElement::single(
      Q, Monomial::node({Monomial::leaf(x0, 1), Monomial::leaf(x0, 1)}));
  AlgebraElement prod = augmentation_word(0).apply(sq, &base);
  REQUIRE_FALSE(prod.is_zero());
  CHECK(prod.terms().begin()->first.symbol() == x0 + "." + x0);

  // over the zero-multiplication fixture the same square dies
  SimplicialAlgebra K = make_K(Q, 1, 2, 3);
  LeafAlgebra kbase = K.leaf_algebra(1);
  std::string e = K.generators(1)[0].symbol;
  AlgebraElement ksq = AlgebraElement::single(
      Q, Monomial::node({Monomial::leaf(e, 1), Monomial::leaf(e, 1)}));
  CHECK(augmentation_word(0).apply(ksq, &kbase).is_zero());
}

TEST_CASE("augmentation is a simplicial map") {
  SimplicialAlgebra X = make_free_one(Q, 3, 3);
  BarObject bar(X, 1);
  const BlockSpace& B = bar.blocks();
  const BlockSpace& V = X.blocks();
  BlockMap eps = augmentation_blocks(bar, 3, 3);
  for (int q = 1; q <= 3; ++q)
    for (int w = 0; w <= 3; ++w)
      for (int i = 0; i <= q; ++i) {
        CAPTURE(q);
        CAPTURE(w);
        CAPTURE(i);
        CHECK(compose(V.face(i, q, w), eps.at({q, w})) ==
              compose(eps.at({q - 1, w}), B.face(i, q, w)));
      }
}

TEST_CASE("fused word normal forms and boundary words") {
  SimplicialAlgebra X = make_free_one(Q, 3, 2);
  BarObject b2X(X, 2);
  for (int q = 0; q <= 2; ++q) {
    for (int i = 0; i <= q; ++i) {
      OpWord alt({{true, q + 1 + i, 2 * q + 1}, {true, i, 2 * q}});
      CHECK(b2X.face_word(i, q).same_transformation(alt));
    }
    // boundary layer identities
    BarObject bX(X, 1);
    OpWord d0h0 = homotopy_word(0, q);
    OpWord face0 = bX.face_word(0, q + 1);
    for (auto& op : face0.ops()) d0h0.push(op);
    CHECK(d0h0.same_transformation(eps_outer_word(q)));
    OpWord dqh = homotopy_word(q, q);
    OpWord face_top = bX.face_word(q + 1, q + 1);
    for (auto& op : face_top.ops()) dqh.push(op);
    CHECK(dqh.same_transformation(eps_inner_word(q)));
  }
}

TEST_CASE("appendix homotopy verifies on both fixture families and fields") {
  CHECK(verify_appendix(make_K(Q, 1, 3, 2), 2, 2).empty());
  CHECK(verify_appendix(make_free_one(Q, 3, 3), 2, 3).empty());
  CHECK(verify_appendix(make_free_one(Field::prime(2), 3, 3), 2, 3).empty());
}

TEST_CASE("a perturbed homotopy is rejected with named identities") {
  auto rep = verify_appendix_perturbed(make_free_one(Q, 3, 3), 2, 2);
  REQUIRE_FALSE(rep.empty());
  bool named = false;
  for (auto& issue : rep)
    if (!issue.check.empty()) named = true;
  CHECK(named);
}

TEST_CASE("weight-1 part of the bar construction is a quasi-isomorphism") {
  // in weight 1 nothing is decomposable, so eps: bX -> X is an iso on pi
  SimplicialAlgebra X = make_free_one(Q, 3, 3);
  BarObject bar(X, 1);
  PiTable a = homotopy_groups(bar.blocks(), 2, 1);
  PiTable b = homotopy_groups(X.blocks(), 2, 1);
  CHECK(a == b);
}
