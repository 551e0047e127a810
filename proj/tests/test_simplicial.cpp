#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "aq/fixtures.hpp"
#include "aq/schema.hpp"

#include <sstream>

using namespace aq;

namespace {
const Field Q = Field::rationals();

// binomial oracle for counting monotone surjections [m] -> [n]
long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}
}  // namespace

TEST_CASE("K(k,n) levels count monotone surjections") {
  for (int n = 0; n <= 3; ++n) {
    SimplicialAlgebra K = make_K(Q, n, 4, 2);
    for (int m = 0; m <= 4; ++m) {
      long expected = binom(m, n);  // surjections [m] -> [n] = C(m, n)
      CHECK(static_cast<long>(K.generators(m).size()) == expected);
    }
  }
}

TEST_CASE("fixtures validate cleanly") {
  for (int n = 0; n <= 3; ++n) {
    SimplicialAlgebra K = make_K(Q, n, 4, 3);
    CAPTURE(n);
    CHECK(K.validate().empty());
  }
  CHECK(make_free_one(Q, 3, 3).validate().empty());
  CHECK(make_free_two(Q, 3, 4).validate().empty());
  CHECK(make_free_one(Field::prime(2), 3, 3).validate().empty());
}

TEST_CASE("mutated fixture is rejected with the violated identity named") {
  SimplicialAlgebra bad = make_mutated_K2(Q, 4, 2);
  auto report = bad.validate();
  REQUIRE_FALSE(report.empty());
  bool found = false;
  for (auto& issue : report)
    if (issue.check.find("d_1 d_3 = d_2 d_1") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("homotopy groups of K(k,n) are one-dimensional in degree n") {
  for (int n = 0; n <= 3; ++n) {
    SimplicialAlgebra K = make_K(Q, n, 4, 2);
    PiTable pi = homotopy_groups(K.blocks(), 3, 2);
    for (auto& [key, dim] : pi) {
      CAPTURE(n);
      CAPTURE(key.first);
      CAPTURE(key.second);
      CHECK(dim == ((key.first == n && key.second == 1) ? 1 : 0));
    }
  }
  // same over F_2
  SimplicialAlgebra K2 = make_K(Field::prime(2), 2, 4, 1);
  CHECK(pi_dim(K2.blocks(), 2, 1) == 1);
  CHECK(pi_dim(K2.blocks(), 1, 1) == 0);
}

TEST_CASE("direct sums add homotopy") {
  SimplicialAlgebra A = make_K(Q, 1, 3, 2);
  SimplicialAlgebra B = make_K(Q, 2, 3, 2);
  SimplicialAlgebra S = direct_sum(A, B);
  CHECK(S.validate().empty());
  CHECK(pi_dim(S.blocks(), 1, 1) == 1);
  CHECK(pi_dim(S.blocks(), 2, 1) == 1);
  CHECK(pi_dim(S.blocks(), 0, 1) == 0);
}

TEST_CASE("connectivity convention") {
  CHECK(is_connected(make_K(Q, 1, 3, 2)));
  CHECK(is_connected(make_free_one(Q, 3, 3)));
  CHECK_FALSE(is_connected(make_K(Q, 0, 3, 2)));  // pi_0 = k
}

TEST_CASE("truncation refusal") {
  SimplicialAlgebra K = make_K(Q, 1, 2, 2);
  CHECK_THROWS_AS(homotopy_groups(K.blocks(), 2, 2), TruncationError);
  CHECK_NOTHROW(homotopy_groups(K.blocks(), 1, 2));
}

TEST_CASE("ungraded algebras are rejected by the block presentation") {
  SimplicialAlgebra X(Q, 1, 2);
  X.add_generator(0, "a", 1);
  X.add_generator(1, "b", 2);
  X.set_face(0, 1, "b", {{"a", Coeff(1)}});  // weight 2 -> weight 1
  X.set_face(1, 1, "b", {{"a", Coeff(1)}});
  std::string why;
  CHECK_FALSE(X.is_weight_graded(&why));
  CHECK_FALSE(why.empty());
  CHECK_THROWS_AS(X.blocks(), TruncationError);
}

TEST_CASE("homotopy checker accepts h = 0 between zero maps") {
  SimplicialAlgebra K = make_K(Q, 1, 3, 2);
  const BlockSpace& V = K.blocks();
  HomotopyFamily h;
  BlockMap f, g;
  for (int q = 0; q <= 2; ++q)
    for (int w = 0; w <= 2; ++w) {
      f.emplace(BlockKey{q, w}, LinearMap(Q, V.block(q, w), V.block(q, w)));
      g.emplace(BlockKey{q, w}, LinearMap(Q, V.block(q, w), V.block(q, w)));
      for (int j = 0; j <= q; ++j)
        h.maps.emplace(std::make_tuple(j, q, w),
                       LinearMap(Q, V.block(q, w), V.block(q + 1, w)));
    }
  CHECK(check_simplicial_homotopy(V, V, h, f, g, 1, 2).empty());
}

TEST_CASE("induced maps on homology see nonzero classes") {
  SimplicialAlgebra K = make_K(Q, 1, 3, 2);
  const BlockSpace& V = K.blocks();
  HomologyBlock h(V, 1, 1);
  REQUIRE(h.dim() == 1);
  LinearMap id = LinearMap::identity(Q, V.block(1, 1));
  auto cols = induced_on_homology(h, h, id);
  REQUIRE(cols.size() == 1);
  CHECK(cols[0] == SparseVec{{0, Coeff(1)}});
  // doubling a representative doubles the class
  LinearMap twice = map_add(id, id);
  CHECK(induced_on_homology(h, h, twice)[0] == SparseVec{{0, Coeff(2)}});
  // the zero map induces zero
  LinearMap zero(Q, V.block(1, 1), V.block(1, 1));
  CHECK(induced_on_homology(h, h, zero)[0].empty());
}

TEST_CASE("tracked span solves over its generators") {
  TrackedSpan sp(Q, 3);
  CHECK(sp.insert({{0, Coeff(1)}, {1, Coeff(1)}}, 7));
  CHECK(sp.insert({{1, Coeff(1)}}, 8));
  CHECK_FALSE(sp.insert({{0, Coeff(2)}, {1, Coeff(2)}}, 9));
  auto sol = sp.solve({{0, Coeff(3)}, {1, Coeff(5)}});
  REQUIRE(sol.has_value());
  // 3*(e0+e1) + 2*e1
  SparseVec want = {{7, Coeff(3)}, {8, Coeff(2)}};
  CHECK(*sol == want);
  CHECK_FALSE(sp.solve({{2, Coeff(1)}}).has_value());
}

TEST_CASE("schema round trip and line-precise errors") {
  SimplicialAlgebra K = make_K(Q, 2, 3, 2, 1, "e");
  std::string text = SchemaWriter::serialize(K);
  SimplicialAlgebra K2 = parse_algebra_text(text);
  CHECK(K2.fingerprint() == K.fingerprint());
  CHECK(SchemaWriter::serialize(K2) == text);

  // fractions and multi-term combinations survive a round trip
  std::string custom =
      "field q\n"
      "truncation 1 2\n"
      "name t\n"
      "gen 0 a 1\n"
      "gen 1 b 1\n"
      "gen 1 c 1\n"
      "face 0 1 b = 1/2*a\n"
      "face 1 1 b = -3/2*a + a\n"
      "deg 0 0 a = b + c\n";
  SimplicialAlgebra T = parse_algebra_text(custom);
  CHECK(T.face_of(0, 1, "b") == LinComb{{"a", Coeff(1, 2)}});
  CHECK(T.face_of(1, 1, "b") == LinComb{{"a", Coeff(-1, 2)}});
  CHECK(parse_algebra_text(SchemaWriter::serialize(T)).fingerprint() ==
        T.fingerprint());

  try {
    parse_algebra_text("field q\ntruncation 1 1\ngen 0 a 1\nface 0 1 zz = a\n");
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    CHECK(e.line == 4);
  }
  CHECK_THROWS_AS(parse_algebra_text("field nonsense\n"), SchemaError);
  CHECK_THROWS_AS(parse_algebra_text("gen 0 a 1\n"), SchemaError);  // no field/truncation first
}

TEST_CASE("block export lists every block label once") {
  SimplicialAlgebra K = make_K(Q, 1, 2, 2);
  std::string text = SchemaWriter::serialize_blocks(K.blocks(), "blocks");
  // every generator label appears
  for (int m = 0; m <= 2; ++m)
    for (auto& g : K.generators(m))
      CHECK(text.find(" " + g.symbol + " ") != std::string::npos);
  CHECK(text.find("mul") == std::string::npos);
}

TEST_CASE("validate_blocks catches degeneracy collapse") {
  // one generator in degrees 0 and 1, s_0 sends a to 0: not injective
  BlockSpace V(Q, 1, 1);
  V.set_block(0, 1, make_basis({"a"}));
  V.set_block(1, 1, make_basis({"b"}));
  V.set_face(0, 1, 1, LinearMap(Q, V.block(1, 1), V.block(0, 1)));
  V.set_face(1, 1, 1, LinearMap(Q, V.block(1, 1), V.block(0, 1)));
  V.set_degen(0, 0, 1, LinearMap(Q, V.block(0, 1), V.block(1, 1)));
  auto rep = validate_blocks(V);
  bool saw_injectivity = false, saw_identity = false;
  for (auto& issue : rep) {
    if (issue.check.find("injective") != std::string::npos) saw_injectivity = true;
    if (issue.check.find("d_") != std::string::npos) saw_identity = true;
  }
  CHECK(saw_injectivity);
  CHECK(saw_identity);  // d_0 s_0 = id fails too
}
