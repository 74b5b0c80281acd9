#include "doctest.h"

#include "abcat/algebra.hpp"

using namespace abcat;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const Scalar ONE = Scalar::one(Q);

Algebra::Ptr field_algebra() {
  std::vector<std::vector<SparseVec>> p(1, std::vector<SparseVec>(1));
  p[0][0].push_back({0, ONE});
  return Algebra::build(Q, {"e"}, p, {0}, "k");
}

Algebra::Ptr k_times_k() {
  std::vector<std::vector<SparseVec>> p(2, std::vector<SparseVec>(2));
  p[0][0].push_back({0, ONE});
  p[1][1].push_back({1, ONE});
  return Algebra::build(Q, {"e1", "e2"}, p, {0, 1}, "kxk");
}

Algebra::Ptr mat2() {
  // basis E11, E12, E21, E22
  auto idx = [](int i, int j) { return static_cast<std::size_t>(2 * i + j); };
  std::vector<std::vector<SparseVec>> p(4, std::vector<SparseVec>(4));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          if (j == k) p[idx(i, j)][idx(k, l)].push_back({static_cast<std::uint32_t>(idx(i, l)), ONE});
  return Algebra::build(Q, {"E11", "E12", "E21", "E22"}, p, {0, 3}, "M2");
}

}  // namespace

TEST_CASE("build_algebra: the field k") {
  auto k = field_algebra();
  CHECK(k->dim() == 1);
  CHECK(k->idempotents().size() == 1);
  CHECK(k->radical_rows().rows() == 0);
}

TEST_CASE("build_algebra: k x k") {
  auto a = k_times_k();
  CHECK(a->dim() == 2);
  CHECK(a->radical_rows().rows() == 0);
  CHECK(a->generators().empty());
}

TEST_CASE("build_algebra rejects non-orthogonal idempotents") {
  // e1*e2 = e1 violates orthogonality
  std::vector<std::vector<SparseVec>> p(2, std::vector<SparseVec>(2));
  p[0][0].push_back({0, ONE});
  p[1][1].push_back({1, ONE});
  p[0][1].push_back({0, ONE});
  CHECK_THROWS_AS(Algebra::build(Q, {"e1", "e2"}, p, {0, 1}), input_error);
}

TEST_CASE("build_algebra rejects non-associative tables") {
  // e is a unit, x*x = y, x*y = 0 but y*x = x: (xx)x = x while x(xx) = 0
  std::vector<std::vector<SparseVec>> p(3, std::vector<SparseVec>(3));
  p[0][0].push_back({0, ONE});
  p[0][1].push_back({1, ONE});
  p[1][0].push_back({1, ONE});
  p[0][2].push_back({2, ONE});
  p[2][0].push_back({2, ONE});
  p[1][1].push_back({2, ONE});
  p[2][1].push_back({1, ONE});
  CHECK_THROWS_AS(Algebra::build(Q, {"e", "x", "y"}, p, {0}), input_error);
}

TEST_CASE("dual numbers: radical is the nilpotent line") {
  // k[x]/(x^2)
  std::vector<std::vector<SparseVec>> p(2, std::vector<SparseVec>(2));
  p[0][0].push_back({0, ONE});
  p[0][1].push_back({1, ONE});
  p[1][0].push_back({1, ONE});
  auto a = Algebra::build(Q, {"e", "x"}, p, {0}, "k[x]/x2");
  CHECK(a->radical_rows().rows() == 1);
  CHECK(!a->radical_rows().row(0).at(0, 1).is_zero());
  REQUIRE(a->generators().size() == 1);
  CHECK(a->generators()[0].src == 0);
  CHECK(a->generators()[0].tgt == 0);
}

TEST_CASE("M2(Q): semisimple non-basic algebras are supported") {
  auto a = mat2();
  CHECK(a->radical_rows().rows() == 0);
  // the span of the two idempotents is not all of the semisimple part, so
  // generators must cover the complement
  CHECK(a->generators().size() >= 2);
  // e1 * E12 * e2 = E12
  const Mat piece = a->peirce_piece(a->unit_row(1), 0, 1);
  CHECK(piece == a->unit_row(1));
}

TEST_CASE("opposite algebra round trip") {
  auto a = mat2();
  auto op = a->opposite();
  CHECK(op->is_opposite_of(*a));
  CHECK(op->opposite().get() == a.get());
  // products flip: E12 *op E21 = E21 * E12 = E22
  const Mat p = op->elem_product(op->unit_row(1), op->unit_row(2));
  CHECK(p == op->unit_row(3));
}

TEST_CASE("prime field guard for the radical") {
  // dim 2 algebra over F2 is rejected (radical computation needs p > dim)
  const FieldSpec f2 = FieldSpec::prime(2);
  std::vector<std::vector<SparseVec>> p(2, std::vector<SparseVec>(2));
  const Scalar one2 = Scalar::one(f2);
  p[0][0].push_back({0, one2});
  p[1][1].push_back({1, one2});
  CHECK_THROWS_AS(Algebra::build(f2, {"e1", "e2"}, p, {0, 1}), unsupported_error);
  // but a larger prime works
  const FieldSpec f5 = FieldSpec::prime(5);
  std::vector<std::vector<SparseVec>> p5(2, std::vector<SparseVec>(2));
  const Scalar one5 = Scalar::one(f5);
  p5[0][0].push_back({0, one5});
  p5[1][1].push_back({1, one5});
  CHECK(Algebra::build(f5, {"e1", "e2"}, p5, {0, 1})->radical_rows().rows() == 0);
}
