#include "doctest.h"

#include <algorithm>
#include <set>

#include "abcat/nakayama.hpp"

using namespace abcat;

namespace {
const FieldSpec Q = FieldSpec::rationals();
}

TEST_CASE("kupisch validation") {
  CHECK_THROWS_AS(nakayama_algebra({0}, false, Q), input_error);
  CHECK_THROWS_AS(nakayama_algebra({1, 1}, true, Q), input_error);
  CHECK_THROWS_AS(nakayama_algebra({4, 2}, true, Q), input_error);   // c1 > c2 + 1
  CHECK_THROWS_AS(nakayama_algebra({2, 2}, false, Q), input_error);  // linear must end in 1
  CHECK(nakayama_algebra({1}, false, Q)->dim() == 1);                // the field k
  CHECK(nakayama_algebra({2, 1}, false, Q)->dim() == 3);             // A2 path algebra
}

TEST_CASE("paper algebra dimensions: count paths avoiding the relation") {
  // dim = (2n+1) + (2n+2)
  for (std::size_t n = 1; n <= 3; ++n) {
    auto alg = paper_algebra(n, Q);
    CHECK(alg->dim() == 4 * n + 3);
    // path-count oracle: nonzero paths from vertex 1 have length <= 2n,
    // from vertex 2 length <= 2n+1
    const auto* info = alg->nakayama_info();
    REQUIRE(info);
    CHECK(info->path_index[0].size() == 2 * n + 1);
    CHECK(info->path_index[1].size() == 2 * n + 2);
  }
}

TEST_CASE("enumerate_indecomposables: complete, duplicate-free, correctly labeled") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto alg = paper_algebra(n, Q);
    auto inds = enumerate_indecomposables(alg);
    CHECK(inds.size() == 4 * n + 3);  // sum of the kupisch entries
    // combinatorial label list: [1]_l for l <= 2n+2 and [2]_l for l <= 2n+1
    std::vector<std::string> expect;
    for (std::size_t l = 1; l <= 2 * n + 2; ++l) expect.push_back("[1]_" + std::to_string(l));
    for (std::size_t l = 1; l <= 2 * n + 1; ++l) expect.push_back("[2]_" + std::to_string(l));
    std::vector<std::string> got;
    for (const Module& m : inds) got.push_back(m.label());
    CHECK(got == expect);
    // labels agree with the computed socle vertex and loewy length
    for (const Module& m : inds) {
      const std::string want =
          "[" + std::to_string(socle_vertex(m) + 1) + "]_" + std::to_string(loewy_length(m));
      CHECK(m.label() == want);
    }
    // pairwise non-isomorphic and indecomposable (local endomorphism rings)
    for (std::size_t i = 0; i < inds.size(); ++i) {
      CHECK(top_end_dim(inds[i]) == 1);
      for (std::size_t j = i + 1; j < inds.size(); ++j)
        CHECK(!modules_isomorphic(inds[i], inds[j]));
    }
  }
}

TEST_CASE("enumerate oracle: uniserials found by walking nonzero paths") {
  // every nonzero path p from vertex v gives the uniserial with top v and
  // length len(p)+1; the multiset of (socle, length) pairs must match
  for (std::size_t n = 1; n <= 3; ++n) {
    auto alg = paper_algebra(n, Q);
    const auto* info = alg->nakayama_info();
    std::multiset<std::pair<std::size_t, std::size_t>> walk;
    for (std::size_t v = 0; v < 2; ++v)
      for (std::size_t l = 0; l < info->path_index[v].size(); ++l)
        walk.insert({(v + l) % 2, l + 1});
    std::multiset<std::pair<std::size_t, std::size_t>> listed;
    for (const Module& m : enumerate_indecomposables(alg))
      listed.insert({socle_vertex(m), loewy_length(m)});
    CHECK(walk == listed);
  }
}

TEST_CASE("enumerate requires Nakayama input") {
  // M2(Q) has no attached kupisch data
  const Scalar one = Scalar::one(Q);
  std::vector<std::vector<SparseVec>> p(1, std::vector<SparseVec>(1));
  p[0][0].push_back({0, one});
  auto k = Algebra::build(Q, {"e"}, p, {0});
  CHECK_THROWS_AS(enumerate_indecomposables(k), unsupported_error);
}

TEST_CASE("the field has exactly one indecomposable") {
  auto k = nakayama_algebra({1}, false, Q);
  auto inds = enumerate_indecomposables(k);
  CHECK(inds.size() == 1);
  CHECK(inds[0].dim() == 1);
}

TEST_CASE("self-injective Nakayama: projectives are injective") {
  auto alg = nakayama_algebra({3, 3}, true, Q);
  for (std::size_t t = 0; t < 2; ++t) {
    const Module p = projective_module(alg, t).mod;
    bool inj = false;
    for (std::size_t s = 0; s < 2; ++s)
      if (modules_isomorphic(p, injective_module(alg, s))) inj = true;
    CHECK(inj);
  }
}

TEST_CASE("tau of a projective is zero; tau tau- is the identity on non-injectives") {
  auto alg = paper_algebra(1, Q);
  auto inds = enumerate_indecomposables(alg);
  const Module p1 = inds[2];  // [1]_3 = P1
  CHECK(ar_translate(p1, ArDirection::forward).mod.dim() == 0);
  const Module p2 = inds[3];  // [1]_4 = P2
  CHECK(ar_translate(p2, ArDirection::forward).mod.dim() == 0);
  // injectives are [1]_4 and [2]_3
  for (const Module& m : inds) {
    if (m.label() == "[1]_4" || m.label() == "[2]_3") continue;
    const Module t = ar_translate(m, ArDirection::inverse).mod;
    const Module back = ar_translate(t, ArDirection::forward).mod;
    CAPTURE(m.label());
    CHECK(modules_isomorphic(back, m));
  }
}

TEST_CASE("tau of the simple at vertex 1 is the simple at vertex 2 (hand transpose)") {
  auto alg = paper_algebra(1, Q);
  auto inds = enumerate_indecomposables(alg);
  const Module t = ar_translate(inds[0], ArDirection::forward).mod;
  CHECK(t.dim() == 1);
  CHECK(modules_isomorphic(t, inds[4]));  // [2]_1
}

TEST_CASE("AR quiver of the paper algebra at n=1: mesh from serial theory") {
  auto alg = paper_algebra(1, Q);
  const ArQuiver q = ar_quiver(alg);
  REQUIRE(q.labels.size() == 7);
  auto at = [&](const std::string& l) {
    return static_cast<std::size_t>(std::find(q.labels.begin(), q.labels.end(), l) - q.labels.begin());
  };
  // irreducible maps between uniserials: add a top ([m]_l -> [m]_{l+1}) or
  // strip the socle ([m]_l -> [m+1]_{l-1])
  const std::set<std::pair<std::size_t, std::size_t>> expect = {
      {at("[1]_1"), at("[1]_2")}, {at("[1]_2"), at("[1]_3")}, {at("[1]_2"), at("[2]_1")},
      {at("[1]_3"), at("[1]_4")}, {at("[1]_3"), at("[2]_2")}, {at("[1]_4"), at("[2]_3")},
      {at("[2]_1"), at("[2]_2")}, {at("[2]_2"), at("[2]_3")}, {at("[2]_2"), at("[1]_1")},
      {at("[2]_3"), at("[1]_2")}};
  std::set<std::pair<std::size_t, std::size_t>> got;
  for (const auto& a : q.arrows) {
    CHECK(a.mult == 1);
    got.insert({a.src, a.dst});
  }
  CHECK(got == expect);
  // tau pairs: [m]_l -> [m-1]_l for the five non-projectives
  CHECK(q.tau_of[at("[1]_1")] == at("[2]_1"));
  CHECK(q.tau_of[at("[1]_2")] == at("[2]_2"));
  CHECK(q.tau_of[at("[2]_1")] == at("[1]_1"));
  CHECK(q.tau_of[at("[2]_2")] == at("[1]_2"));
  CHECK(q.tau_of[at("[2]_3")] == at("[1]_3"));
  CHECK(!q.tau_of[at("[1]_3")].has_value());
  CHECK(!q.tau_of[at("[1]_4")].has_value());
}

TEST_CASE("AR quiver of k x k: two isolated vertices") {
  auto alg = nakayama_algebra({1, 1}, false, Q);
  const ArQuiver q = ar_quiver(alg);
  CHECK(q.labels.size() == 2);
  CHECK(q.arrows.empty());
}

TEST_CASE("paper figure at n=2: 11 vertices") {
  auto alg = paper_algebra(2, Q);
  const ArQuiver q = ar_quiver(alg);
  CHECK(q.labels.size() == 11);
  // every non-projective vertex has a tau partner
  std::size_t with_tau = 0;
  for (const auto& t : q.tau_of)
    if (t) ++with_tau;
  CHECK(with_tau == 9);
}
