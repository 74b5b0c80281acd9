#pragma once

#include "abcat/module.hpp"

namespace abcat {

// mods[0] -> mods[1] -> ... -> mods.back(); exact at every interior node.
struct ExactChain {
  std::vector<Module> mods;
  std::vector<Morphism> maps;  // maps[i]: mods[i] -> mods[i+1]
  bool exact_at_left = true;   // first map mono
  bool exact_at_right = true;  // last map epi
  void verify() const;         // throws invariant_error on failure
};

// spec resolution shape 0 -> X_n -> ... -> X_0 -> M (-> 0): an ExactChain with
// mods = [X_n, ..., X_0, M]
using FiniteResolution = ExactChain;

struct ProjectiveModule {
  Module mod;
  std::size_t vertex = 0;   // idempotent index
  Mat rows;                 // basis of e*A inside A (coordinates -> elements)
  Mat generator_coords;     // coordinates of the idempotent itself (1 x dim)
};
Module regular_module(const Algebra::Ptr& alg);
ProjectiveModule projective_module(const Algebra::Ptr& alg, std::size_t vertex);
Module injective_module(const Algebra::Ptr& alg, std::size_t vertex);

Mat radical_rows_of(const Module& m);  // basis rows of M.rad(A)
Mat socle_rows_of(const Module& m);
std::size_t loewy_length(const Module& m);

struct Cover {
  Module proj;                        // (+) of indecomposable projectives
  std::vector<std::size_t> vertices;  // per summand, ascending idempotent index
  std::vector<std::size_t> offsets;   // coordinate offset per summand
  std::vector<Mat> summand_rows;      // per summand: coordinates -> algebra elements
  Morphism onto;                      // proj -> m, surjective
};
Cover projective_cover(const Module& m);

struct SyzygyStep {
  Cover cover;
  Module syzygy;
  Morphism incl;  // syzygy -> cover.proj
};
SyzygyStep syzygy_step(const Module& m);

// k >= 0: k-fold syzygy along minimal projective covers with the witnessing
// chain 0 -> O^k M -> P_{k-1} -> ... -> P_0 -> M -> 0.
// k < 0: cosyzygy along minimal left projective approximations,
// witness M -> P^0 -> ... -> O^{-k} M (first map mono only when it is).
struct SyzygyResult {
  Module mod;
  ExactChain witness;
};
SyzygyResult syzygy(const Module& m, long k);

std::size_t ext_dim(std::size_t i, const Module& m, const Module& n);

struct DimWitness {
  enum class Kind { finite, infinite, unknown } kind = Kind::unknown;
  std::size_t value = 0;                      // when finite
  std::size_t period_i = 0, period_j = 0;     // when infinite: syzygy recurrence
  bool is_finite() const { return kind == Kind::finite; }
  std::string str() const;
};
DimWitness projective_dimension(const Module& m, std::size_t cutoff);
DimWitness injective_dimension(const Module& m, std::size_t cutoff);

struct HomDimReport {
  DimWitness pd, id;
};
HomDimReport homological_dims(const Module& m, std::size_t cutoff);

// Exact, deterministic isomorphism test: idempotent equivalence in
// End(M (+) N) mod its radical.
bool modules_isomorphic(const Module& m, const Module& n);

// End(m)/rad End(m) dimension; 1 certifies indecomposability (split case)
std::size_t top_end_dim(const Module& m);

// strips copies of the given pairwise non-isomorphic indecomposable members
// off m; in_add iff the residual is zero
struct AddDecomposition {
  bool in_add = false;
  std::vector<std::size_t> multiplicities;  // per member
  Module residual;
};
AddDecomposition add_decompose(const Module& m, const std::vector<Module>& members);

// universal or right-minimal approximation X_M -> M with X_M in add(members)
struct Approximation {
  Module src;
  std::vector<std::size_t> member_of_summand;
  std::vector<std::size_t> offsets;
  Morphism map;  // src -> M
  bool surjective = false;
};
Approximation right_approximation(const std::vector<Module>& members, const Module& m, bool minimal);

// left approximation M -> X^M, computed by duality
struct LeftApproximation {
  Module tgt;
  std::vector<std::size_t> member_of_summand;
  Morphism map;  // M -> tgt
  bool injective = false;
};
LeftApproximation left_approximation(const std::vector<Module>& members, const Module& m, bool minimal);

// every f: X -> M with X in add(members) factors through app.map
bool is_right_approximation(const std::vector<Module>& members, const Morphism& app);

std::vector<Module> all_projectives(const Algebra::Ptr& alg);
std::vector<Module> all_injectives(const Algebra::Ptr& alg);

}  // namespace abcat
