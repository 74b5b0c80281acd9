#pragma once

#include "abcat/homology.hpp"

namespace abcat {

// Basic Nakayama algebra with the given Kupisch series: vertex i carries the
// indecomposable projective of Loewy length kupisch[i]; arrows i -> i+1
// (cyclically when cyclic = true). Throws input_error on inadmissible data.
Algebra::Ptr nakayama_algebra(const std::vector<std::size_t>& kupisch, bool cyclic, FieldSpec field);

// The paper's two-vertex family: cyclic quiver 1 <-> 2 with kupisch
// [2n+1, 2n+2].
Algebra::Ptr paper_algebra(std::size_t n, FieldSpec field);

// Uniserial module with top at `top_vertex` (0-based) and Loewy length len:
// the quotient P_top / rad^len. Labeled [m]_l with m the 1-based socle vertex.
Module uniserial_module(const Algebra::Ptr& alg, std::size_t top_vertex, std::size_t len);

// Complete duplicate-free list of indecomposables of a Nakayama algebra,
// labeled [m]_l and ordered by (socle vertex, Loewy length).
std::vector<Module> enumerate_indecomposables(const Algebra::Ptr& alg);

// top/socle vertex of a module with simple top/socle (0-based; throws if not)
std::size_t socle_vertex(const Module& m);
std::size_t top_vertex_of(const Module& m);

// transpose via a minimal projective presentation; module over the opposite
Module transpose_module(const Module& m);

enum class ArDirection { forward, inverse };

struct ArTranslateResult {
  Module mod;
  // dimension of the projective (forward) / injective (inverse) part split off
  std::size_t split_dim = 0;
};
// classical tau = D Tr (forward) and tau^- = Tr D (inverse)
ArTranslateResult ar_translate(const Module& m, ArDirection dir);

struct ArQuiver {
  std::vector<std::string> labels;
  std::vector<std::size_t> dims;
  struct Arrow {
    std::size_t src, dst, mult;
  };
  std::vector<Arrow> arrows;
  // tau_of[v] = index of tau(v) for non-projective vertices
  std::vector<std::optional<std::size_t>> tau_of;
};

// vertices = given indecomposables; arrow multiplicity = dim rad/rad^2
ArQuiver ar_quiver_of(const std::vector<Module>& indecomposables);
// Nakayama convenience: uses enumerate_indecomposables
ArQuiver ar_quiver(const Algebra::Ptr& alg);

}  // namespace abcat
