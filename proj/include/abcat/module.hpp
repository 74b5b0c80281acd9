#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "abcat/algebra.hpp"

namespace abcat {

// A right module: carrier vectors are ROW vectors, x.a = x * action(a),
// and action(ab) = action(a) * action(b).
class Module {
 public:
  Module() = default;
  Module(Algebra::Ptr alg, std::vector<Mat> action, std::string label = "");

  static Module zero(Algebra::Ptr alg, std::string label = "0");

  const Algebra::Ptr& algebra() const { return data_->alg; }
  std::size_t dim() const { return data_->dim; }
  const Mat& action(std::size_t basis_index) const { return data_->action[basis_index]; }
  const std::string& label() const { return data_->label; }
  Module with_label(std::string label) const;

  // action of an arbitrary algebra element (1 x dim_A row vector)
  Mat action_of(const Mat& elem) const;

  // per-idempotent dimensions dim(M e_t)
  const std::vector<std::size_t>& idem_dims() const;

  bool same_data(const Module& o) const { return data_ == o.data_; }

 private:
  struct Data {
    Algebra::Ptr alg;
    std::size_t dim = 0;
    std::vector<Mat> action;
    std::string label;
    mutable std::vector<std::size_t> idem_dims;  // computed once on demand
    mutable std::once_flag idem_once;
  };
  std::shared_ptr<const Data> data_;
};

// A module morphism f: src -> tgt given by its matrix (dim src x dim tgt);
// x maps to x * matrix. Intertwining: action_src(a) * m = m * action_tgt(a).
struct Morphism {
  Module src, tgt;
  Mat m;

  Morphism() = default;
  Morphism(Module s, Module t, Mat mat);

  bool is_zero() const { return m.is_zero(); }
  bool intertwines() const;  // exact check over all algebra basis elements
};

Morphism identity_morphism(const Module& m);
Morphism zero_morphism(const Module& src, const Module& tgt);
// g after f (apply f first); matrix is f.m * g.m
Morphism compose(const Morphism& f, const Morphism& g);

struct DirectSum {
  Module total;
  std::vector<Morphism> embeddings;    // summand -> total
  std::vector<Morphism> projections;  // total -> summand
  std::vector<std::size_t> offsets;
};
DirectSum direct_sum(const std::vector<Module>& parts, std::string label = "");

// submodule spanned by the given rows (must be action-stable); returns the
// module on the row_space basis together with the inclusion
struct SubQuot {
  Module mod;
  Morphism map;  // inclusion (submodule) or projection (quotient)
};
SubQuot submodule(const Module& m, const Mat& rows, std::string label = "");
SubQuot quotient_module(const Module& m, const Mat& rows, std::string label = "");

SubQuot kernel_module(const Morphism& f, std::string label = "");
SubQuot image_module(const Morphism& f, std::string label = "");   // submodule of tgt
SubQuot cokernel_module(const Morphism& f, std::string label = "");

// pushout of  b <-f- a -g-> c : the module (b (+) c)/{(f(x), -g(x))}
struct Pushout {
  Module mod;
  Morphism from_b, from_c;
};
Pushout pushout(const Morphism& f, const Morphism& g);

// D(M) = Hom_k(M, k) as a module over the opposite algebra
Module dual_module(const Module& m);
// dual of a morphism: D(f): D(tgt) -> D(src)
Morphism dual_morphism(const Morphism& f);

// basis of the intertwiner space, deterministic order
std::vector<Morphism> hom_basis(const Module& m, const Module& n);
std::size_t hom_dim(const Module& m, const Module& n);

struct HomSpaceInternal;

// hom basis together with cheap coordinate extraction for arbitrary
// intertwiners (free-variable readout from the defining kernel)
struct HomSpace {
  Module src, tgt;
  std::vector<Morphism> basis;
  std::shared_ptr<HomSpaceInternal> internal;
  Mat coords_of(const Mat& morphism_matrix) const;  // 1 x |basis|
};
HomSpace hom_space(const Module& m, const Module& n);

// checks the module axioms; pairs = generators when quick, all pairs otherwise
void validate_module(const Module& m, bool full = false);

// solve  x . f = g  for x: src(g) -> src(f) given f: A -> C, g: B -> C,
// i.e. factor g through f; nullopt if impossible
std::optional<Morphism> factor_through(const Morphism& f, const Morphism& g);
// solve  f . x = g  for x: tgt(f) -> tgt(g) given f: A -> B, g: A -> C
std::optional<Morphism> factor_along(const Morphism& f, const Morphism& g);

}  // namespace abcat
