#pragma once

#include <map>

#include "abcat/homology.hpp"

namespace abcat {

// A hom space together with a distinguished subspace, presented by class
// representatives and a linear reduction onto class coordinates.
struct ClassSpace {
  HomSpace space;
  Mat sub_rows;                // rref rows in hom coordinates
  Mat class_basis;             // rows: class basis in hom coordinates
  Mat reduce;                  // |hom basis| x nclasses
  std::vector<Morphism> reps;  // representative morphisms, one per class

  std::size_t dim() const { return reps.size(); }
  // class coordinates of an arbitrary morphism in the ambient hom space
  Mat class_coords(const Mat& morphism_matrix) const;
};

// quotient of a hom space by a subspace; when id_first is set the class of
// the identity becomes basis element 0 (requires src == tgt)
ClassSpace make_class_space(HomSpace space, const Mat& sub_rows, bool id_first);

// rows (in hom coordinates of hs) spanned by morphisms factoring through
// add of the given modules
Mat factoring_rows(const HomSpace& hs, const std::vector<Module>& through);

// A finite additive k-linear category: finitely many pairwise non-isomorphic
// indecomposable objects realized as modules, with an optional ideal [omega].
class LinCat {
 public:
  using Ptr = std::shared_ptr<const LinCat>;

  // checks: same owner algebra, pairwise non-isomorphic, certified
  // indecomposable (local End with one-dimensional top)
  static Ptr make(std::vector<Module> objects);
  // quotient category: drops the named objects and kills morphisms factoring
  // through their add-closure (combined with any existing ideal)
  Ptr quotient_by(const std::vector<std::string>& omega_labels) const;

  const Algebra::Ptr& ambient() const { return ambient_; }
  const std::vector<Module>& objects() const { return objects_; }
  const std::vector<Module>& ideal() const { return ideal_; }
  std::size_t object_count() const { return objects_.size(); }
  std::size_t index_of(const std::string& label) const;  // throws input_error
  bool has_object(const std::string& label) const;

  const ClassSpace& homs(std::size_t i, std::size_t j) const { return homs_[i][j]; }

  // Hom-bar(X_i, m) for an arbitrary ambient module
  ClassSpace stable_hom_from(std::size_t i, const Module& m) const;
  // Hom-bar(m, X_i)
  ClassSpace stable_hom_to(const Module& m, std::size_t i) const;
  // Hom-bar(m, n), both arbitrary
  ClassSpace stable_hom(const Module& m, const Module& n) const;

 private:
  LinCat() = default;
  void build_tables();

  Algebra::Ptr ambient_;
  std::vector<Module> objects_;
  std::vector<Module> ideal_;
  std::vector<std::vector<ClassSpace>> homs_;
};

// The category algebra Gamma = (+) Hom-bar(X_i, X_j), with multiplication by
// composition; right Gamma-modules realize contravariant functors.
struct CategoryAlgebra {
  using Ptr = std::shared_ptr<const CategoryAlgebra>;

  Algebra::Ptr gamma;
  LinCat::Ptr cat;
  // gamma basis index -> (source object, target object, class index)
  std::vector<std::array<std::size_t, 3>> basis_key;
  // [i][j][c] -> gamma basis index
  std::vector<std::vector<std::vector<std::size_t>>> index;

  std::size_t object_count() const { return cat->object_count(); }
  const std::string& object_label(std::size_t i) const { return cat->objects()[i].label(); }
};

CategoryAlgebra::Ptr category_algebra(LinCat::Ptr cat);

struct WeakKernelResult {
  bool in_add = true;
  Module kernel;                 // ambient kernel module N
  Morphism gamma;                // N -> M
  AddDecomposition decomposition;  // of N against the category's objects
  Approximation beta;            // the right B-approximation of L used
};

// weak kernel of f: M -> L (ambient representative of a hom class) in the
// quotient of cat by [add B]: kernel of (f beta): M (+) B_L -> L
WeakKernelResult weak_kernel(const LinCat& cat, const Morphism& f, const std::vector<Module>& approx_base);

}  // namespace abcat
