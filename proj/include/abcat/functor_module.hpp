#pragma once

#include <functional>

#include "abcat/lincat.hpp"

namespace abcat {

// A finitely presented contravariant functor on the category, realized as a
// right module over the category algebra. Component i of the carrier sits at
// coordinates [comp_offset[i], comp_offset[i+1]).
struct FunctorModule {
  CategoryAlgebra::Ptr ca;
  Module carrier;
  std::string provenance;
  std::vector<std::size_t> comp_offset;

  // retained for representable functors so induced maps can be reduced later
  std::shared_ptr<const std::vector<ClassSpace>> rep_components;
  std::shared_ptr<const Module> rep_target;

  std::size_t comp_dim(std::size_t i) const { return comp_offset[i + 1] - comp_offset[i]; }
};

// dims[i] = component dimension at object i; block(u) = matrix of the action
// of gamma basis element u as a map component(tgt) -> component(src)
FunctorModule functor_from_components(const CategoryAlgebra::Ptr& ca,
                                      const std::vector<std::size_t>& dims,
                                      const std::function<Mat(std::size_t)>& block,
                                      std::string provenance, bool validate = true);

// A(-, m)|_cat for an arbitrary ambient module m (classes modulo the ideal)
FunctorModule representable_functor(const CategoryAlgebra::Ptr& ca, const Module& m);
// the map A(-, f): rep(f.src) -> rep(f.tgt) induced by an ambient morphism
Morphism representable_map(const FunctorModule& from, const FunctorModule& to, const Morphism& f);

// D cat(X_j, -): the indecomposable injective at object j
FunctorModule injective_functor(const CategoryAlgebra::Ptr& ca, std::size_t j);

// top of the representable at object j (one dimensional)
FunctorModule simple_functor(const CategoryAlgebra::Ptr& ca, std::size_t j);

// Ext^1_Lambda(-, m) restricted to the category's objects; well defined on the
// quotient classes whenever the ideal consists of projectives
FunctorModule ext1_functor(const CategoryAlgebra::Ptr& ca, const Module& m);

// F vanishes on the listed objects (their idempotents act by zero)
bool vanishes_on(const FunctorModule& f, const std::vector<std::size_t>& objects);

}  // namespace abcat
