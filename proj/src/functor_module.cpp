#include "abcat/functor_module.hpp"

namespace abcat {

FunctorModule functor_from_components(const CategoryAlgebra::Ptr& ca,
                                      const std::vector<std::size_t>& dims,
                                      const std::function<Mat(std::size_t)>& block,
                                      std::string provenance, bool validate) {
  const std::size_t n = ca->object_count();
  const FieldSpec f = ca->gamma->field();
  FunctorModule fm;
  fm.ca = ca;
  fm.provenance = std::move(provenance);
  fm.comp_offset.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) fm.comp_offset[i + 1] = fm.comp_offset[i] + dims[i];
  const std::size_t total = fm.comp_offset[n];
  std::vector<Mat> action;
  action.reserve(ca->gamma->dim());
  for (std::size_t u = 0; u < ca->gamma->dim(); ++u) {
    const auto [a, b, c] = ca->basis_key[u];
    const Mat t = block(u);  // component(b) -> component(a)
    if (t.rows() != dims[b] || t.cols() != dims[a])
      throw invariant_error("functor_from_components: block shape mismatch");
    Mat m(total, total, f);
    for (std::size_t i = 0; i < t.rows(); ++i)
      for (std::size_t j = 0; j < t.cols(); ++j)
        m.at(fm.comp_offset[b] + i, fm.comp_offset[a] + j) = t.at(i, j);
    action.push_back(std::move(m));
  }
  fm.carrier = Module(ca->gamma, std::move(action), fm.provenance);
  if (validate) validate_module(fm.carrier);
  return fm;
}

FunctorModule representable_functor(const CategoryAlgebra::Ptr& ca, const Module& m) {
  const std::size_t n = ca->object_count();
  auto comps = std::make_shared<std::vector<ClassSpace>>();
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < n; ++i) {
    comps->push_back(ca->cat->stable_hom_from(i, m));
    dims.push_back(comps->back().dim());
  }
  const FieldSpec f = ca->gamma->field();
  auto block = [&](std::size_t u) {
    const auto [a, b, c] = ca->basis_key[u];
    const Morphism& g = ca->cat->homs(a, b).reps[c];
    Mat t(dims[b], dims[a], f);
    for (std::size_t r = 0; r < dims[b]; ++r) {
      const Mat img = (*comps)[a].class_coords(g.m * (*comps)[b].reps[r].m);
      for (std::size_t cidx = 0; cidx < dims[a]; ++cidx) t.at(r, cidx) = img.at(0, cidx);
    }
    return t;
  };
  FunctorModule fm = functor_from_components(ca, dims, block, "(-," + m.label() + ")");
  fm.rep_components = comps;
  fm.rep_target = std::make_shared<Module>(m);
  return fm;
}

Morphism representable_map(const FunctorModule& from, const FunctorModule& to, const Morphism& f) {
  if (!from.rep_components || !to.rep_components)
    throw invariant_error("representable_map needs representable functor modules");
  const CategoryAlgebra::Ptr& ca = from.ca;
  const FieldSpec fl = ca->gamma->field();
  Mat m(from.carrier.dim(), to.carrier.dim(), fl);
  for (std::size_t i = 0; i < ca->object_count(); ++i) {
    const ClassSpace& cf = (*from.rep_components)[i];
    const ClassSpace& ct = (*to.rep_components)[i];
    for (std::size_t r = 0; r < cf.dim(); ++r) {
      const Mat img = ct.class_coords(cf.reps[r].m * f.m);
      for (std::size_t c = 0; c < ct.dim(); ++c)
        m.at(from.comp_offset[i] + r, to.comp_offset[i] + c) = img.at(0, c);
    }
  }
  return Morphism(from.carrier, to.carrier, std::move(m));
}

FunctorModule injective_functor(const CategoryAlgebra::Ptr& ca, std::size_t j) {
  const std::size_t n = ca->object_count();
  const FieldSpec f = ca->gamma->field();
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < n; ++i) dims.push_back(ca->cat->homs(j, i).dim());
  auto block = [&](std::size_t u) {
    const auto [a, b, c] = ca->basis_key[u];
    const Morphism& g = ca->cat->homs(a, b).reps[c];
    // covariant action L: cat(X_j, X_a) -> cat(X_j, X_b), u |-> g . u; the
    // dual block component(b) -> component(a) is its transpose
    Mat l(dims[a], dims[b], f);
    for (std::size_t r = 0; r < dims[a]; ++r) {
      const Mat img = ca->cat->homs(j, b).class_coords(ca->cat->homs(j, a).reps[r].m * g.m);
      for (std::size_t cidx = 0; cidx < dims[b]; ++cidx) l.at(r, cidx) = img.at(0, cidx);
    }
    return l.transpose();
  };
  return functor_from_components(ca, dims, block,
                                 "D(" + ca->object_label(j) + ",-)");
}

FunctorModule simple_functor(const CategoryAlgebra::Ptr& ca, std::size_t j) {
  FunctorModule rep = representable_functor(ca, ca->cat->objects()[j]);
  const Mat rad = radical_rows_of(rep.carrier);
  const SubQuot top = quotient_module(rep.carrier, rad, "S:" + ca->object_label(j));
  if (top.mod.dim() != 1)
    throw invariant_error("simple_functor: top of the representable is not one dimensional");
  FunctorModule fm;
  fm.ca = ca;
  fm.carrier = top.mod;
  fm.provenance = "S:" + ca->object_label(j);
  fm.comp_offset.assign(ca->object_count() + 1, 0);
  for (std::size_t i = 0; i < ca->object_count(); ++i)
    fm.comp_offset[i + 1] = fm.comp_offset[i] + (i == j ? 1 : 0);
  return fm;
}

FunctorModule ext1_functor(const CategoryAlgebra::Ptr& ca, const Module& m) {
  const std::size_t n = ca->object_count();
  const FieldSpec f = ca->gamma->field();
  // Ext^1(-, m) kills morphisms factoring through projectives, so the action
  // descends to classes only for ideals of projectives
  for (const Module& w : ca->cat->ideal())
    if (syzygy_step(w).syzygy.dim() != 0)
      throw unsupported_error("ext1_functor: the ideal must consist of projectives");
  // per object: minimal cover, syzygy inclusion, and Hom(O X_i, m) modulo
  // maps extending to the cover
  std::vector<SyzygyStep> steps;
  std::vector<ClassSpace> comps;
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < n; ++i) {
    steps.push_back(syzygy_step(ca->cat->objects()[i]));
    HomSpace hs = hom_space(steps[i].syzygy, m);
    Mat restr(0, hs.basis.size(), f);
    for (const auto& lift : hom_basis(steps[i].cover.proj, m))
      restr = restr.vstack(hs.coords_of(steps[i].incl.m * lift.m));
    comps.push_back(make_class_space(std::move(hs), restr, false));
    dims.push_back(comps.back().dim());
  }
  auto block = [&](std::size_t u) {
    const auto [a, b, c] = ca->basis_key[u];
    Mat t(dims[b], dims[a], f);
    if (dims[b] == 0 || dims[a] == 0) return t;
    const Morphism& g = ca->cat->homs(a, b).reps[c];
    // lift g through the covers, then restrict to the syzygies
    const auto gp = factor_through(steps[b].cover.onto, compose(steps[a].cover.onto, g));
    if (!gp) throw invariant_error("ext1_functor: projective lift failed");
    const auto gom = factor_through(steps[b].incl, compose(steps[a].incl, *gp));
    if (!gom) throw invariant_error("ext1_functor: syzygy restriction failed");
    for (std::size_t r = 0; r < dims[b]; ++r) {
      const Mat img = comps[a].class_coords(gom->m * comps[b].reps[r].m);
      for (std::size_t cidx = 0; cidx < dims[a]; ++cidx) t.at(r, cidx) = img.at(0, cidx);
    }
    return t;
  };
  return functor_from_components(ca, dims, block, "Ext1(-," + m.label() + ")");
}

bool vanishes_on(const FunctorModule& f, const std::vector<std::size_t>& objects) {
  for (std::size_t i : objects)
    if (f.comp_dim(i) != 0) return false;
  return true;
}

}  // namespace abcat
