#include "abcat/lincat.hpp"

#include <algorithm>
#include <array>

namespace abcat {

Mat ClassSpace::class_coords(const Mat& morphism_matrix) const {
  const FieldSpec f = space.src.algebra()->field();
  if (reps.empty()) return Mat(1, 0, f);
  return space.coords_of(morphism_matrix) * reduce;
}

ClassSpace make_class_space(HomSpace space, const Mat& sub_rows, bool id_first) {
  ClassSpace cs;
  const FieldSpec f = space.src.algebra()->field();
  const std::size_t nb = space.basis.size();
  cs.sub_rows = sub_rows.rows() ? row_space(sub_rows) : Mat(0, nb, f);
  // canonical coset representatives: eliminate the pivot coordinates
  const RrefResult sub = rref(cs.sub_rows);
  std::vector<bool> is_pivot(nb, false);
  for (std::size_t p : sub.pivots) is_pivot[p] = true;
  const std::size_t nfree = nb - sub.rank;
  // rho: hom coords -> canonical representative, restricted to free coords
  Mat rho(nb, nfree, f);
  {
    std::vector<std::size_t> free_pos;
    for (std::size_t c = 0; c < nb; ++c)
      if (!is_pivot[c]) free_pos.push_back(c);
    for (std::size_t c = 0; c < nb; ++c) {
      if (!is_pivot[c]) {
        const std::size_t fi = static_cast<std::size_t>(
            std::lower_bound(free_pos.begin(), free_pos.end(), c) - free_pos.begin());
        rho.at(c, fi) = Scalar::one(f);
      } else {
        // c = pivot of some row r: rho(e_c) = e_c - row_r, restricted to free
        std::size_t r = 0;
        while (sub.pivots[r] != c) ++r;
        for (std::size_t k = 0; k < nfree; ++k) rho.at(c, k) = -sub.m.at(r, free_pos[k]);
      }
    }
  }
  // class basis rows in free coordinates
  Mat bfree(0, nfree, f);
  std::vector<Mat> basis_free_rows;
  if (id_first) {
    if (space.src.dim() != space.tgt.dim())
      throw invariant_error("make_class_space: id_first needs an endomorphism space");
    const Mat idc = space.coords_of(Mat::identity(space.src.dim(), f));
    const Mat v0 = idc * rho;
    if (v0.is_zero()) throw invariant_error("make_class_space: identity class vanishes");
    basis_free_rows.push_back(v0);
    bfree = v0;
  }
  for (std::size_t k = 0; k < nfree && bfree.rows() < nfree; ++k) {
    Mat cand(1, nfree, f);
    cand.at(0, k) = Scalar::one(f);
    if (bfree.rows() == 0 || rank(bfree.vstack(cand)) > bfree.rows()) {
      basis_free_rows.push_back(cand);
      bfree = bfree.rows() ? bfree.vstack(cand) : cand;
    }
  }
  const auto binv = inverse(bfree.rows() ? bfree : Mat::identity(0, f));
  if (!binv) throw invariant_error("make_class_space: class basis not invertible");
  cs.reduce = rho * *binv;
  // representatives and class basis in hom coordinates
  Mat cb(0, nb, f);
  for (const Mat& row : basis_free_rows) {
    // lift free coords back to hom coords (zeros at pivots)
    Mat lift(1, nb, f);
    std::size_t fi = 0;
    for (std::size_t c = 0; c < nb; ++c)
      if (!is_pivot[c]) lift.at(0, c) = row.at(0, fi++);
    cb = cb.vstack(lift);
  }
  cs.class_basis = cb;
  for (std::size_t r = 0; r < cb.rows(); ++r) {
    Mat m(space.src.dim(), space.tgt.dim(), f);
    for (std::size_t k = 0; k < nb; ++k)
      if (!cb.at(r, k).is_zero()) m = m + space.basis[k].m.scaled(cb.at(r, k));
    cs.reps.emplace_back(space.src, space.tgt, std::move(m));
  }
  cs.space = std::move(space);
  return cs;
}

Mat factoring_rows(const HomSpace& hs, const std::vector<Module>& through) {
  const FieldSpec f = hs.src.algebra()->field();
  Mat rows(0, hs.basis.size(), f);
  for (const Module& w : through) {
    const std::vector<Morphism> to_w = hom_basis(hs.src, w);
    const std::vector<Morphism> from_w = hom_basis(w, hs.tgt);
    for (const auto& a : to_w)
      for (const auto& b : from_w) rows = rows.vstack(hs.coords_of(a.m * b.m));
  }
  return rows.rows() ? row_space(rows) : rows;
}

std::size_t LinCat::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i].label() == label) return i;
  throw input_error("unknown object label '" + label + "'");
}

bool LinCat::has_object(const std::string& label) const {
  for (const Module& m : objects_)
    if (m.label() == label) return true;
  return false;
}

LinCat::Ptr LinCat::make(std::vector<Module> objects) {
  if (objects.empty()) throw input_error("make_category: empty object list");
  auto cat = std::shared_ptr<LinCat>(new LinCat());
  cat->ambient_ = objects[0].algebra();
  for (const Module& m : objects) {
    if (m.algebra() != cat->ambient_) throw input_error("make_category: mixed owner algebras");
    if (m.label().empty()) throw input_error("make_category: objects need labels");
    if (top_end_dim(m) != 1)
      throw unsupported_error("make_category: cannot certify '" + m.label() +
                              "' indecomposable (End/rad End is not one dimensional)");
  }
  for (std::size_t i = 0; i < objects.size(); ++i)
    for (std::size_t j = i + 1; j < objects.size(); ++j)
      if (modules_isomorphic(objects[i], objects[j]))
        throw input_error("make_category: objects '" + objects[i].label() + "' and '" +
                          objects[j].label() + "' are isomorphic");
  cat->objects_ = std::move(objects);
  cat->build_tables();
  return cat;
}

LinCat::Ptr LinCat::quotient_by(const std::vector<std::string>& omega_labels) const {
  std::vector<Module> omega;
  for (const std::string& l : omega_labels) omega.push_back(objects_[index_of(l)]);
  auto cat = std::shared_ptr<LinCat>(new LinCat());
  cat->ambient_ = ambient_;
  for (const Module& m : objects_) {
    bool drop = false;
    for (const std::string& l : omega_labels)
      if (m.label() == l) drop = true;
    if (!drop) cat->objects_.push_back(m);
  }
  if (cat->objects_.empty()) throw input_error("quotient_by: all objects removed");
  cat->ideal_ = ideal_;
  for (Module& m : omega) cat->ideal_.push_back(std::move(m));
  cat->build_tables();
  return cat;
}

void LinCat::build_tables() {
  const std::size_t n = objects_.size();
  homs_.assign(n, std::vector<ClassSpace>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      HomSpace hs = hom_space(objects_[i], objects_[j]);
      const Mat ideal = factoring_rows(hs, ideal_);
      homs_[i][j] = make_class_space(std::move(hs), ideal, i == j);
    }
}

ClassSpace LinCat::stable_hom_from(std::size_t i, const Module& m) const {
  return stable_hom(objects_[i], m);
}

ClassSpace LinCat::stable_hom_to(const Module& m, std::size_t i) const {
  return stable_hom(m, objects_[i]);
}

ClassSpace LinCat::stable_hom(const Module& m, const Module& n) const {
  HomSpace hs = hom_space(m, n);
  const Mat ideal = factoring_rows(hs, ideal_);
  return make_class_space(std::move(hs), ideal, false);
}

CategoryAlgebra::Ptr category_algebra(LinCat::Ptr cat) {
  auto ca = std::make_shared<CategoryAlgebra>();
  ca->cat = cat;
  const std::size_t n = cat->object_count();
  const FieldSpec f = cat->ambient()->field();
  ca->index.assign(n, std::vector<std::vector<std::size_t>>(n));
  std::vector<std::string> labels;
  std::vector<std::size_t> idempotents;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const ClassSpace& cs = cat->homs(i, j);
      for (std::size_t c = 0; c < cs.dim(); ++c) {
        ca->index[i][j].push_back(ca->basis_key.size());
        ca->basis_key.push_back({i, j, c});
        if (i == j && c == 0) {
          idempotents.push_back(ca->basis_key.size() - 1);
          labels.push_back("e:" + cat->objects()[i].label());
        } else {
          labels.push_back("(" + cat->objects()[i].label() + ">" + cat->objects()[j].label() +
                           ")#" + std::to_string(c));
        }
      }
    }
  const std::size_t d = ca->basis_key.size();
  std::vector<std::vector<SparseVec>> products(d, std::vector<SparseVec>(d));
  // product u * v = (rep u) after (rep v): defined when tgt(v) = src(u)
  for (std::size_t u = 0; u < d; ++u) {
    const auto [ua, ub, uc] = ca->basis_key[u];
    for (std::size_t v = 0; v < d; ++v) {
      const auto [vc_src, vb, vcc] = ca->basis_key[v];
      if (vb != ua) continue;
      const Mat comp = cat->homs(vc_src, vb).reps[vcc].m * cat->homs(ua, ub).reps[uc].m;
      const Mat coords = cat->homs(vc_src, ub).class_coords(comp);
      for (std::size_t k = 0; k < coords.cols(); ++k)
        if (!coords.at(0, k).is_zero())
          products[u][v].push_back(
              {static_cast<std::uint32_t>(ca->index[vc_src][ub][k]), coords.at(0, k)});
    }
  }
  ca->gamma = Algebra::build(f, std::move(labels), std::move(products), std::move(idempotents),
                             "Gamma");
  return ca;
}

WeakKernelResult weak_kernel(const LinCat& cat, const Morphism& f,
                             const std::vector<Module>& approx_base) {
  WeakKernelResult out;
  out.beta = right_approximation(approx_base, f.tgt, true);
  const DirectSum top = direct_sum({f.src, out.beta.src});
  const Mat phi = f.m.vstack(out.beta.map.m);
  const Morphism phi_m(top.total, f.tgt, phi);
  const SubQuot ker = kernel_module(phi_m, "wk(" + f.src.label() + ">" + f.tgt.label() + ")");
  out.kernel = ker.mod;
  out.gamma = Morphism(ker.mod, f.src, ker.map.m.submatrix(0, 0, ker.mod.dim(), f.src.dim()));
  out.decomposition = add_decompose(ker.mod, cat.objects());
  out.in_add = out.decomposition.in_add;
  return out;
}

}  // namespace abcat
