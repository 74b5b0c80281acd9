#include "abcat/homology.hpp"

#include <algorithm>

namespace abcat {

void ExactChain::verify() const {
  if (mods.size() != maps.size() + 1) throw invariant_error("chain: size mismatch");
  for (std::size_t i = 0; i + 1 < maps.size(); ++i)
    if (!(maps[i].m * maps[i + 1].m).is_zero()) throw invariant_error("chain: composite not zero");
  for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
    const Mat im = row_space(maps[i].m);
    const Mat ker = left_kernel(maps[i + 1].m);
    if (im.rows() != ker.rows() || !row_space_contains(ker, im))
      throw invariant_error("chain: homology does not vanish at position " + std::to_string(i + 1));
  }
  if (!maps.empty()) {
    if (exact_at_left && rank(maps.front().m) != mods.front().dim())
      throw invariant_error("chain: first map not mono");
    if (exact_at_right && rank(maps.back().m) != mods.back().dim())
      throw invariant_error("chain: last map not epi");
  }
}

Module regular_module(const Algebra::Ptr& alg) {
  std::vector<Mat> action;
  action.reserve(alg->dim());
  for (std::size_t k = 0; k < alg->dim(); ++k) action.push_back(alg->right_mult_matrix(alg->unit_row(k)));
  return Module(alg, std::move(action), alg->name().empty() ? "A" : alg->name());
}

ProjectiveModule projective_module(const Algebra::Ptr& alg, std::size_t vertex) {
  const std::size_t e = alg->idempotents().at(vertex);
  ProjectiveModule p;
  p.vertex = vertex;
  // e*A = row space of left multiplication by e, as a submodule of the
  // regular module (rref rows; for path bases these are unit rows of paths)
  p.rows = row_space(alg->left_mult_matrix(alg->unit_row(e)));
  const SubQuot sub = submodule(regular_module(alg), p.rows, "P" + std::to_string(vertex + 1));
  p.mod = sub.mod;
  const auto g = express_in_rows(p.rows, alg->unit_row(e));
  if (!g) throw invariant_error("projective_module: idempotent not in e*A");
  p.generator_coords = *g;
  return p;
}

Module injective_module(const Algebra::Ptr& alg, std::size_t vertex) {
  const ProjectiveModule pop = projective_module(alg->opposite(), vertex);
  Module inj = dual_module(pop.mod);
  return inj.with_label("I" + std::to_string(vertex + 1));
}

Mat radical_rows_of(const Module& m) {
  const Mat& rad = m.algebra()->radical_rows();
  const FieldSpec f = m.algebra()->field();
  Mat stacked(0, m.dim(), f);
  for (std::size_t r = 0; r < rad.rows(); ++r) stacked = stacked.vstack(m.action_of(rad.row(r)));
  if (stacked.rows() == 0) return Mat(0, m.dim(), f);
  return row_space(stacked);
}

Mat socle_rows_of(const Module& m) {
  const Mat& rad = m.algebra()->radical_rows();
  const FieldSpec f = m.algebra()->field();
  Mat stacked(0, 0, f);
  for (std::size_t r = 0; r < rad.rows(); ++r) {
    const Mat a = m.action_of(rad.row(r));
    stacked = stacked.rows() ? stacked.hstack(a) : a;
  }
  if (stacked.rows() == 0) return Mat::identity(m.dim(), f);
  return left_kernel(stacked);
}

std::size_t loewy_length(const Module& m) {
  if (m.dim() == 0) return 0;
  Mat cur = Mat::identity(m.dim(), m.algebra()->field());
  std::size_t l = 0;
  while (cur.rows() > 0) {
    ++l;
    // cur * rad
    const Mat& rad = m.algebra()->radical_rows();
    Mat next(0, m.dim(), m.algebra()->field());
    for (std::size_t r = 0; r < rad.rows(); ++r) next = next.vstack(cur * m.action_of(rad.row(r)));
    cur = next.rows() ? row_space(next) : next;
    if (l > m.dim() + 1) throw invariant_error("loewy_length: radical not nilpotent on module");
  }
  return l;
}

Cover projective_cover(const Module& m) {
  const Algebra::Ptr alg = m.algebra();
  const FieldSpec f = alg->field();
  const Mat radm = radical_rows_of(m);
  Cover c;
  std::vector<Module> parts;
  std::vector<Mat> reps;  // chosen top representatives, one row each
  for (std::size_t t = 0; t < alg->idempotents().size(); ++t) {
    const Mat mt = row_space(m.action(alg->idempotents()[t]));
    const Mat radt = radm.rows() ? row_space(radm * m.action(alg->idempotents()[t])) : Mat(0, m.dim(), f);
    Mat acc = radt;
    for (std::size_t i = 0; i < mt.rows(); ++i) {
      const Mat cand = mt.row(i);
      if (rank(acc.vstack(cand)) > acc.rows()) {
        acc = row_space(acc.vstack(cand));
        c.vertices.push_back(t);
        reps.push_back(cand);
      }
    }
  }
  // assemble (+) P_t and the covering map
  std::size_t total = 0;
  std::vector<ProjectiveModule> projs;
  for (std::size_t s = 0; s < c.vertices.size(); ++s) {
    projs.push_back(projective_module(alg, c.vertices[s]));
    c.offsets.push_back(total);
    total += projs[s].mod.dim();
    c.summand_rows.push_back(projs[s].rows);
  }
  std::vector<Module> mods;
  for (auto& p : projs) mods.push_back(p.mod);
  Module proj = mods.empty() ? Module::zero(alg) : direct_sum(mods).total;
  Mat map(total, m.dim(), f);
  for (std::size_t s = 0; s < projs.size(); ++s)
    for (std::size_t q = 0; q < projs[s].mod.dim(); ++q) {
      // coordinate q is the algebra element projs[s].rows.row(q); the cover
      // sends e_t |-> rep, hence q |-> rep . elem
      const Mat row = reps[s] * m.action_of(projs[s].rows.row(q));
      for (std::size_t j = 0; j < m.dim(); ++j) map.at(c.offsets[s] + q, j) = row.at(0, j);
    }
  c.proj = proj;
  c.onto = Morphism(proj, m, std::move(map));
  if (rank(c.onto.m) != m.dim()) throw invariant_error("projective cover not surjective");
  return c;
}

SyzygyStep syzygy_step(const Module& m) {
  SyzygyStep s{projective_cover(m), Module(), Morphism()};
  SubQuot k = kernel_module(s.cover.onto, "O(" + m.label() + ")");
  s.syzygy = k.mod;
  s.incl = k.map;
  return s;
}

SyzygyResult syzygy(const Module& m, long k) {
  SyzygyResult out;
  if (k == 0) {
    out.mod = m;
    out.witness.mods = {m};
    return out;
  }
  if (k > 0) {
    std::vector<Module> ps;
    std::vector<Morphism> connecting;  // P_i -> P_{i-1} (or onto m)
    Module cur = m;
    Morphism prev_incl;  // syzygy -> previous cover
    for (long i = 0; i < k; ++i) {
      SyzygyStep st = syzygy_step(cur);
      if (i == 0)
        connecting.push_back(st.cover.onto);
      else
        connecting.push_back(compose(st.cover.onto, prev_incl));
      ps.push_back(st.cover.proj);
      prev_incl = st.incl;
      cur = st.syzygy;
      if (cur.dim() == 0) {
        // pad remaining steps with zero modules: resolution already ended
        for (long j = i + 1; j < k; ++j) {
          ps.push_back(Module::zero(m.algebra()));
          connecting.push_back(zero_morphism(ps.back(), ps[ps.size() - 2]));
        }
        prev_incl = zero_morphism(cur, ps.back());
        break;
      }
    }
    out.mod = cur.with_label("O^" + std::to_string(k) + "(" + m.label() + ")");
    // chain: O^k -> P_{k-1} -> ... -> P_0 -> M
    out.witness.mods.push_back(out.mod);
    out.witness.maps.push_back(Morphism(out.mod, ps.back(), prev_incl.m));
    for (std::size_t i = ps.size(); i-- > 0;) {
      out.witness.mods.push_back(ps[i]);
      out.witness.maps.push_back(connecting[i]);
    }
    out.witness.mods.push_back(m);
    return out;
  }
  // cosyzygy: dualize, take syzygies over the opposite, dualize back
  SyzygyResult dualres = syzygy(dual_module(m), -k);
  out.mod = dual_module(dualres.mod).with_label("O^" + std::to_string(k) + "(" + m.label() + ")");
  // witness: M -> P^0 -> ... -> O^{-k}; duals of the syzygy chain maps
  const ExactChain& w = dualres.witness;
  for (std::size_t i = w.mods.size(); i-- > 0;) out.witness.mods.push_back(dual_module(w.mods[i]));
  for (std::size_t i = w.maps.size(); i-- > 0;) out.witness.maps.push_back(dual_morphism(w.maps[i]));
  out.witness.exact_at_left = false;  // left approximations need not be mono in general
  return out;
}

std::size_t ext_dim(std::size_t i, const Module& m, const Module& n) {
  if (m.algebra() != n.algebra()) throw input_error("ext_dim: owner algebras differ");
  if (i == 0) return hom_dim(m, n);
  // walk to the i-th syzygy, keeping the inclusion into the (i-1)-th cover
  Module cur = m;
  Morphism incl;
  Module cover_prev;
  for (std::size_t s = 0; s < i; ++s) {
    SyzygyStep st = syzygy_step(cur);
    incl = st.incl;
    cover_prev = st.cover.proj;
    cur = st.syzygy;
    if (cur.dim() == 0) return 0;
  }
  const std::vector<Morphism> homs = hom_basis(cur, n);
  if (homs.empty()) return 0;
  const std::vector<Morphism> lift = hom_basis(cover_prev, n);
  const FieldSpec f = m.algebra()->field();
  Mat all(homs.size() + lift.size(), cur.dim() * n.dim(), f);
  for (std::size_t k = 0; k < lift.size(); ++k) {
    const Mat r = (incl.m * lift[k].m).vectorized();
    for (std::size_t j = 0; j < r.cols(); ++j) all.at(k, j) = r.at(0, j);
  }
  const std::size_t restricted = rank(all.submatrix(0, 0, lift.size(), all.cols()));
  for (std::size_t k = 0; k < homs.size(); ++k) {
    const Mat r = homs[k].m.vectorized();
    for (std::size_t j = 0; j < r.cols(); ++j) all.at(lift.size() + k, j) = r.at(0, j);
  }
  return rank(all) - restricted;
}

std::string DimWitness::str() const {
  switch (kind) {
    case Kind::finite:
      return std::to_string(value);
    case Kind::infinite:
      return "infinite (O^" + std::to_string(period_i) + " ~ O^" + std::to_string(period_j) + ")";
    default:
      return "unknown";
  }
}

DimWitness projective_dimension(const Module& m, std::size_t cutoff) {
  DimWitness w;
  if (m.dim() == 0) {
    w.kind = DimWitness::Kind::finite;
    w.value = 0;
    return w;
  }
  std::vector<Module> syz{m};
  Module cur = m;
  for (std::size_t k = 1; k <= cutoff; ++k) {
    cur = syzygy_step(cur).syzygy;
    if (cur.dim() == 0) {
      w.kind = DimWitness::Kind::finite;
      w.value = k - 1;
      return w;
    }
    for (std::size_t i = 0; i < syz.size(); ++i) {
      if (syz[i].dim() != cur.dim() || syz[i].idem_dims() != cur.idem_dims()) continue;
      if (modules_isomorphic(syz[i], cur)) {
        w.kind = DimWitness::Kind::infinite;
        w.period_i = i;
        w.period_j = k;
        return w;
      }
    }
    syz.push_back(cur);
  }
  w.kind = DimWitness::Kind::unknown;
  w.value = cutoff;
  return w;
}

DimWitness injective_dimension(const Module& m, std::size_t cutoff) {
  return projective_dimension(dual_module(m), cutoff);
}

HomDimReport homological_dims(const Module& m, std::size_t cutoff) {
  return {projective_dimension(m, cutoff), injective_dimension(m, cutoff)};
}

bool modules_isomorphic(const Module& m, const Module& n) {
  if (m.algebra() != n.algebra()) throw input_error("modules_isomorphic: owner algebras differ");
  if (m.dim() != n.dim()) return false;
  if (m.dim() == 0) return true;
  if (m.idem_dims() != n.idem_dims()) return false;
  const FieldSpec f = m.algebra()->field();
  const DirectSum u = direct_sum({m, n});
  const HomSpace es = hom_space(u.total, u.total);
  const std::size_t r = es.basis.size();
  if (r == 0) return false;
  std::vector<Mat> mats;
  mats.reserve(r);
  for (const auto& b : es.basis) mats.push_back(b.m);
  const Mat rad_coords = matrix_algebra_radical_coords(mats);
  const Mat comp = complement_rows(rad_coords, r, f);
  const Mat t = rad_coords.vstack(comp);
  const auto tinv = inverse(t);
  if (!tinv) throw invariant_error("modules_isomorphic: basis completion failed");
  const Mat proj_cols = tinv->submatrix(0, rad_coords.rows(), r, comp.rows());
  const std::size_t md = m.dim();
  auto block_dims = [&](std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) {
    Mat rows(0, comp.rows(), f);
    for (const auto& b : es.basis) {
      Mat sliced(u.total.dim(), u.total.dim(), f);
      for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) sliced.at(r0 + i, c0 + j) = b.m.at(r0 + i, c0 + j);
      rows = rows.vstack(es.coords_of(sliced) * proj_cols);
    }
    return rank(rows);
  };
  const std::size_t dee = block_dims(0, 0, md, md);
  const std::size_t def = block_dims(0, md, md, n.dim());
  const std::size_t dff = block_dims(md, md, n.dim(), n.dim());
  return dee == def && def == dff;
}

std::size_t top_end_dim(const Module& m) {
  const std::vector<Morphism> endb = hom_basis(m, m);
  if (endb.empty()) return 0;
  std::vector<Mat> mats;
  for (const auto& b : endb) mats.push_back(b.m);
  const Mat rad = matrix_algebra_radical_coords(mats);
  return endb.size() - rad.rows();
}

namespace {

// split off one copy of the indecomposable x (local End) from m, if possible
struct SplitOff {
  bool found = false;
  Module complement;
};

SplitOff split_off_member(const Module& x, const Module& m) {
  SplitOff out;
  if (x.dim() == 0 || m.dim() < x.dim()) return out;
  const std::vector<Morphism> us = hom_basis(x, m);
  if (us.empty()) return out;
  const std::vector<Morphism> vs = hom_basis(m, x);
  for (const auto& u : us)
    for (const auto& v : vs) {
      const Mat w = u.m * v.m;  // endo of x
      const auto winv = inverse(w);
      if (!winv) continue;
      // idempotent on m projecting onto the copy of x
      const Mat q = (v.m * *winv) * u.m;
      const Mat comp_rows = left_kernel(q);
      out.found = true;
      out.complement = submodule(m, comp_rows, m.label()).mod;
      return out;
    }
  return out;
}

}  // namespace

AddDecomposition add_decompose(const Module& m, const std::vector<Module>& members) {
  AddDecomposition d;
  d.multiplicities.assign(members.size(), 0);
  Module cur = m;
  bool progress = true;
  while (progress && cur.dim() > 0) {
    progress = false;
    for (std::size_t j = 0; j < members.size(); ++j) {
      SplitOff s = split_off_member(members[j], cur);
      while (s.found) {
        ++d.multiplicities[j];
        cur = s.complement;
        progress = true;
        if (cur.dim() == 0) break;
        s = split_off_member(members[j], cur);
      }
      if (cur.dim() == 0) break;
    }
  }
  d.residual = cur;
  d.in_add = (cur.dim() == 0);
  return d;
}

Approximation right_approximation(const std::vector<Module>& members, const Module& m, bool minimal) {
  const Algebra::Ptr alg = m.algebra();
  const FieldSpec f = alg->field();
  Approximation ap;
  std::vector<std::vector<Morphism>> bases;
  for (const Module& x : members) bases.push_back(hom_basis(x, m));
  std::vector<std::vector<Mat>> chosen(members.size());  // morphism matrices per member
  if (!minimal) {
    for (std::size_t j = 0; j < members.size(); ++j)
      for (const auto& b : bases[j]) chosen[j].push_back(b.m);
  } else {
    // right-minimal approximation = minimal generators of (+)_j Hom(X_j, M)
    // over End((+) X_j): quotient out precompositions with radical maps
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (bases[j].empty()) continue;
      const std::size_t nb = bases[j].size();
      // coordinates w.r.t. bases[j] via a hom space for cheap readout
      const HomSpace hs = hom_space(members[j], m);
      Mat radspan(0, nb, f);
      for (std::size_t i = 0; i < members.size(); ++i) {
        // radical maps X_j -> X_i: all of Hom for i != j, rad End for i = j
        std::vector<Mat> rads;
        if (i != j) {
          for (const auto& r : hom_basis(members[j], members[i])) rads.push_back(r.m);
        } else {
          const std::vector<Morphism> endb = hom_basis(members[j], members[j]);
          if (!endb.empty()) {
            std::vector<Mat> mats;
            for (const auto& b : endb) mats.push_back(b.m);
            const Mat radc = matrix_algebra_radical_coords(mats);
            for (std::size_t rr = 0; rr < radc.rows(); ++rr) {
              Mat acc(members[j].dim(), members[j].dim(), f);
              for (std::size_t k = 0; k < mats.size(); ++k)
                if (!radc.at(rr, k).is_zero()) acc = acc + mats[k].scaled(radc.at(rr, k));
              rads.push_back(acc);
            }
          }
        }
        for (const Mat& r : rads)
          for (const auto& u : bases[i]) radspan = radspan.vstack(hs.coords_of(r * u.m));
      }
      const Mat radred = radspan.rows() ? row_space(radspan) : Mat(0, nb, f);
      Mat acc = radred;
      for (std::size_t k = 0; k < nb; ++k) {
        Mat cand(1, nb, f);
        cand.at(0, k) = Scalar::one(f);
        if (rank(acc.vstack(cand)) > acc.rows()) {
          acc = row_space(acc.vstack(cand));
          chosen[j].push_back(bases[j][k].m);
        }
      }
    }
  }
  std::vector<Module> parts;
  std::vector<Mat> part_maps;
  for (std::size_t j = 0; j < members.size(); ++j)
    for (const Mat& mm : chosen[j]) {
      ap.member_of_summand.push_back(j);
      parts.push_back(members[j]);
      part_maps.push_back(mm);
    }
  if (parts.empty()) {
    ap.src = Module::zero(alg);
    ap.map = zero_morphism(ap.src, m);
    ap.offsets = {};
    ap.surjective = (m.dim() == 0);
    return ap;
  }
  const DirectSum ds = direct_sum(parts);
  Mat big(ds.total.dim(), m.dim(), f);
  for (std::size_t s = 0; s < parts.size(); ++s)
    for (std::size_t i = 0; i < parts[s].dim(); ++i)
      for (std::size_t j = 0; j < m.dim(); ++j) big.at(ds.offsets[s] + i, j) = part_maps[s].at(i, j);
  ap.src = ds.total;
  ap.offsets = ds.offsets;
  ap.map = Morphism(ap.src, m, std::move(big));
  ap.surjective = (rank(ap.map.m) == m.dim());
  return ap;
}

LeftApproximation left_approximation(const std::vector<Module>& members, const Module& m, bool minimal) {
  std::vector<Module> dual_members;
  for (const Module& x : members) dual_members.push_back(dual_module(x));
  const Approximation ra = right_approximation(dual_members, dual_module(m), minimal);
  LeftApproximation la;
  // dualizing back: D(ra.src) = (+) members in the same order
  std::vector<Module> parts;
  for (std::size_t s : ra.member_of_summand) parts.push_back(members[s]);
  la.member_of_summand = ra.member_of_summand;
  la.tgt = parts.empty() ? Module::zero(m.algebra()) : direct_sum(parts).total;
  la.map = Morphism(m, la.tgt, ra.map.m.transpose());
  la.injective = (rank(la.map.m) == m.dim());
  return la;
}

bool is_right_approximation(const std::vector<Module>& members, const Morphism& app) {
  for (const Module& x : members)
    for (const auto& u : hom_basis(x, app.tgt))
      if (!factor_through(app, u)) return false;
  return true;
}

std::vector<Module> all_projectives(const Algebra::Ptr& alg) {
  std::vector<Module> out;
  for (std::size_t t = 0; t < alg->idempotents().size(); ++t) out.push_back(projective_module(alg, t).mod);
  return out;
}

std::vector<Module> all_injectives(const Algebra::Ptr& alg) {
  std::vector<Module> out;
  for (std::size_t t = 0; t < alg->idempotents().size(); ++t) out.push_back(injective_module(alg, t));
  return out;
}

}  // namespace abcat
