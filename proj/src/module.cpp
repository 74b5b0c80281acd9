#include "abcat/module.hpp"

#include <algorithm>

namespace abcat {

Module::Module(Algebra::Ptr alg, std::vector<Mat> action, std::string label) {
  if (!alg) throw invariant_error("module over null algebra");
  if (action.size() != alg->dim()) throw input_error("module: need one action matrix per basis element");
  auto d = std::make_shared<Data>();
  d->alg = std::move(alg);
  d->dim = action.empty() ? 0 : action[0].rows();
  for (const Mat& m : action)
    if (m.rows() != d->dim || m.cols() != d->dim) throw input_error("module: action matrices must be square of equal size");
  d->action = std::move(action);
  d->label = std::move(label);
  data_ = std::move(d);
}

Module Module::zero(Algebra::Ptr alg, std::string label) {
  std::vector<Mat> action(alg->dim(), Mat(0, 0, alg->field()));
  return Module(std::move(alg), std::move(action), std::move(label));
}

Module Module::with_label(std::string label) const {
  Module m = *this;
  auto d = std::make_shared<Data>();
  d->alg = data_->alg;
  d->dim = data_->dim;
  d->action = data_->action;
  d->label = std::move(label);
  m.data_ = std::move(d);
  return m;
}

Mat Module::action_of(const Mat& elem) const {
  const FieldSpec f = algebra()->field();
  Mat r(dim(), dim(), f);
  for (std::size_t k = 0; k < algebra()->dim(); ++k) {
    const Scalar& c = elem.at(0, k);
    if (!c.is_zero()) r = r + action(k).scaled(c);
  }
  return r;
}

const std::vector<std::size_t>& Module::idem_dims() const {
  std::call_once(data_->idem_once, [this] {
    std::vector<std::size_t> v;
    for (std::size_t e : data_->alg->idempotents()) v.push_back(rank(data_->action[e]));
    data_->idem_dims = std::move(v);
  });
  return data_->idem_dims;
}

Morphism::Morphism(Module s, Module t, Mat mat) : src(std::move(s)), tgt(std::move(t)), m(std::move(mat)) {
  if (m.rows() != src.dim() || m.cols() != tgt.dim())
    throw invariant_error("morphism matrix shape does not match the modules");
  if (!src.algebra()->field().operator==(tgt.algebra()->field()))
    throw input_error("morphism across fields");
}

bool Morphism::intertwines() const {
  if (src.algebra() != tgt.algebra()) return false;
  for (std::size_t k = 0; k < src.algebra()->dim(); ++k)
    if (src.action(k) * m != m * tgt.action(k)) return false;
  return true;
}

Morphism identity_morphism(const Module& m) {
  return Morphism(m, m, Mat::identity(m.dim(), m.algebra()->field()));
}

Morphism zero_morphism(const Module& src, const Module& tgt) {
  return Morphism(src, tgt, Mat(src.dim(), tgt.dim(), src.algebra()->field()));
}

Morphism compose(const Morphism& f, const Morphism& g) {
  if (!f.tgt.same_data(g.src) && f.tgt.dim() != g.src.dim())
    throw invariant_error("compose: middle modules differ");
  return Morphism(f.src, g.tgt, f.m * g.m);
}

DirectSum direct_sum(const std::vector<Module>& parts, std::string label) {
  if (parts.empty()) throw input_error("direct_sum of empty list needs an algebra");
  const Algebra::Ptr alg = parts[0].algebra();
  const FieldSpec f = alg->field();
  for (const Module& p : parts)
    if (p.algebra() != alg) throw input_error("direct_sum: mixed owner algebras");
  std::size_t total = 0;
  std::vector<std::size_t> offsets;
  for (const Module& p : parts) {
    offsets.push_back(total);
    total += p.dim();
  }
  std::vector<Mat> action;
  action.reserve(alg->dim());
  for (std::size_t k = 0; k < alg->dim(); ++k) {
    Mat a(total, total, f);
    for (std::size_t s = 0; s < parts.size(); ++s) {
      const Mat& block = parts[s].action(k);
      for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j) a.at(offsets[s] + i, offsets[s] + j) = block.at(i, j);
    }
    action.push_back(std::move(a));
  }
  if (label.empty()) {
    for (std::size_t s = 0; s < parts.size(); ++s) label += (s ? "+" : "") + parts[s].label();
  }
  DirectSum ds;
  ds.total = Module(alg, std::move(action), label);
  ds.offsets = offsets;
  for (std::size_t s = 0; s < parts.size(); ++s) {
    Mat emb(parts[s].dim(), total, f), prj(total, parts[s].dim(), f);
    for (std::size_t i = 0; i < parts[s].dim(); ++i) {
      emb.at(i, offsets[s] + i) = Scalar::one(f);
      prj.at(offsets[s] + i, i) = Scalar::one(f);
    }
    ds.embeddings.emplace_back(parts[s], ds.total, std::move(emb));
    ds.projections.emplace_back(ds.total, parts[s], std::move(prj));
  }
  return ds;
}

SubQuot submodule(const Module& m, const Mat& rows, std::string label) {
  const Mat basis = row_space(rows);
  const Algebra::Ptr alg = m.algebra();
  std::vector<Mat> action;
  action.reserve(alg->dim());
  for (std::size_t k = 0; k < alg->dim(); ++k) {
    const auto expr = express_in_rows(basis, basis * m.action(k));
    if (!expr) throw invariant_error("submodule: row space not action-stable");
    action.push_back(*expr);
  }
  Module sub(alg, std::move(action), std::move(label));
  return {sub, Morphism(sub, m, basis)};
}

SubQuot quotient_module(const Module& m, const Mat& rows, std::string label) {
  const Algebra::Ptr alg = m.algebra();
  const FieldSpec f = alg->field();
  const Mat s = row_space(rows.rows() ? rows : Mat(0, m.dim(), f));
  const Mat c = complement_rows(s, m.dim(), f);
  const Mat t = s.vstack(c);
  const auto tinv = inverse(t);
  if (!tinv) throw invariant_error("quotient_module: basis completion failed");
  const Mat proj = tinv->submatrix(0, s.rows(), m.dim(), c.rows());
  std::vector<Mat> action;
  action.reserve(alg->dim());
  for (std::size_t k = 0; k < alg->dim(); ++k) action.push_back(c * m.action(k) * proj);
  Module q(alg, std::move(action), std::move(label));
  return {q, Morphism(m, q, proj)};
}

SubQuot kernel_module(const Morphism& f, std::string label) {
  return submodule(f.src, left_kernel(f.m), std::move(label));
}

SubQuot image_module(const Morphism& f, std::string label) {
  return submodule(f.tgt, row_space(f.m), std::move(label));
}

SubQuot cokernel_module(const Morphism& f, std::string label) {
  return quotient_module(f.tgt, row_space(f.m), std::move(label));
}

Pushout pushout(const Morphism& f, const Morphism& g) {
  if (!f.src.same_data(g.src)) throw input_error("pushout: sources differ");
  const FieldSpec fl = f.src.algebra()->field();
  DirectSum bc = direct_sum({f.tgt, g.tgt});
  Mat rel(f.src.dim(), bc.total.dim(), fl);
  for (std::size_t i = 0; i < f.src.dim(); ++i) {
    for (std::size_t j = 0; j < f.tgt.dim(); ++j) rel.at(i, j) = f.m.at(i, j);
    for (std::size_t j = 0; j < g.tgt.dim(); ++j) rel.at(i, f.tgt.dim() + j) = -g.m.at(i, j);
  }
  SubQuot q = quotient_module(bc.total, rel, "pushout");
  Pushout out;
  out.mod = q.mod;
  out.from_b = compose(bc.embeddings[0], q.map);
  out.from_c = compose(bc.embeddings[1], q.map);
  return out;
}

Module dual_module(const Module& m) {
  const Algebra::Ptr op = m.algebra()->opposite();
  std::vector<Mat> action;
  action.reserve(op->dim());
  for (std::size_t k = 0; k < op->dim(); ++k) action.push_back(m.action(k).transpose());
  return Module(op, std::move(action), "D(" + m.label() + ")");
}

Morphism dual_morphism(const Morphism& f) {
  return Morphism(dual_module(f.tgt), dual_module(f.src), f.m.transpose());
}

// ---- hom spaces with Peirce-block reduction ----

namespace {

struct Adapted {
  Mat u, uinv;
  std::vector<std::size_t> block_offset;  // per idempotent, plus total at end
};

Adapted adapt(const Module& m) {
  const Algebra::Ptr alg = m.algebra();
  const FieldSpec f = alg->field();
  Adapted a;
  Mat u(0, m.dim(), f);
  for (std::size_t e : alg->idempotents()) {
    a.block_offset.push_back(u.rows());
    u = u.vstack(row_space(m.action(e)));
  }
  a.block_offset.push_back(u.rows());
  if (u.rows() != m.dim())
    throw invariant_error("module does not decompose along the idempotents (not unital?)");
  const auto uinv = inverse(u);
  if (!uinv) throw invariant_error("Peirce adaptation not invertible");
  a.u = std::move(u);
  a.uinv = *uinv;
  return a;
}

}  // namespace

struct HomSpaceInternal {
  Adapted am, an;
  std::vector<std::size_t> free_positions;
  Mat kernel_cols;  // nvars x basis-count
  std::size_t nvars = 0;
  std::vector<std::size_t> var_offset;  // per idempotent block
};

namespace {

// block variable layout: for block t, the (i, j) entry of F_t at
// var_offset[t] + i * n_t + j
std::vector<Morphism> hom_basis_impl(const Module& m, const Module& n, HomSpaceInternal* keep) {
  if (m.algebra() != n.algebra()) throw input_error("hom_basis: owner algebras differ");
  const Algebra::Ptr alg = m.algebra();
  const FieldSpec f = alg->field();
  if (m.dim() == 0 || n.dim() == 0) {
    if (keep) *keep = HomSpaceInternal{};
    return {};
  }
  const Adapted am = adapt(m), an = adapt(n);
  const std::size_t v = alg->idempotents().size();
  std::vector<std::size_t> mdim(v), ndim(v), var_offset(v + 1, 0);
  for (std::size_t t = 0; t < v; ++t) {
    mdim[t] = am.block_offset[t + 1] - am.block_offset[t];
    ndim[t] = an.block_offset[t + 1] - an.block_offset[t];
    var_offset[t + 1] = var_offset[t] + mdim[t] * ndim[t];
  }
  const std::size_t nvars = var_offset[v];
  // equations from directed generators
  std::vector<Mat> eq_rows;
  std::size_t total_rows = 0;
  for (const AlgGenerator& g : alg->generators()) {
    const Mat gm = am.u * m.action_of(g.elem) * am.uinv;
    const Mat gn = an.u * n.action_of(g.elem) * an.uinv;
    const std::size_t s = g.src, t = g.tgt;
    Mat rows(mdim[s] * ndim[t], nvars, f);
    for (std::size_t i = 0; i < mdim[s]; ++i)
      for (std::size_t l = 0; l < ndim[t]; ++l) {
        const std::size_t r = i * ndim[t] + l;
        for (std::size_t j = 0; j < mdim[t]; ++j) {
          const Scalar& c = gm.at(am.block_offset[s] + i, am.block_offset[t] + j);
          if (!c.is_zero()) rows.at(r, var_offset[t] + j * ndim[t] + l) += c;
        }
        for (std::size_t j = 0; j < ndim[s]; ++j) {
          const Scalar& c = gn.at(an.block_offset[s] + j, an.block_offset[t] + l);
          if (!c.is_zero()) rows.at(r, var_offset[s] + i * ndim[s] + j) -= c;
        }
      }
    total_rows += rows.rows();
    eq_rows.push_back(std::move(rows));
  }
  Mat eqs(0, nvars, f);
  for (const Mat& r : eq_rows) eqs = eqs.vstack(r);
  (void)total_rows;
  std::vector<std::size_t> free_positions;
  const Mat ker = kernel_raw(eqs, &free_positions);
  std::vector<Morphism> basis;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    Mat ft(m.dim(), n.dim(), f);
    for (std::size_t t = 0; t < v; ++t)
      for (std::size_t i = 0; i < mdim[t]; ++i)
        for (std::size_t j = 0; j < ndim[t]; ++j)
          ft.at(am.block_offset[t] + i, an.block_offset[t] + j) = ker.at(var_offset[t] + i * ndim[t] + j, c);
    basis.emplace_back(m, n, am.uinv * ft * an.u);
  }
  if (keep) {
    keep->am = am;
    keep->an = an;
    keep->free_positions = std::move(free_positions);
    keep->kernel_cols = ker;
    keep->nvars = nvars;
    keep->var_offset = std::move(var_offset);
  }
  return basis;
}

}  // namespace

std::vector<Morphism> hom_basis(const Module& m, const Module& n) {
  return hom_basis_impl(m, n, nullptr);
}

std::size_t hom_dim(const Module& m, const Module& n) { return hom_basis(m, n).size(); }

HomSpace hom_space(const Module& m, const Module& n) {
  HomSpace hs;
  hs.src = m;
  hs.tgt = n;
  auto keep = std::make_shared<HomSpaceInternal>();
  hs.basis = hom_basis_impl(m, n, keep.get());
  hs.internal = std::move(keep);
  return hs;
}

Mat HomSpace::coords_of(const Mat& morphism_matrix) const {
  const auto& in = *internal;
  const FieldSpec f = src.algebra()->field();
  if (basis.empty()) return Mat(1, 0, f);
  const std::size_t v = src.algebra()->idempotents().size();
  // to adapted block coordinates
  const Mat ft = in.am.u * morphism_matrix * in.an.uinv;
  Mat vars(1, in.nvars, f);
  for (std::size_t t = 0; t < v; ++t) {
    const std::size_t mt = in.am.block_offset[t + 1] - in.am.block_offset[t];
    const std::size_t nt = in.an.block_offset[t + 1] - in.an.block_offset[t];
    for (std::size_t i = 0; i < mt; ++i)
      for (std::size_t j = 0; j < nt; ++j)
        vars.at(0, in.var_offset[t] + i * nt + j) = ft.at(in.am.block_offset[t] + i, in.an.block_offset[t] + j);
  }
  Mat coords(1, basis.size(), f);
  for (std::size_t k = 0; k < basis.size(); ++k) coords.at(0, k) = vars.at(0, in.free_positions[k]);
  return coords;
}

void validate_module(const Module& m, bool full) {
  const Algebra::Ptr alg = m.algebra();
  const FieldSpec f = alg->field();
  // idempotent relations and unitality
  Mat sum(m.dim(), m.dim(), f);
  for (std::size_t e : alg->idempotents()) {
    const Mat& a = m.action(e);
    if (a * a != a) throw invariant_error("module: idempotent does not act idempotently");
    sum = sum + a;
  }
  if (sum != Mat::identity(m.dim(), f)) throw invariant_error("module: idempotents do not act as identity");
  if (full) {
    for (std::size_t i = 0; i < alg->dim(); ++i)
      for (std::size_t j = 0; j < alg->dim(); ++j) {
        Mat want(m.dim(), m.dim(), f);
        for (const auto& t : alg->product(i, j)) want = want + m.action(t.k).scaled(t.c);
        if (m.action(i) * m.action(j) != want)
          throw invariant_error("module: action violates structure constants at (" +
                                alg->labels()[i] + ", " + alg->labels()[j] + ")");
      }
    return;
  }
  // generators x basis suffices: the set of a with action(a b)=action(a)action(b)
  // for all basis b is a subalgebra containing the generators
  std::vector<Mat> gens;
  for (std::size_t e : alg->idempotents()) gens.push_back(alg->unit_row(e));
  for (const AlgGenerator& g : alg->generators()) gens.push_back(g.elem);
  for (const Mat& g : gens) {
    const Mat ag = m.action_of(g);
    for (std::size_t j = 0; j < alg->dim(); ++j) {
      const Mat prod = alg->elem_product(g, alg->unit_row(j));
      if (ag * m.action(j) != m.action_of(prod))
        throw invariant_error("module: action violates structure constants on a generator pair");
    }
  }
}

std::optional<Morphism> factor_through(const Morphism& f, const Morphism& g) {
  // find x: g.src -> f.src with x . f = g
  if (f.tgt.dim() != g.tgt.dim()) throw input_error("factor_through: targets differ");
  const FieldSpec fl = f.src.algebra()->field();
  const std::vector<Morphism> hb = hom_basis(g.src, f.src);
  Mat a(g.src.dim() * f.tgt.dim(), hb.size(), fl);
  for (std::size_t k = 0; k < hb.size(); ++k) {
    const Mat comp = hb[k].m * f.m;
    for (std::size_t i = 0; i < comp.rows(); ++i)
      for (std::size_t j = 0; j < comp.cols(); ++j) a.at(i * comp.cols() + j, k) = comp.at(i, j);
  }
  Mat b(g.src.dim() * f.tgt.dim(), 1, fl);
  for (std::size_t i = 0; i < g.m.rows(); ++i)
    for (std::size_t j = 0; j < g.m.cols(); ++j) b.at(i * g.m.cols() + j, 0) = g.m.at(i, j);
  const auto sol = solve(a, b);
  if (!sol) return std::nullopt;
  Mat x(g.src.dim(), f.src.dim(), fl);
  for (std::size_t k = 0; k < hb.size(); ++k)
    if (!sol->at(k, 0).is_zero()) x = x + hb[k].m.scaled(sol->at(k, 0));
  return Morphism(g.src, f.src, x);
}

std::optional<Morphism> factor_along(const Morphism& f, const Morphism& g) {
  // find x: f.tgt -> g.tgt with f . x = g
  if (f.src.dim() != g.src.dim()) throw input_error("factor_along: sources differ");
  const FieldSpec fl = f.src.algebra()->field();
  const std::vector<Morphism> hb = hom_basis(f.tgt, g.tgt);
  Mat a(f.src.dim() * g.tgt.dim(), hb.size(), fl);
  for (std::size_t k = 0; k < hb.size(); ++k) {
    const Mat comp = f.m * hb[k].m;
    for (std::size_t i = 0; i < comp.rows(); ++i)
      for (std::size_t j = 0; j < comp.cols(); ++j) a.at(i * comp.cols() + j, k) = comp.at(i, j);
  }
  Mat b(f.src.dim() * g.tgt.dim(), 1, fl);
  for (std::size_t i = 0; i < g.m.rows(); ++i)
    for (std::size_t j = 0; j < g.m.cols(); ++j) b.at(i * g.m.cols() + j, 0) = g.m.at(i, j);
  const auto sol = solve(a, b);
  if (!sol) return std::nullopt;
  Mat x(f.tgt.dim(), g.tgt.dim(), fl);
  for (std::size_t k = 0; k < hb.size(); ++k)
    if (!sol->at(k, 0).is_zero()) x = x + hb[k].m.scaled(sol->at(k, 0));
  return Morphism(f.tgt, g.tgt, x);
}

}  // namespace abcat
