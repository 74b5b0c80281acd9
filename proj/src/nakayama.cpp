#include "abcat/nakayama.hpp"

#include <algorithm>

namespace abcat {

Algebra::Ptr nakayama_algebra(const std::vector<std::size_t>& kupisch, bool cyclic, FieldSpec field) {
  const std::size_t v = kupisch.size();
  if (v == 0) throw input_error("nakayama: empty kupisch series");
  for (std::size_t c : kupisch)
    if (c < 1) throw input_error("nakayama: kupisch entries must be >= 1");
  if (cyclic) {
    for (std::size_t c : kupisch)
      if (c < 2) throw input_error("nakayama: cyclic kupisch entries must be >= 2");
    for (std::size_t i = 0; i < v; ++i)
      if (kupisch[i] > kupisch[(i + 1) % v] + 1)
        throw input_error("nakayama: inadmissible kupisch series at vertex " + std::to_string(i + 1));
  } else {
    if (kupisch[v - 1] != 1)
      throw input_error("nakayama: linear kupisch series must end with 1");
    for (std::size_t i = 0; i + 1 < v; ++i)
      if (kupisch[i] > kupisch[i + 1] + 1)
        throw input_error("nakayama: inadmissible kupisch series at vertex " + std::to_string(i + 1));
  }
  // basis: nonzero paths, indexed by (start vertex, length)
  std::vector<std::vector<std::size_t>> path_index(v);
  std::vector<std::pair<std::size_t, std::size_t>> paths;  // (start, length)
  std::vector<std::string> labels;
  std::vector<std::size_t> idempotents;
  for (std::size_t s = 0; s < v; ++s) {
    for (std::size_t l = 0; l < kupisch[s]; ++l) {
      if (!cyclic && s + l >= v) break;
      path_index[s].push_back(paths.size());
      if (l == 0) {
        idempotents.push_back(paths.size());
        labels.push_back("e" + std::to_string(s + 1));
      } else {
        labels.push_back("w" + std::to_string(s + 1) + ":" + std::to_string(l));
      }
      paths.emplace_back(s, l);
    }
  }
  const std::size_t d = paths.size();
  std::vector<std::vector<SparseVec>> products(d, std::vector<SparseVec>(d));
  const Scalar one = Scalar::one(field);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const auto [si, li] = paths[i];
      const auto [sj, lj] = paths[j];
      // path(si, li) ends at si + li; composable when that is sj
      const std::size_t end = cyclic ? (si + li) % v : si + li;
      if (end != sj) continue;
      const std::size_t total = li + lj;
      if (total < kupisch[si] && (cyclic || si + total < v) && total < path_index[si].size())
        products[i][j].push_back({static_cast<std::uint32_t>(path_index[si][total]), one});
    }
  auto alg = Algebra::build(field, std::move(labels), std::move(products), std::move(idempotents),
                            std::string(cyclic ? "nakayama-cyclic" : "nakayama-linear"));
  // attach the construction data (const_cast is confined to build time)
  auto info = std::make_shared<Algebra::NakayamaInfo>();
  info->cyclic = cyclic;
  info->kupisch = kupisch;
  info->path_index = path_index;
  const_cast<Algebra&>(*alg).attach_nakayama_info(std::move(info));
  return alg;
}

Algebra::Ptr paper_algebra(std::size_t n, FieldSpec field) {
  if (n < 1) throw input_error("paper algebra needs n >= 1");
  return nakayama_algebra({2 * n + 1, 2 * n + 2}, true, field);
}

namespace {

const Algebra::NakayamaInfo& naka_info(const Algebra::Ptr& alg) {
  const auto* info = alg->nakayama_info();
  if (!info)
    throw unsupported_error(
        "operation requires a Nakayama algebra; supply an explicit module list otherwise");
  return *info;
}

}  // namespace

Module uniserial_module(const Algebra::Ptr& alg, std::size_t top_vertex, std::size_t len) {
  const auto& info = naka_info(alg);
  const std::size_t v = info.kupisch.size();
  if (top_vertex >= v) throw input_error("uniserial_module: vertex out of range");
  if (len < 1 || len > info.path_index[top_vertex].size())
    throw input_error("uniserial_module: no uniserial of that length at vertex " +
                      std::to_string(top_vertex + 1));
  const FieldSpec f = alg->field();
  // basis: paths from top_vertex of length 0..len-1
  std::vector<Mat> action(alg->dim(), Mat(len, len, f));
  for (std::size_t a = 0; a < alg->dim(); ++a) {
    for (std::size_t c = 0; c < len; ++c) {
      const std::size_t path = info.path_index[top_vertex][c];
      for (const auto& t : alg->product(path, a)) {
        // product is a path from top_vertex of some length
        for (std::size_t l2 = 0; l2 < len; ++l2)
          if (info.path_index[top_vertex][l2] == t.k) action[a].at(c, l2) += t.c;
      }
    }
  }
  const std::size_t soc = info.cyclic ? (top_vertex + len - 1) % v : top_vertex + len - 1;
  Module m(alg, std::move(action),
           "[" + std::to_string(soc + 1) + "]_" + std::to_string(len));
  return m;
}

std::vector<Module> enumerate_indecomposables(const Algebra::Ptr& alg) {
  const auto& info = naka_info(alg);
  const std::size_t v = info.kupisch.size();
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Module>> mods;  // key (socle, len)
  for (std::size_t t = 0; t < v; ++t)
    for (std::size_t len = 1; len <= info.path_index[t].size(); ++len) {
      Module m = uniserial_module(alg, t, len);
      const std::size_t soc = info.cyclic ? (t + len - 1) % v : t + len - 1;
      mods.push_back({{soc, len}, m});
    }
  std::sort(mods.begin(), mods.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Module> out;
  for (auto& [k, m] : mods) out.push_back(std::move(m));
  return out;
}

std::size_t socle_vertex(const Module& m) {
  const Mat soc = socle_rows_of(m);
  const auto& idems = m.algebra()->idempotents();
  std::optional<std::size_t> vtx;
  for (std::size_t t = 0; t < idems.size(); ++t) {
    if (!(soc * m.action(idems[t])).is_zero()) {
      if (vtx) throw input_error("socle_vertex: socle is not simple");
      vtx = t;
    }
  }
  if (!vtx) throw input_error("socle_vertex: zero module");
  if (soc.rows() != 1) throw input_error("socle_vertex: socle is not simple");
  return *vtx;
}

std::size_t top_vertex_of(const Module& m) { return socle_vertex(dual_module(m)); }

Module transpose_module(const Module& m) {
  const Algebra::Ptr alg = m.algebra();
  const Algebra::Ptr op = alg->opposite();
  const FieldSpec f = alg->field();
  if (m.dim() == 0) return Module::zero(op, "Tr(0)");
  const SyzygyStep s0 = syzygy_step(m);
  if (s0.syzygy.dim() == 0) return Module::zero(op, "Tr(" + m.label() + ")");
  const SyzygyStep s1 = syzygy_step(s0.syzygy);
  // presentation p: P1 -> P0 with matrix over the module bases
  const Morphism p = compose(s1.cover.onto, s0.incl);
  const Cover& c1 = s1.cover;
  const Cover& c0 = s0.cover;
  // dual map over op: (+)_s Pop(t_s) -> (+)_r Pop(u_r), component s->r given by
  // right multiplication with the element x_sr in e_{t_s} A e_{u_r}
  std::vector<ProjectiveModule> p0ops, p1ops;
  std::vector<Module> p0mods, p1mods;
  for (std::size_t s = 0; s < c0.vertices.size(); ++s) {
    p0ops.push_back(projective_module(op, c0.vertices[s]));
    p0mods.push_back(p0ops.back().mod);
  }
  for (std::size_t r = 0; r < c1.vertices.size(); ++r) {
    p1ops.push_back(projective_module(op, c1.vertices[r]));
    p1mods.push_back(p1ops.back().mod);
  }
  const DirectSum d0 = p0mods.empty() ? DirectSum{Module::zero(op), {}, {}, {}} : direct_sum(p0mods);
  const DirectSum d1 = p1mods.empty() ? DirectSum{Module::zero(op), {}, {}, {}} : direct_sum(p1mods);
  Mat dmat(d0.total.dim(), d1.total.dim(), f);
  for (std::size_t r = 0; r < c1.vertices.size(); ++r) {
    // generator coordinate of summand r inside P1, its image element rows
    const ProjectiveModule pr = projective_module(alg, c1.vertices[r]);
    Mat gen(1, p.src.dim(), f);
    for (std::size_t j = 0; j < pr.mod.dim(); ++j) gen.at(0, c1.offsets[r] + j) = pr.generator_coords.at(0, j);
    const Mat img = gen * p.m;  // in P0 coordinates
    for (std::size_t s = 0; s < c0.vertices.size(); ++s) {
      // x_sr as an element of A
      Mat xs(1, alg->dim(), f);
      {
        Mat coords(1, c0.summand_rows[s].rows(), f);
        for (std::size_t j = 0; j < coords.cols(); ++j) coords.at(0, j) = img.at(0, c0.offsets[s] + j);
        xs = coords * c0.summand_rows[s];
      }
      if (xs.is_zero()) continue;
      // component Pop(t_s) -> Pop(u_r): y |-> y *_A x  (left mult by x in op)
      for (std::size_t q = 0; q < p0ops[s].mod.dim(); ++q) {
        const Mat elem = p0ops[s].rows.row(q);           // element of A e_{t_s}
        const Mat prod = alg->elem_product(elem, xs);    // element of A e_{u_r}
        const auto coords = express_in_rows(p1ops[r].rows, prod);
        if (!coords) throw invariant_error("transpose: product left the target projective");
        for (std::size_t j = 0; j < coords->cols(); ++j)
          dmat.at(d0.offsets[s] + q, d1.offsets[r] + j) += coords->at(0, j);
      }
    }
  }
  const Morphism dual_pres(d0.total, d1.total, dmat);
  Module tr = cokernel_module(dual_pres, "Tr(" + m.label() + ")").mod;
  return tr.with_label("Tr(" + m.label() + ")");
}

ArTranslateResult ar_translate(const Module& m, ArDirection dir) {
  ArTranslateResult out;
  if (dir == ArDirection::forward) {
    out.mod = dual_module(transpose_module(m)).with_label("tau(" + m.label() + ")");
  } else {
    out.mod = transpose_module(dual_module(m)).with_label("tau-(" + m.label() + ")");
  }
  // the translate only sees the non-projective (resp. non-injective) part;
  // report how much was split off by comparing with the round trip
  if (out.mod.dim() == 0) {
    out.split_dim = m.dim();
    return out;
  }
  const Module back = dir == ArDirection::forward
                          ? transpose_module(dual_module(out.mod))
                          : dual_module(transpose_module(out.mod));
  out.split_dim = m.dim() - back.dim();
  return out;
}

namespace {

// basis matrices of rad(M, N) inside Hom(M, N), for indecomposables M, N
std::vector<Mat> rad_hom(const Module& m, const Module& n, bool same) {
  std::vector<Mat> out;
  if (!same) {
    for (const auto& h : hom_basis(m, n)) out.push_back(h.m);
    return out;
  }
  const std::vector<Morphism> endb = hom_basis(m, m);
  std::vector<Mat> mats;
  for (const auto& b : endb) mats.push_back(b.m);
  if (mats.empty()) return out;
  const Mat radc = matrix_algebra_radical_coords(mats);
  const FieldSpec f = m.algebra()->field();
  for (std::size_t r = 0; r < radc.rows(); ++r) {
    Mat acc(m.dim(), m.dim(), f);
    for (std::size_t k = 0; k < mats.size(); ++k)
      if (!radc.at(r, k).is_zero()) acc = acc + mats[k].scaled(radc.at(r, k));
    out.push_back(acc);
  }
  return out;
}

}  // namespace

ArQuiver ar_quiver_of(const std::vector<Module>& inds) {
  ArQuiver q;
  const std::size_t n = inds.size();
  for (const Module& m : inds) {
    q.labels.push_back(m.label());
    q.dims.push_back(m.dim());
  }
  if (n == 0) return q;
  const FieldSpec f = inds[0].algebra()->field();
  // rad(M,N) for all pairs
  std::vector<std::vector<std::vector<Mat>>> rad(n, std::vector<std::vector<Mat>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rad[i][j] = rad_hom(inds[i], inds[j], i == j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (rad[i][j].empty()) continue;
      // rad^2(i,j) = sum over z of rad(z,j) . rad(i,z)
      Mat span(0, inds[i].dim() * inds[j].dim(), f);
      for (std::size_t z = 0; z < n; ++z)
        for (const Mat& a : rad[i][z])
          for (const Mat& b : rad[z][j]) span = span.vstack((a * b).vectorized());
      Mat radm(rad[i][j].size(), inds[i].dim() * inds[j].dim(), f);
      for (std::size_t k = 0; k < rad[i][j].size(); ++k) {
        const Mat v = rad[i][j][k].vectorized();
        for (std::size_t c = 0; c < v.cols(); ++c) radm.at(k, c) = v.at(0, c);
      }
      const std::size_t r2 = span.rows() ? rank(span) : 0;
      const std::size_t mult = rank(radm) - r2;
      if (mult > 0) q.arrows.push_back({i, j, mult});
    }
  // tau orbits
  q.tau_of.assign(n, std::nullopt);
  for (std::size_t i = 0; i < n; ++i) {
    const ArTranslateResult t = ar_translate(inds[i], ArDirection::forward);
    if (t.mod.dim() == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (t.mod.dim() == inds[j].dim() && modules_isomorphic(t.mod, inds[j])) {
        q.tau_of[i] = j;
        break;
      }
  }
  return q;
}

ArQuiver ar_quiver(const Algebra::Ptr& alg) { return ar_quiver_of(enumerate_indecomposables(alg)); }

}  // namespace abcat
