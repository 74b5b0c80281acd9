#include "abcat/resolution.hpp"

#include <algorithm>

#include "abcat/parallel.hpp"

namespace abcat {

std::vector<std::string> ResolutionTrace::labels_of(const CategoryAlgebra& ca, std::size_t k) const {
  std::vector<std::string> out;
  for (std::size_t v : term_vertices[k]) out.push_back(ca.object_label(v));
  return out;
}

std::string ResolutionTrace::label_string(const CategoryAlgebra& ca, std::size_t k) const {
  std::string s;
  for (std::size_t v : term_vertices[k]) s += (s.empty() ? "" : "+") + std::string("P(") + ca.object_label(v) + ")";
  return s.empty() ? "0" : s;
}

ResolutionTrace minimal_resolution_of_carrier(const CategoryAlgebra::Ptr& ca, const Module& carrier,
                                              const std::string& target_desc, std::size_t cutoff,
                                              bool detect_period) {
  ResolutionTrace tr;
  tr.target = target_desc;
  std::vector<Module> syzygies{carrier};  // O^0 = target
  Module cur = carrier;
  Morphism prev_incl;
  for (std::size_t k = 0; k <= cutoff; ++k) {
    if (cur.dim() == 0) {
      tr.finite = true;
      return tr;
    }
    const SyzygyStep st = syzygy_step(cur);
    tr.term_vertices.push_back(st.cover.vertices);
    tr.terms.push_back(st.cover.proj);
    if (k == 0)
      tr.differentials.push_back(st.cover.onto);
    else
      tr.differentials.push_back(compose(st.cover.onto, prev_incl));
    prev_incl = st.incl;
    cur = st.syzygy;
    if (detect_period && cur.dim() > 0) {
      for (std::size_t i = 0; i < syzygies.size(); ++i) {
        if (syzygies[i].dim() != cur.dim() || syzygies[i].idem_dims() != cur.idem_dims()) continue;
        if (modules_isomorphic(syzygies[i], cur)) {
          tr.period = {i, k + 1};
          return tr;
        }
      }
    }
    syzygies.push_back(cur);
  }
  tr.truncated_at = cutoff;
  return tr;
}

ResolutionTrace minimal_resolution(const FunctorModule& f, std::size_t cutoff, bool detect_period) {
  return minimal_resolution_of_carrier(f.ca, f.carrier, f.provenance, cutoff, detect_period);
}

std::string IgVerdict::str() const {
  switch (kind) {
    case Kind::yes:
      return "Iwanaga-Gorenstein";
    case Kind::no:
      return "non Iwanaga-Gorenstein";
    default:
      return "unknown";
  }
}

HomologicalReport homological_report(const CategoryAlgebra::Ptr& ca, std::size_t cutoff,
                                     unsigned jobs) {
  HomologicalReport rep;
  const std::size_t n = ca->object_count();
  rep.simple_pd.assign(n, {});
  rep.proj_id.assign(n, {});
  rep.op_proj_id.assign(n, {});
  const Algebra::Ptr gamma = ca->gamma;
  const Algebra::Ptr gop = gamma->opposite();
  parallel_for(3 * n, jobs, [&](std::size_t t) {
    const std::size_t i = t % n;
    if (t < n) {
      rep.simple_pd[i] = projective_dimension(simple_functor(ca, i).carrier, cutoff);
    } else if (t < 2 * n) {
      rep.proj_id[i] = injective_dimension(projective_module(gamma, i).mod, cutoff);
    } else {
      rep.op_proj_id[i] = injective_dimension(projective_module(gop, i).mod, cutoff);
    }
  });
  // combine gd
  rep.gd.kind = DimWitness::Kind::finite;
  rep.gd.value = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const DimWitness& w = rep.simple_pd[i];
    if (w.kind == DimWitness::Kind::infinite) {
      rep.gd = w;
      break;
    }
    if (w.kind == DimWitness::Kind::unknown) rep.gd.kind = DimWitness::Kind::unknown;
    if (rep.gd.kind == DimWitness::Kind::finite) rep.gd.value = std::max(rep.gd.value, w.value);
  }
  // combine IG
  rep.ig.kind = IgVerdict::Kind::yes;
  for (std::size_t side = 0; side < 2 && rep.ig.kind != IgVerdict::Kind::no; ++side) {
    const auto& ids = side == 0 ? rep.proj_id : rep.op_proj_id;
    for (std::size_t i = 0; i < n; ++i) {
      if (ids[i].kind == DimWitness::Kind::infinite) {
        rep.ig.kind = IgVerdict::Kind::no;
        rep.ig_witness = {std::string(side == 0 ? "P(" : "Pop(") + ca->object_label(i) + ")", ids[i]};
        break;
      }
      if (ids[i].kind == DimWitness::Kind::unknown) rep.ig.kind = IgVerdict::Kind::unknown;
    }
  }
  return rep;
}

}  // namespace abcat
