#pragma once

#include "abcat/functor_module.hpp"

namespace abcat {

// A (possibly truncated) minimal projective resolution over a category
// algebra, with terms recorded as multisets of object labels.
struct ResolutionTrace {
  std::string target;
  std::vector<std::vector<std::size_t>> term_vertices;  // ascending object indices, one per summand
  std::vector<Module> terms;                            // over gamma
  std::vector<Morphism> differentials;                  // [0]: terms[0] -> target carrier; [k]: terms[k] -> terms[k-1]
  std::optional<std::pair<std::size_t, std::size_t>> period;  // O^i ~ O^j, i < j
  std::optional<std::size_t> truncated_at;
  bool finite = false;

  // length when finite: number of nonzero terms minus one (empty = -1 treated as 0-length target)
  std::size_t term_count() const { return terms.size(); }
  std::vector<std::string> labels_of(const CategoryAlgebra& ca, std::size_t k) const;
  std::string label_string(const CategoryAlgebra& ca, std::size_t k) const;
};

ResolutionTrace minimal_resolution_of_carrier(const CategoryAlgebra::Ptr& ca, const Module& carrier,
                                              const std::string& target_desc, std::size_t cutoff,
                                              bool detect_period = true);
ResolutionTrace minimal_resolution(const FunctorModule& f, std::size_t cutoff,
                                   bool detect_period = true);

struct IgVerdict {
  enum class Kind { yes, no, unknown } kind = Kind::unknown;
  std::string str() const;
};

// gd via the projective dimension of every simple functor module; IG via the
// injective dimension of every indecomposable projective on both sides
struct HomologicalReport {
  DimWitness gd;
  std::vector<DimWitness> simple_pd;   // per object
  std::vector<DimWitness> proj_id;     // per object (right side)
  std::vector<DimWitness> op_proj_id;  // per object (left side, via the opposite)
  IgVerdict ig;
  // object index + witness of an infinite id, when ig == no
  std::optional<std::pair<std::string, DimWitness>> ig_witness;
};

HomologicalReport homological_report(const CategoryAlgebra::Ptr& ca, std::size_t cutoff,
                                     unsigned jobs = 1);

}  // namespace abcat
