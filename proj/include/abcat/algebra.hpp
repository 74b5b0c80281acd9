#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "abcat/matrix.hpp"

namespace abcat {

struct SparseTerm {
  std::uint32_t k;
  Scalar c;
};
using SparseVec = std::vector<SparseTerm>;

// A basis element generator with its Peirce position: g = e_src * g * e_tgt.
struct AlgGenerator {
  Mat elem;  // 1 x dim row vector
  std::size_t src = 0, tgt = 0;  // indices into the idempotent list
};

// A finite dimensional algebra given by structure constants on a fixed basis,
// with a distinguished complete set of orthogonal idempotents.
// Immutable after build; safe to share across threads.
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  using Ptr = std::shared_ptr<const Algebra>;

  // validates associativity, idempotent orthogonality and that the idempotents
  // sum to a two-sided identity; throws input_error naming the offender
  static Ptr build(FieldSpec field, std::vector<std::string> labels,
                   std::vector<std::vector<SparseVec>> products,
                   std::vector<std::size_t> idempotents, std::string name = "");

  FieldSpec field() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::size_t>& idempotents() const { return idempotents_; }
  std::size_t vertex_count() const { return idempotents_.size(); }
  const std::string& name() const { return name_; }

  const SparseVec& product(std::size_t i, std::size_t j) const { return products_[i][j]; }

  // product of elements given as 1 x dim row vectors
  Mat elem_product(const Mat& u, const Mat& v) const;
  Mat unit_row(std::size_t k) const;      // basis element as row vector
  Mat identity_row() const;               // sum of idempotents
  Mat left_mult_matrix(const Mat& u) const;   // dim x dim matrix of x -> u*x
  Mat right_mult_matrix(const Mat& u) const;  // dim x dim matrix of x -> x*u

  // basis of the Jacobson radical, rows in rref (trace form of the regular
  // representation; exact for char 0, and for F_p when p > dim)
  const Mat& radical_rows() const { return radical_rows_; }

  // directed generators: radical mod radical^2 plus a complement of
  // (idempotent span + radical), split into Peirce pieces
  const std::vector<AlgGenerator>& generators() const { return generators_; }

  // e_src * g * e_tgt for a row vector g
  Mat peirce_piece(const Mat& g, std::size_t src, std::size_t tgt) const;

  Ptr opposite() const;
  bool is_opposite_of(const Algebra& o) const;

  // Kupisch data when built by the Nakayama constructor (empty otherwise)
  struct NakayamaInfo {
    bool cyclic = false;
    std::vector<std::size_t> kupisch;
    // path_index[v][l] = basis index of the length-l path starting at vertex v
    std::vector<std::vector<std::size_t>> path_index;
  };
  const NakayamaInfo* nakayama_info() const { return naka_ ? naka_.get() : nullptr; }
  // build-time hook used by the Nakayama constructor
  void attach_nakayama_info(std::shared_ptr<NakayamaInfo> info) { naka_ = std::move(info); }

 private:
  Algebra() = default;
  void finish();  // computes radical and generators

  FieldSpec field_{};
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::vector<SparseVec>> products_;
  std::vector<std::size_t> idempotents_;
  Mat radical_rows_;
  std::vector<AlgGenerator> generators_;
  std::shared_ptr<NakayamaInfo> naka_;

  mutable std::mutex op_mutex_;
  mutable std::weak_ptr<const Algebra> opposite_;
  mutable std::shared_ptr<const Algebra> opposite_keep_;
};

// radical of a matrix algebra given by a spanning set of n x n matrices,
// closed under products; returns coordinates (rows) w.r.t. the given span
Mat matrix_algebra_radical_coords(const std::vector<Mat>& basis);

}  // namespace abcat
