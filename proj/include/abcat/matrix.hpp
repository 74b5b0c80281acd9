#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "abcat/field.hpp"

namespace abcat {

// Dense matrix over the session field. Row-major.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, FieldSpec f)
      : rows_(rows), cols_(cols), field_(f), e_(rows * cols, Scalar::zero(f)) {}

  static Mat identity(std::size_t n, FieldSpec f);
  static Mat zero(std::size_t rows, std::size_t cols, FieldSpec f) { return Mat(rows, cols, f); }
  // entries given row-major as integers
  static Mat from_ints(std::size_t rows, std::size_t cols, FieldSpec f, const std::vector<long>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const Scalar& c) const;
  Mat transpose() const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }
  bool is_zero() const;

  // stacks o below/right of *this
  Mat vstack(const Mat& o) const;
  Mat hstack(const Mat& o) const;
  Mat submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Mat row(std::size_t i) const { return submatrix(i, 0, 1, cols_); }
  Mat col(std::size_t j) const { return submatrix(0, j, rows_, 1); }
  // reshape a 1xN or Nx1 into rows x cols (row-major)
  Mat reshaped(std::size_t rows, std::size_t cols) const;
  // the matrix as a single row vector, row-major
  Mat vectorized() const { return reshaped(1, rows_ * cols_); }

  Scalar trace_of_product(const Mat& o) const;  // tr(this * o) without forming the product

  std::string str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  FieldSpec field_{};
  std::vector<Scalar> e_;
};

struct RrefResult {
  Mat m;                       // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column per pivot row
  std::size_t rank = 0;
};

// Deterministic Gauss-Jordan: leftmost nonzero column, topmost row.
RrefResult rref(const Mat& m);

std::size_t rank(const Mat& m);

// Solves A X = B exactly. Returns the reduced-echelon particular solution
// (free variables zero), or nullopt when inconsistent.
std::optional<Mat> solve(const Mat& a, const Mat& b);

enum class SubspaceKind { kernel, image };

// kernel: columns form the standard rref null-space basis, each column scaled
// so its first nonzero entry is 1.  image: the pivot columns of m.
Mat subspace(const Mat& m, SubspaceKind which);

// rref null-space basis without the leading-one rescaling: column for free
// variable j has entry 1 at position j (used for cheap coordinate extraction)
Mat kernel_raw(const Mat& m, std::vector<std::size_t>* free_positions = nullptr);

std::optional<Mat> inverse(const Mat& m);

// True iff some linear combination of the given square matrices is invertible.
// Decided exactly by evaluating det on a grid larger than its total degree;
// throws when the exact grid exceeds `budget` points (callers with module
// structure should use modules_isomorphic instead).
bool generic_invertibility(const std::vector<Mat>& basis, std::size_t budget = 400000);

// ---- row-space helpers (module carriers use row vectors) ----

// basis of the row space, as rref rows (canonical)
Mat row_space(const Mat& rows);
// basis of {x : x * m = 0}, as rref rows
Mat left_kernel(const Mat& m);
// sum of row spaces
Mat row_space_sum(const Mat& a, const Mat& b);
// intersection of row spaces
Mat row_space_intersect(const Mat& a, const Mat& b);
// true iff row space of sub is contained in row space of amb
bool row_space_contains(const Mat& amb, const Mat& sub);
// X with X * basis_rows = v (basis_rows has full row rank); nullopt if v outside
std::optional<Mat> express_in_rows(const Mat& basis_rows, const Mat& v);
// deterministic complement: unit rows completing `rows` to the full space
Mat complement_rows(const Mat& rows, std::size_t ambient_dim, FieldSpec f);

}  // namespace abcat
