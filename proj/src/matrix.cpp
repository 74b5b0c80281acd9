#include "abcat/matrix.hpp"

#include <sstream>

namespace abcat {

Mat Mat::identity(std::size_t n, FieldSpec f) {
  Mat m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Mat Mat::from_ints(std::size_t rows, std::size_t cols, FieldSpec f, const std::vector<long>& v) {
  if (v.size() != rows * cols) throw input_error("from_ints: entry count mismatch");
  Mat m(rows, cols, f);
  for (std::size_t i = 0; i < v.size(); ++i) m.e_[i] = Scalar::from_int(f, v[i]);
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw input_error("matrix product: inner dimensions differ");
  Mat r(rows_, o.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (!b.is_zero()) r.at(i, j) += a * b;
      }
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw input_error("matrix sum: shape mismatch");
  Mat r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw input_error("matrix difference: shape mismatch");
  Mat r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

Mat Mat::scaled(const Scalar& c) const {
  Mat r = *this;
  for (auto& x : r.e_) x *= c;
  return r;
}

Mat Mat::transpose() const {
  Mat r(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Mat::operator==(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

bool Mat::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

Mat Mat::vstack(const Mat& o) const {
  if (rows_ == 0 && cols_ == 0) return o;
  if (o.rows_ == 0 && o.cols_ == 0) return *this;
  if (cols_ != o.cols_) throw input_error("vstack: column counts differ");
  Mat r(rows_ + o.rows_, cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
  return r;
}

Mat Mat::hstack(const Mat& o) const {
  if (rows_ == 0 && cols_ == 0) return o;
  if (o.rows_ == 0 && o.cols_ == 0) return *this;
  if (rows_ != o.rows_) throw input_error("hstack: row counts differ");
  Mat r(rows_, cols_ + o.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

Mat Mat::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw invariant_error("submatrix out of range");
  Mat r(nr, nc, field_);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) r.at(i, j) = at(r0 + i, c0 + j);
  return r;
}

Mat Mat::reshaped(std::size_t rows, std::size_t cols) const {
  if (rows * cols != rows_ * cols_) throw invariant_error("reshape size mismatch");
  Mat r(rows, cols, field_);
  r.e_ = e_;
  return r;
}

Scalar Mat::trace_of_product(const Mat& o) const {
  if (cols_ != o.rows_ || rows_ != o.cols_) throw input_error("trace_of_product: shape mismatch");
  Scalar t = Scalar::zero(field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (!a.is_zero()) t += a * o.at(k, i);
    }
  return t;
}

std::string Mat::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).str();
  }
  os << "]";
  return os.str();
}

RrefResult rref(const Mat& m) {
  RrefResult r{m, {}, 0};
  Mat& a = r.m;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a.at(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t j = col; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(row, j));
    const Scalar inv = a.at(row, col).inv();
    for (std::size_t j = col; j < a.cols(); ++j) a.at(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a.at(i, col).is_zero()) continue;
      const Scalar f = a.at(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(row, j);
    }
    r.pivots.push_back(col);
    ++row;
  }
  r.rank = r.pivots.size();
  return r;
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw input_error("solve: A and B row counts differ");
  const RrefResult r = rref(a.hstack(b));
  // any pivot inside the B block means inconsistency
  for (std::size_t p : r.pivots)
    if (p >= a.cols()) return std::nullopt;
  Mat x(a.cols(), b.cols(), a.field());
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x.at(r.pivots[i], j) = r.m.at(i, a.cols() + j);
  return x;
}

Mat subspace(const Mat& m, SubspaceKind which) {
  if (which == SubspaceKind::image) {
    const RrefResult r = rref(m);
    Mat im(m.rows(), r.rank, m.field());
    for (std::size_t k = 0; k < r.rank; ++k)
      for (std::size_t i = 0; i < m.rows(); ++i) im.at(i, k) = m.at(i, r.pivots[k]);
    return im;
  }
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  const std::size_t nfree = m.cols() - r.rank;
  Mat ker(m.cols(), nfree, m.field());
  std::size_t k = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    ker.at(j, k) = Scalar::one(m.field());
    for (std::size_t i = 0; i < r.rank; ++i) ker.at(r.pivots[i], k) = -r.m.at(i, j);
    // normalize so the first nonzero entry is 1
    for (std::size_t i = 0; i < m.cols(); ++i) {
      if (!ker.at(i, k).is_zero()) {
        const Scalar inv = ker.at(i, k).inv();
        for (std::size_t t = i; t < m.cols(); ++t) ker.at(t, k) *= inv;
        break;
      }
    }
    ++k;
  }
  return ker;
}

Mat kernel_raw(const Mat& m, std::vector<std::size_t>* free_positions) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  const std::size_t nfree = m.cols() - r.rank;
  Mat ker(m.cols(), nfree, m.field());
  if (free_positions) free_positions->clear();
  std::size_t k = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    ker.at(j, k) = Scalar::one(m.field());
    for (std::size_t i = 0; i < r.rank; ++i) ker.at(r.pivots[i], k) = -r.m.at(i, j);
    if (free_positions) free_positions->push_back(j);
    ++k;
  }
  return ker;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw input_error("inverse: matrix not square");
  const std::size_t n = m.rows();
  const RrefResult r = rref(m.hstack(Mat::identity(n, m.field())));
  // invertible iff the left block carries all n pivots
  for (std::size_t i = 0; i < n; ++i)
    if (i >= r.pivots.size() || r.pivots[i] != i) return std::nullopt;
  return r.m.submatrix(0, n, n, n);
}

bool generic_invertibility(const std::vector<Mat>& basis, std::size_t budget) {
  if (basis.empty()) return false;
  const std::size_t n = basis[0].rows();
  const FieldSpec f = basis[0].field();
  for (const Mat& m : basis)
    if (m.rows() != n || m.cols() != n || m.field() != f)
      throw input_error("generic_invertibility: matrices must be square of equal size");
  if (n == 0) return true;
  for (const Mat& m : basis)
    if (rank(m) == n) return true;
  const std::size_t r = basis.size();
  if (r == 1) return false;
  // common kernel / common cokernel make every combination singular
  {
    Mat stacked = basis[0];
    Mat joined = basis[0];
    for (std::size_t i = 1; i < r; ++i) {
      stacked = stacked.vstack(basis[i]);
      joined = joined.hstack(basis[i]);
    }
    if (rank(stacked) < n || rank(joined) < n) return false;
  }
  // det of a generic combination has degree <= n in each variable, so the
  // full grid {0..n}^r decides exactly
  double grid = 1;
  for (std::size_t i = 0; i < r; ++i) {
    grid *= static_cast<double>(n + 1);
    if (grid > static_cast<double>(budget)) {
      // prime fields also need |grid values| <= p to stay distinct
      throw unsupported_error(
          "generic_invertibility: exact grid exceeds budget; use modules_isomorphic for module data");
    }
  }
  if (f.kind == FieldKind::prime && f.p <= n)
    throw unsupported_error("generic_invertibility: prime field too small for exact grid");
  std::vector<std::size_t> t(r, 0);
  while (true) {
    bool all_zero = true;
    for (std::size_t v : t)
      if (v) {
        all_zero = false;
        break;
      }
    if (!all_zero) {
      Mat comb(n, n, f);
      for (std::size_t i = 0; i < r; ++i)
        if (t[i]) comb = comb + basis[i].scaled(Scalar::from_int(f, static_cast<long>(t[i])));
      if (rank(comb) == n) return true;
    }
    std::size_t pos = 0;
    while (pos < r) {
      if (++t[pos] <= n) break;
      t[pos] = 0;
      ++pos;
    }
    if (pos == r) break;
  }
  return false;
}

Mat row_space(const Mat& rows) {
  const RrefResult r = rref(rows);
  return r.m.submatrix(0, 0, r.rank, rows.cols());
}

Mat left_kernel(const Mat& m) {
  const Mat k = subspace(m.transpose(), SubspaceKind::kernel);
  return row_space(k.transpose());
}

Mat row_space_sum(const Mat& a, const Mat& b) { return row_space(a.vstack(b)); }

Mat row_space_intersect(const Mat& a, const Mat& b) {
  // x in both spans: x = u a = v b; solve [a^T | -b^T] null space
  const Mat at = a.transpose(), bt = b.transpose();
  const Mat ker = subspace(at.hstack(bt.scaled(-Scalar::one(a.field()))), SubspaceKind::kernel);
  // first a.rows() coordinates give u; rows u*a span the intersection
  Mat u(ker.cols(), a.rows(), a.field());
  for (std::size_t c = 0; c < ker.cols(); ++c)
    for (std::size_t i = 0; i < a.rows(); ++i) u.at(c, i) = ker.at(i, c);
  return row_space(u * a);
}

bool row_space_contains(const Mat& amb, const Mat& sub) {
  if (sub.rows() == 0) return true;
  return rank(amb) == rank(amb.vstack(sub));
}

std::optional<Mat> express_in_rows(const Mat& basis_rows, const Mat& v) {
  // X * basis_rows = v  <=>  basis_rows^T X^T = v^T
  const auto xt = solve(basis_rows.transpose(), v.transpose());
  if (!xt) return std::nullopt;
  return xt->transpose();
}

Mat complement_rows(const Mat& rows, std::size_t ambient_dim, FieldSpec f) {
  const Mat rs = row_space(rows.rows() ? rows : Mat(0, ambient_dim, f));
  std::vector<bool> is_pivot(ambient_dim, false);
  {
    const RrefResult r = rref(rs);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
  }
  Mat comp(ambient_dim - rs.rows(), ambient_dim, f);
  std::size_t k = 0;
  for (std::size_t j = 0; j < ambient_dim; ++j) {
    if (is_pivot[j]) continue;
    comp.at(k, j) = Scalar::one(f);
    ++k;
  }
  return comp;
}

}  // namespace abcat
