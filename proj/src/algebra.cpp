#include "abcat/algebra.hpp"

#include <algorithm>

namespace abcat {

namespace {

SparseVec sparse_of_row(const Mat& row) {
  SparseVec v;
  for (std::size_t k = 0; k < row.cols(); ++k)
    if (!row.at(0, k).is_zero()) v.push_back({static_cast<std::uint32_t>(k), row.at(0, k)});
  return v;
}

}  // namespace

Algebra::Ptr Algebra::build(FieldSpec field, std::vector<std::string> labels,
                            std::vector<std::vector<SparseVec>> products,
                            std::vector<std::size_t> idempotents, std::string name) {
  const std::size_t d = labels.size();
  if (products.size() != d) throw input_error("algebra build: product table has wrong size");
  for (const auto& row : products)
    if (row.size() != d) throw input_error("algebra build: product table has wrong size");
  if (idempotents.empty()) throw input_error("algebra build: need at least one idempotent");
  for (std::size_t e : idempotents)
    if (e >= d) throw input_error("algebra build: idempotent index out of range");

  auto a = std::shared_ptr<Algebra>(new Algebra());
  a->field_ = field;
  a->name_ = std::move(name);
  a->labels_ = std::move(labels);
  a->products_ = std::move(products);
  a->idempotents_ = std::move(idempotents);

  // associativity on all basis triples
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (a->products_[i][j].empty()) {
        // (b_i b_j) b_k = 0; check b_i (b_j b_k) too
        for (std::size_t k = 0; k < d; ++k) {
          Mat rhs(1, d, field);
          for (const auto& t : a->products_[j][k]) {
            for (const auto& s : a->products_[i][t.k]) rhs.at(0, s.k) += t.c * s.c;
          }
          if (!rhs.is_zero())
            throw input_error("algebra build: associativity fails at triple (" + a->labels_[i] +
                              ", " + a->labels_[j] + ", " + a->labels_[k] + ")");
        }
        continue;
      }
      for (std::size_t k = 0; k < d; ++k) {
        Mat lhs(1, d, field), rhs(1, d, field);
        for (const auto& t : a->products_[i][j])
          for (const auto& s : a->products_[t.k][k]) lhs.at(0, s.k) += t.c * s.c;
        for (const auto& t : a->products_[j][k])
          for (const auto& s : a->products_[i][t.k]) rhs.at(0, s.k) += t.c * s.c;
        if (lhs != rhs)
          throw input_error("algebra build: associativity fails at triple (" + a->labels_[i] +
                            ", " + a->labels_[j] + ", " + a->labels_[k] + ")");
      }
    }

  // idempotents: orthogonal, idempotent, summing to a two-sided identity
  for (std::size_t x : a->idempotents_)
    for (std::size_t y : a->idempotents_) {
      Mat p = a->elem_product(a->unit_row(x), a->unit_row(y));
      const Mat want = (x == y) ? a->unit_row(x) : Mat(1, d, field);
      if (p != want)
        throw input_error("algebra build: idempotent relation fails for (" + a->labels_[x] +
                          ", " + a->labels_[y] + ")");
    }
  const Mat one = a->identity_row();
  for (std::size_t k = 0; k < d; ++k) {
    const Mat b = a->unit_row(k);
    if (a->elem_product(one, b) != b || a->elem_product(b, one) != b)
      throw input_error("algebra build: idempotents do not sum to an identity (fails on " +
                        a->labels_[k] + ")");
  }

  a->finish();
  return a;
}

Mat Algebra::unit_row(std::size_t k) const {
  Mat r(1, dim(), field_);
  r.at(0, k) = Scalar::one(field_);
  return r;
}

Mat Algebra::identity_row() const {
  Mat r(1, dim(), field_);
  for (std::size_t e : idempotents_) r.at(0, e) = Scalar::one(field_);
  return r;
}

Mat Algebra::elem_product(const Mat& u, const Mat& v) const {
  Mat r(1, dim(), field_);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (u.at(0, i).is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (v.at(0, j).is_zero()) continue;
      const Scalar c = u.at(0, i) * v.at(0, j);
      for (const auto& t : products_[i][j]) r.at(0, t.k) += c * t.c;
    }
  }
  return r;
}

Mat Algebra::left_mult_matrix(const Mat& u) const {
  Mat m(dim(), dim(), field_);
  for (std::size_t j = 0; j < dim(); ++j) {
    for (std::size_t i = 0; i < dim(); ++i) {
      if (u.at(0, i).is_zero()) continue;
      for (const auto& t : products_[i][j]) m.at(j, t.k) += u.at(0, i) * t.c;
    }
  }
  return m;
}

Mat Algebra::right_mult_matrix(const Mat& u) const {
  Mat m(dim(), dim(), field_);
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) {
      if (u.at(0, j).is_zero()) continue;
      for (const auto& t : products_[i][j]) m.at(i, t.k) += u.at(0, j) * t.c;
    }
  }
  return m;
}

Mat Algebra::peirce_piece(const Mat& g, std::size_t src, std::size_t tgt) const {
  return elem_product(unit_row(idempotents_[src]), elem_product(g, unit_row(idempotents_[tgt])));
}

void Algebra::finish() {
  const std::size_t d = dim();
  if (field_.kind == FieldKind::prime && field_.p <= d)
    throw unsupported_error("prime field too small: radical computation needs p > dim = " +
                            std::to_string(d));
  // trace form of the regular representation: G_ij = tr(L_{b_i b_j})
  std::vector<Scalar> trL(d, Scalar::zero(field_));
  for (std::size_t k = 0; k < d; ++k) {
    Scalar t = Scalar::zero(field_);
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& s : products_[k][j])
        if (s.k == j) t += s.c;
    trL[k] = t;
  }
  Mat gram(d, d, field_);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Scalar t = Scalar::zero(field_);
      for (const auto& s : products_[i][j]) t += s.c * trL[s.k];
      gram.at(i, j) = t;
    }
  radical_rows_ = left_kernel(gram);

  // radical mod radical^2
  const std::size_t r = radical_rows_.rows();
  Mat rad2(0, d, field_);
  {
    Mat prods(r * r, d, field_);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        const Mat p = elem_product(radical_rows_.row(i), radical_rows_.row(j));
        for (std::size_t k = 0; k < d; ++k) prods.at(i * r + j, k) = p.at(0, k);
      }
    rad2 = row_space(prods);
  }
  std::vector<Mat> raw_gens;
  {
    Mat acc = rad2;
    for (std::size_t i = 0; i < r; ++i) {
      const Mat cand = radical_rows_.row(i);
      const Mat ext = acc.vstack(cand);
      if (rank(ext) > rank(acc)) {
        raw_gens.push_back(cand);
        acc = row_space(ext);
      }
    }
  }
  // complement of (span of idempotents + radical): nonzero only for
  // non-basic semisimple parts
  {
    Mat span(idempotents_.size(), d, field_);
    for (std::size_t i = 0; i < idempotents_.size(); ++i)
      span.at(i, idempotents_[i]) = Scalar::one(field_);
    Mat acc = row_space(span.vstack(radical_rows_));
    for (std::size_t k = 0; k < d && acc.rows() < d; ++k) {
      const Mat cand = unit_row(k);
      const Mat ext = acc.vstack(cand);
      if (rank(ext) > rank(acc)) {
        raw_gens.push_back(cand);
        acc = row_space(ext);
      }
    }
  }
  // split into directed Peirce pieces
  for (const Mat& g : raw_gens)
    for (std::size_t s = 0; s < idempotents_.size(); ++s)
      for (std::size_t t = 0; t < idempotents_.size(); ++t) {
        Mat piece = peirce_piece(g, s, t);
        if (!piece.is_zero()) generators_.push_back({std::move(piece), s, t});
      }
}

Algebra::Ptr Algebra::opposite() const {
  std::lock_guard<std::mutex> lock(op_mutex_);
  if (auto sp = opposite_.lock()) return sp;
  const std::size_t d = dim();
  auto op = std::shared_ptr<Algebra>(new Algebra());
  op->field_ = field_;
  op->name_ = name_.empty() ? "op" : name_ + "^op";
  op->labels_ = labels_;
  op->idempotents_ = idempotents_;
  op->products_.assign(d, std::vector<SparseVec>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) op->products_[i][j] = products_[j][i];
  op->finish();
  // the pair keeps itself alive for the session so pointer identity of
  // opposite algebras is stable (op of op returns the original object)
  {
    std::lock_guard<std::mutex> lock2(op->op_mutex_);
    op->opposite_ = weak_from_this();
    op->opposite_keep_ = shared_from_this();
  }
  opposite_ = op;
  opposite_keep_ = op;
  return op;
}

bool Algebra::is_opposite_of(const Algebra& o) const {
  if (dim() != o.dim() || field_ != o.field_) return false;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) {
      const SparseVec& a = products_[i][j];
      const SparseVec& b = o.products_[j][i];
      if (a.size() != b.size()) return false;
      for (std::size_t t = 0; t < a.size(); ++t)
        if (a[t].k != b[t].k || a[t].c != b[t].c) return false;
    }
  return true;
}

Mat matrix_algebra_radical_coords(const std::vector<Mat>& basis) {
  if (basis.empty()) return Mat(0, 0, FieldSpec::rationals());
  const FieldSpec f = basis[0].field();
  const std::size_t n = basis[0].rows();
  if (f.kind == FieldKind::prime && f.p <= n)
    throw unsupported_error("prime field too small for matrix-algebra radical (need p > " +
                            std::to_string(n) + ")");
  const std::size_t r = basis.size();
  Mat gram(r, r, f);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) gram.at(i, j) = basis[i].trace_of_product(basis[j]);
  return left_kernel(gram);
}

}  // namespace abcat
