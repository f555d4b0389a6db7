#include "lindim/subspace.hpp"

#include "lindim/error.hpp"

namespace lindim {

SubspaceGF SubspaceGF::zero(const Field& f, std::size_t ambient) {
  SubspaceGF s;
  s.ambient_ = ambient;
  s.basis_ = MatrixGF(f, 0, ambient);
  return s;
}

SubspaceGF SubspaceGF::full(const Field& f, std::size_t ambient) {
  return from_rows(MatrixGF::identity(f, ambient));
}

SubspaceGF SubspaceGF::from_rows(const MatrixGF& rows) {
  RrefResult rr = rref(rows);
  SubspaceGF s;
  s.ambient_ = rows.cols();
  s.pivots_ = rr.pivots;
  MatrixGF b(rows.field(), rr.pivots.size(), rows.cols());
  for (std::size_t i = 0; i < rr.pivots.size(); ++i)
    for (std::size_t j = 0; j < rows.cols(); ++j) b.set(i, j, rr.mat.at(i, j));
  s.basis_ = std::move(b);
  return s;
}

SubspaceGF SubspaceGF::span_of(const Field& f, std::size_t ambient,
                               const std::vector<std::vector<Fel>>& vectors) {
  MatrixGF rows(f, vectors.size(), ambient);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient)
      fail("DimensionMismatch", "span_of vector length");
    for (std::size_t j = 0; j < ambient; ++j) rows.set(i, j, vectors[i][j]);
  }
  return from_rows(rows);
}

std::vector<Fel> SubspaceGF::reduce(std::vector<Fel> v) const {
  if (v.size() != ambient_) fail("DimensionMismatch", "reduce vector length");
  const Field& f = field();
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Fel c = v[pivots_[i]];
    if (c == 0) continue;
    Fel nc = f.neg(c);
    const Fel* b = basis_.row(i);
    for (std::size_t j = 0; j < ambient_; ++j)
      v[j] = f.add(v[j], f.mul(nc, b[j]));
  }
  return v;
}

bool SubspaceGF::contains_vector(const std::vector<Fel>& v) const {
  std::vector<Fel> r = reduce(v);
  for (Fel x : r)
    if (x) return false;
  return true;
}

bool SubspaceGF::contains(const SubspaceGF& other) const {
  if (other.ambient_ != ambient_) fail("DimensionMismatch", "contains ambient");
  if (other.dim() > dim()) return false;
  for (std::size_t i = 0; i < other.dim(); ++i) {
    std::vector<Fel> v(other.basis_.row(i), other.basis_.row(i) + ambient_);
    if (!contains_vector(v)) return false;
  }
  return true;
}

bool SubspaceGF::operator==(const SubspaceGF& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

bool SubspaceGF::operator<(const SubspaceGF& o) const {
  if (ambient_ != o.ambient_) return ambient_ < o.ambient_;
  if (dim() != o.dim()) return dim() < o.dim();
  return basis_.data() < o.basis_.data();
}

SubspaceGF subspace_sum(const SubspaceGF& a, const SubspaceGF& b) {
  if (a.ambient() != b.ambient() || &a.field() != &b.field())
    fail("DimensionMismatch", "sum of subspaces of different spaces");
  MatrixGF stacked(a.field(), a.dim() + b.dim(), a.ambient());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.ambient(); ++j)
      stacked.set(i, j, a.basis().at(i, j));
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < a.ambient(); ++j)
      stacked.set(a.dim() + i, j, b.basis().at(i, j));
  return SubspaceGF::from_rows(stacked);
}

SubspaceGF subspace_intersect(const SubspaceGF& a, const SubspaceGF& b) {
  if (a.ambient() != b.ambient() || &a.field() != &b.field())
    fail("DimensionMismatch", "intersection of subspaces of different spaces");
  const Field& f = a.field();
  std::size_t n = a.ambient();
  // Zassenhaus: echelonize [[A A],[B 0]]; rows with zero left half carry the
  // intersection in their right half
  MatrixGF block(f, a.dim() + b.dim(), 2 * n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      block.set(i, j, a.basis().at(i, j));
      block.set(i, n + j, a.basis().at(i, j));
    }
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) block.set(a.dim() + i, j, b.basis().at(i, j));
  RrefResult rr = rref(block);
  std::vector<std::vector<Fel>> inter;
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
    if (rr.pivots[i] < n) continue;  // left half nonzero
    std::vector<Fel> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = rr.mat.at(i, n + j);
    inter.push_back(std::move(v));
  }
  return SubspaceGF::span_of(f, n, inter);
}

SubspaceGF subspace_perp(const SubspaceGF& u) {
  if (u.dim() == 0) return SubspaceGF::full(u.field(), u.ambient());
  return SubspaceGF::from_rows(kernel(u.basis()));
}

MatrixGF quotient_coords(const SubspaceGF& u) {
  const Field& f = u.field();
  std::size_t n = u.ambient();
  std::vector<std::size_t> nonpiv;
  {
    std::size_t pi = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (pi < u.pivots().size() && u.pivots()[pi] == c)
        ++pi;
      else
        nonpiv.push_back(c);
    }
  }
  MatrixGF q(f, n, nonpiv.size());
  for (std::size_t j = 0; j < nonpiv.size(); ++j) {
    q.set(nonpiv[j], j, 1);
    for (std::size_t i = 0; i < u.dim(); ++i)
      q.set(u.pivots()[i], j, f.neg(u.basis().at(i, nonpiv[j])));
  }
  return q;
}

}  // namespace lindim
