#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lindim/matrix.hpp"

namespace lindim {

// Subspace of F^n held as a basis in reduced row echelon form with no zero
// rows.  The representation is canonical, so equality is bytewise and any
// two routines that compute the same subspace produce identical objects.
class SubspaceGF {
public:
  SubspaceGF() = default;
  static SubspaceGF zero(const Field& f, std::size_t ambient);
  static SubspaceGF full(const Field& f, std::size_t ambient);
  static SubspaceGF from_rows(const MatrixGF& rows);
  static SubspaceGF span_of(const Field& f, std::size_t ambient,
                            const std::vector<std::vector<Fel>>& vectors);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const MatrixGF& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // v minus its projection onto the pivot coordinates; zero iff v lies in
  // the subspace.
  std::vector<Fel> reduce(std::vector<Fel> v) const;
  bool contains_vector(const std::vector<Fel>& v) const;
  bool contains(const SubspaceGF& other) const;

  bool operator==(const SubspaceGF& o) const;
  bool operator!=(const SubspaceGF& o) const { return !(*this == o); }
  // total order: (ambient, dim, basis entries); used for canonical sorting
  bool operator<(const SubspaceGF& o) const;

private:
  std::size_t ambient_ = 0;
  MatrixGF basis_;
  std::vector<std::size_t> pivots_;
};

SubspaceGF subspace_sum(const SubspaceGF& a, const SubspaceGF& b);
// Zassenhaus intersection.
SubspaceGF subspace_intersect(const SubspaceGF& a, const SubspaceGF& b);
// Orthogonal complement under the standard bilinear form sum(x_i y_i).
SubspaceGF subspace_perp(const SubspaceGF& u);

// Projection F^n -> F^(n-d) with kernel exactly u, as an n x (n-d) matrix Q
// acting on row vectors (v -> v Q).  Coordinates are the non-pivot columns
// of u's basis after reduction modulo u, in increasing column order.
MatrixGF quotient_coords(const SubspaceGF& u);

}  // namespace lindim
