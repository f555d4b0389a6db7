#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "lindim/gfq.hpp"
#include "lindim/poly.hpp"

namespace lindim {

// Dense row-major matrix over a fixed field.  Vectors are rows throughout
// the project; a module generator acts on the right (v -> v*M).
class MatrixGF {
public:
  MatrixGF() = default;
  MatrixGF(const Field& f, std::size_t rows, std::size_t cols);  // zero
  static MatrixGF identity(const Field& f, std::size_t n);

  const Field& field() const { return *f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Fel at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Fel v) { a_[r * cols_ + c] = v; }
  const Fel* row(std::size_t r) const { return a_.data() + r * cols_; }
  Fel* row(std::size_t r) { return a_.data() + r * cols_; }
  const std::vector<Fel>& data() const { return a_; }

  MatrixGF operator+(const MatrixGF& o) const;
  MatrixGF operator-(const MatrixGF& o) const;
  MatrixGF operator*(const MatrixGF& o) const;
  MatrixGF scale(Fel s) const;
  MatrixGF transpose() const;

  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const MatrixGF& o) const;
  bool operator!=(const MatrixGF& o) const { return !(*this == o); }

private:
  const Field* f_ = nullptr;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Fel> a_;
};

// v * m for a row vector v of length m.rows().
std::vector<Fel> row_times_matrix(const std::vector<Fel>& v, const MatrixGF& m);

struct RrefResult {
  MatrixGF mat;                     // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
  std::size_t rank() const { return pivots.size(); }
};

RrefResult rref(const MatrixGF& m);

// Basis of {v : m v^T = 0} as RREF rows ((cols - rank) x cols).
MatrixGF kernel(const MatrixGF& m);
// Basis of {v : v m = 0}, i.e. kernel of the transpose.
MatrixGF left_kernel(const MatrixGF& m);

bool is_invertible(const MatrixGF& m);
MatrixGF inverse(const MatrixGF& m);  // NotInvertible if singular

// Characteristic polynomial det(xI - m), monic of degree n.  Computed from
// the Krylov cycle decomposition; the product of the per-cycle relation
// polynomials equals the characteristic polynomial of the induced
// block-triangular form.
PolyGF char_poly(const MatrixGF& m);

// Right eigenspace {v : m v^T = lambda v^T} as RREF rows.
MatrixGF eigen_space(const MatrixGF& m, Fel lambda);

// Evaluate a polynomial at a square matrix.
MatrixGF poly_at_matrix(const PolyGF& p, const MatrixGF& m);

// Text format.  First line "rows cols q" (plus " poly c0,c1,..." for
// extension fields), then one line per row, entries space-separated in
// element text form.  Round-trips exactly.
std::string matrix_str(const MatrixGF& m);
MatrixGF matrix_parse(std::istream& in);
MatrixGF matrix_parse(const std::string& text);

}  // namespace lindim
