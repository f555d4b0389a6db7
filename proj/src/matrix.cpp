#include "lindim/matrix.hpp"

#include <sstream>

#include "lindim/error.hpp"

namespace lindim {

namespace {

void check_same_shape(const MatrixGF& a, const MatrixGF& b) {
  if (&a.field() != &b.field() || a.rows() != b.rows() || a.cols() != b.cols())
    fail("DimensionMismatch", "matrix shapes differ");
}

// y += s * x over the field, one row at a time; the prime-field branch keeps
// everything in machine integers.
void row_axpy(const Field& f, Fel s, const Fel* x, Fel* y, std::size_t n) {
  if (s == 0) return;
  if (f.t() == 1) {
    std::uint64_t p = f.p();
    for (std::size_t i = 0; i < n; ++i)
      y[i] = static_cast<Fel>((y[i] + static_cast<std::uint64_t>(s) * x[i]) % p);
  } else {
    for (std::size_t i = 0; i < n; ++i) y[i] = f.add(y[i], f.mul(s, x[i]));
  }
}

}  // namespace

MatrixGF::MatrixGF(const Field& f, std::size_t rows, std::size_t cols)
    : f_(&f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

MatrixGF MatrixGF::identity(const Field& f, std::size_t n) {
  MatrixGF m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

MatrixGF MatrixGF::operator+(const MatrixGF& o) const {
  check_same_shape(*this, o);
  MatrixGF r(*f_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->add(a_[i], o.a_[i]);
  return r;
}

MatrixGF MatrixGF::operator-(const MatrixGF& o) const {
  check_same_shape(*this, o);
  MatrixGF r(*f_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->sub(a_[i], o.a_[i]);
  return r;
}

MatrixGF MatrixGF::operator*(const MatrixGF& o) const {
  if (f_ != &o.field() || cols_ != o.rows())
    fail("DimensionMismatch", "matrix product shapes");
  MatrixGF r(*f_, rows_, o.cols_);
  if (f_->t() == 1) {
    // delayed reduction: entries < 2^20, so 2^24 terms fit in 64 bits
    std::uint64_t p = f_->p();
    for (std::size_t i = 0; i < rows_; ++i) {
      const Fel* ai = row(i);
      for (std::size_t k = 0; k < cols_; ++k) {
        std::uint64_t s = ai[k];
        if (!s) continue;
        const Fel* ok = o.row(k);
        Fel* ri = r.row(i);
        for (std::size_t j = 0; j < o.cols_; ++j)
          ri[j] = static_cast<Fel>((ri[j] + s * ok[j]) % p);
      }
    }
  } else {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        Fel s = at(i, k);
        if (!s) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          r.set(i, j, f_->add(r.at(i, j), f_->mul(s, o.at(k, j))));
      }
  }
  return r;
}

MatrixGF MatrixGF::scale(Fel s) const {
  MatrixGF r(*f_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->mul(a_[i], s);
  return r;
}

MatrixGF MatrixGF::transpose() const {
  MatrixGF r(*f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  return r;
}

bool MatrixGF::is_zero() const {
  for (Fel v : a_)
    if (v) return false;
  return true;
}

bool MatrixGF::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

bool MatrixGF::operator==(const MatrixGF& o) const {
  return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

std::vector<Fel> row_times_matrix(const std::vector<Fel>& v,
                                  const MatrixGF& m) {
  if (v.size() != m.rows()) fail("DimensionMismatch", "row * matrix shapes");
  const Field& f = m.field();
  std::vector<Fel> out(m.cols(), 0);
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k]) row_axpy(f, v[k], m.row(k), out.data(), m.cols());
  return out;
}

RrefResult rref(const MatrixGF& m) {
  const Field& f = m.field();
  MatrixGF a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pr = r;
    while (pr < a.rows() && a.at(pr, c) == 0) ++pr;
    if (pr == a.rows()) continue;
    if (pr != r)
      for (std::size_t j = 0; j < a.cols(); ++j) {
        Fel tmp = a.at(r, j);
        a.set(r, j, a.at(pr, j));
        a.set(pr, j, tmp);
      }
    Fel inv = f.inv(a.at(r, c));
    if (inv != 1)
      for (std::size_t j = c; j < a.cols(); ++j)
        a.set(r, j, f.mul(a.at(r, j), inv));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      Fel s = a.at(i, c);
      if (s == 0) continue;
      row_axpy(f, f.neg(s), a.row(r), a.row(i), a.cols());
    }
    pivots.push_back(c);
    ++r;
  }
  return RrefResult{std::move(a), std::move(pivots)};
}

MatrixGF kernel(const MatrixGF& m) {
  const Field& f = m.field();
  RrefResult rr = rref(m);
  std::vector<std::size_t> nonpiv;
  {
    std::size_t pi = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (pi < rr.pivots.size() && rr.pivots[pi] == c)
        ++pi;
      else
        nonpiv.push_back(c);
    }
  }
  MatrixGF basis(f, nonpiv.size(), m.cols());
  for (std::size_t k = 0; k < nonpiv.size(); ++k) {
    std::size_t j = nonpiv[k];
    basis.set(k, j, 1);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
      basis.set(k, rr.pivots[i], f.neg(rr.mat.at(i, j)));
  }
  return rref(basis).mat;
}

MatrixGF left_kernel(const MatrixGF& m) { return kernel(m.transpose()); }

bool is_invertible(const MatrixGF& m) {
  return m.rows() == m.cols() && rref(m).rank() == m.rows();
}

MatrixGF inverse(const MatrixGF& m) {
  if (m.rows() != m.cols()) fail("DimensionMismatch", "inverse of non-square");
  const Field& f = m.field();
  std::size_t n = m.rows();
  MatrixGF aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.set(i, j, m.at(i, j));
    aug.set(i, n + i, 1);
  }
  RrefResult rr = rref(aug);
  for (std::size_t i = 0; i < n; ++i)
    if (i >= rr.pivots.size() || rr.pivots[i] != i)
      fail("NotInvertible", "matrix is singular");
  MatrixGF inv(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.set(i, j, rr.mat.at(i, n + j));
  return inv;
}

PolyGF char_poly(const MatrixGF& m) {
  if (m.rows() != m.cols()) fail("DimensionMismatch", "char_poly of non-square");
  const Field& f = m.field();
  std::size_t n = m.rows();
  PolyGF result = poly_const(f, 1);
  if (n == 0) return result;

  // spinning basis (unreduced Krylov vectors), echelon copies, and the
  // transform expressing each echelon row over the spinning basis
  std::vector<std::vector<Fel>> basis, ech, tr;
  std::vector<std::size_t> piv;

  auto reduce = [&](std::vector<Fel>& w, std::vector<Fel>& gamma) {
    for (std::size_t i = 0; i < ech.size(); ++i) {
      Fel c = w[piv[i]];
      if (c == 0) continue;
      Fel s = f.div(c, ech[i][piv[i]]);
      row_axpy(f, f.neg(s), ech[i].data(), w.data(), n);
      for (std::size_t j = 0; j < tr[i].size(); ++j)
        gamma[j] = f.add(gamma[j], f.mul(s, tr[i][j]));
    }
  };

  std::size_t next_seed = 0;
  while (basis.size() < n) {
    // next standard vector independent of what we have
    std::vector<Fel> u(n, 0);
    std::vector<Fel> gamma(n, 0);
    std::vector<Fel> w;
    for (;; ++next_seed) {
      u.assign(n, 0);
      u[next_seed] = 1;
      w = u;
      gamma.assign(n, 0);
      reduce(w, gamma);
      bool zero = true;
      for (Fel v : w) zero &= (v == 0);
      if (!zero) break;
    }
    std::size_t cycle_start = basis.size();
    std::vector<Fel> cur = u;
    while (true) {
      // w = reduced cur, gamma = coefficients over basis consumed so far
      bool zero = true;
      for (Fel v : w) zero &= (v == 0);
      if (zero) {
        // cur = sum gamma_j basis_j; relation polynomial for this cycle
        std::size_t k = basis.size() - cycle_start;
        std::vector<Fel> coef(k + 1, 0);
        coef[k] = 1;
        for (std::size_t j = 0; j < k; ++j)
          coef[j] = f.neg(gamma[cycle_start + j]);
        result = poly_mul(result, poly_make(f, std::move(coef)));
        break;
      }
      // record cur in the spinning basis, w in the echelon table
      std::size_t pc = 0;
      while (w[pc] == 0) ++pc;
      std::vector<Fel> trow(basis.size() + 1, 0);
      trow[basis.size()] = 1;
      for (std::size_t j = 0; j < basis.size(); ++j) trow[j] = f.neg(gamma[j]);
      basis.push_back(cur);
      ech.push_back(w);
      piv.push_back(pc);
      tr.push_back(std::move(trow));

      cur = row_times_matrix(basis.back(), m);
      w = cur;
      gamma.assign(n, 0);
      reduce(w, gamma);
    }
  }
  return result;
}

MatrixGF eigen_space(const MatrixGF& m, Fel lambda) {
  if (m.rows() != m.cols()) fail("DimensionMismatch", "eigen of non-square");
  MatrixGF shifted = m - MatrixGF::identity(m.field(), m.rows()).scale(lambda);
  return kernel(shifted);
}

MatrixGF poly_at_matrix(const PolyGF& p, const MatrixGF& m) {
  if (m.rows() != m.cols()) fail("DimensionMismatch", "poly at non-square");
  const Field& f = m.field();
  MatrixGF acc(f, m.rows(), m.rows());
  for (std::size_t i = p.c.size(); i-- > 0;) {
    acc = acc * m;
    if (p.c[i]) {
      for (std::size_t d = 0; d < m.rows(); ++d)
        acc.set(d, d, f.add(acc.at(d, d), p.c[i]));
    }
  }
  return acc;
}

std::string matrix_str(const MatrixGF& m) {
  const Field& f = m.field();
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << ' ' << f.q();
  if (f.t() > 1) {
    out << " poly ";
    for (std::size_t i = 0; i < f.defining_poly().size(); ++i) {
      if (i) out << ',';
      out << f.defining_poly()[i];
    }
  }
  out << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << f.elem_str(m.at(i, j));
    }
    out << '\n';
  }
  return out.str();
}

MatrixGF matrix_parse(std::istream& in) {
  std::size_t rows, cols;
  std::uint32_t q;
  if (!(in >> rows >> cols >> q))
    fail("ParseError", "matrix header: expected 'rows cols q'");
  const Field& f = Field::get_order(q);
  if (f.t() > 1) {
    std::string kw, polytext;
    if (!(in >> kw) || kw != "poly" || !(in >> polytext))
      fail("ParseError", "matrix header: extension field needs 'poly'");
    std::vector<std::uint32_t> coeffs;
    std::size_t pos = 0;
    while (pos <= polytext.size()) {
      std::size_t comma = polytext.find(',', pos);
      std::string tok = polytext.substr(
          pos, comma == std::string::npos ? comma : comma - pos);
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        fail("ParseError", "bad polynomial coefficient '" + tok + "'");
      coeffs.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (coeffs != f.defining_poly())
      fail("ParseError", "defining polynomial differs from the canonical one");
  }
  MatrixGF m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      std::string tok;
      if (!(in >> tok)) fail("ParseError", "matrix body ended early");
      m.set(i, j, f.parse_elem(tok));
    }
  return m;
}

MatrixGF matrix_parse(const std::string& text) {
  std::istringstream in(text);
  return matrix_parse(in);
}

}  // namespace lindim
