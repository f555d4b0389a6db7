#include "lindim/fgmodule.hpp"

#include <map>

#include "lindim/error.hpp"

namespace lindim {

FGModule module_from_gens(const Field& f, std::vector<MatrixGF> gens) {
  if (gens.empty()) fail("BadParameter", "module needs at least one generator");
  FGModule m;
  m.f = &f;
  m.dim = gens[0].rows();
  for (const MatrixGF& g : gens) {
    if (&g.field() != &f || g.rows() != m.dim || g.cols() != m.dim)
      fail("BadParameter", "generator matrix shape mismatch");
    if (!is_invertible(g)) fail("BadParameter", "generator matrix not invertible");
  }
  m.gens = std::move(gens);
  return m;
}

FGModule perm_module(const GroupAction& a, const Field& f) {
  FGModule m;
  m.f = &f;
  m.dim = a.domain_size;
  for (const Permutation& g : a.images) {
    MatrixGF mat(f, a.domain_size, a.domain_size);
    for (std::uint32_t w = 0; w < a.domain_size; ++w) mat.set(w, g(w), 1);
    m.gens.push_back(std::move(mat));
  }
  m.action = std::make_shared<const GroupAction>(a);
  return m;
}

SubspaceGF spin(const FGModule& m, const MatrixGF& seeds) {
  SubspaceGF s = SubspaceGF::from_rows(seeds);
  bool grew = true;
  while (grew && s.dim() < m.dim) {
    grew = false;
    for (const MatrixGF& g : m.gens) {
      SubspaceGF next = subspace_sum(s, SubspaceGF::from_rows(s.basis() * g));
      if (next.dim() > s.dim()) {
        s = std::move(next);
        grew = true;
      }
    }
  }
  return s;
}

SubspaceGF spin_vector(const FGModule& m, const std::vector<Fel>& seed) {
  MatrixGF row(m.field(), 1, m.dim);
  for (std::size_t j = 0; j < m.dim; ++j) row.set(0, j, seed[j]);
  return spin(m, row);
}

std::pair<SubspaceGF, SubspaceGF> constant_and_zero_sum(const FGModule& m) {
  if (!m.action) fail("BadParameter", "needs a module with action provenance");
  MatrixGF ones(m.field(), 1, m.dim);
  for (std::size_t j = 0; j < m.dim; ++j) ones.set(0, j, 1);
  SubspaceGF c = SubspaceGF::from_rows(ones);
  return {c, subspace_perp(c)};
}

SubspaceGF fixed_space(const FGModule& m) {
  SubspaceGF fix = SubspaceGF::full(m.field(), m.dim);
  for (const MatrixGF& g : m.gens) {
    MatrixGF gm = g - MatrixGF::identity(m.field(), m.dim);
    fix = subspace_intersect(fix, SubspaceGF::from_rows(left_kernel(gm)));
    if (fix.dim() == 0) break;
  }
  return fix;
}

bool is_invariant(const FGModule& m, const SubspaceGF& u) {
  for (const MatrixGF& g : m.gens)
    if (!u.contains(SubspaceGF::from_rows(u.basis() * g))) return false;
  return true;
}

namespace {

// coordinates of rows known to lie in the row space of an RREF basis
MatrixGF coords_in(const SubspaceGF& u, const MatrixGF& rows) {
  MatrixGF c(rows.field(), rows.rows(), u.dim());
  for (std::size_t i = 0; i < rows.rows(); ++i)
    for (std::size_t j = 0; j < u.dim(); ++j)
      c.set(i, j, rows.at(i, u.pivots()[j]));
  return c;
}

}  // namespace

FGModule restrict_module(const FGModule& m, const SubspaceGF& u) {
  FGModule r;
  r.f = m.f;
  r.dim = u.dim();
  for (const MatrixGF& g : m.gens) {
    MatrixGF moved = u.basis() * g;
    if (!u.contains(SubspaceGF::from_rows(moved)))
      fail("NotInvariant", "subspace is not a submodule");
    r.gens.push_back(coords_in(u, moved));
  }
  return r;
}

std::pair<FGModule, MatrixGF> quotient_module(const FGModule& m,
                                              const SubspaceGF& u) {
  if (!is_invariant(m, u)) fail("NotInvariant", "subspace is not a submodule");
  MatrixGF proj = quotient_coords(u);
  std::size_t qd = m.dim - u.dim();

  // non-pivot unit vectors are coset representatives of the quotient basis
  std::vector<std::size_t> nonpiv;
  {
    std::size_t pi = 0;
    for (std::size_t j = 0; j < m.dim; ++j) {
      if (pi < u.dim() && u.pivots()[pi] == j)
        ++pi;
      else
        nonpiv.push_back(j);
    }
  }

  FGModule q;
  q.f = m.f;
  q.dim = qd;
  for (const MatrixGF& g : m.gens) {
    MatrixGF reps(m.field(), qd, m.dim);
    for (std::size_t i = 0; i < qd; ++i)
      for (std::size_t j = 0; j < m.dim; ++j)
        reps.set(i, j, g.at(nonpiv[i], j));
    q.gens.push_back(reps * proj);
  }
  return {std::move(q), std::move(proj)};
}

std::vector<std::vector<std::uint32_t>> submodule_congruence(
    const FGModule& m, const SubspaceGF& u) {
  if (!m.action) fail("BadParameter", "needs a module with action provenance");
  if (!is_invariant(m, u)) fail("NotInvariant", "subspace is not a submodule");
  MatrixGF proj = quotient_coords(u);

  std::map<std::vector<Fel>, std::size_t> part_of;
  std::vector<std::vector<std::uint32_t>> parts;
  for (std::uint32_t w = 0; w < m.dim; ++w) {
    std::vector<Fel> image(proj.cols());
    for (std::size_t j = 0; j < proj.cols(); ++j) image[j] = proj.at(w, j);
    auto [it, fresh] = part_of.emplace(std::move(image), parts.size());
    if (fresh) parts.emplace_back();
    parts[it->second].push_back(w);
  }
  return parts;
}

}  // namespace lindim
