#include "lindim/meataxe.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "lindim/error.hpp"
#include "lindim/poly.hpp"

namespace lindim {

namespace {

constexpr int kChopBudget = 200;

// pseudorandom algebra element: combination of three words of length <= 3
MatrixGF random_algebra_element(const FGModule& m, std::mt19937_64& rng) {
  const Field& f = m.field();
  MatrixGF z(f, m.dim, m.dim);
  for (int w = 0; w < 3; ++w) {
    std::size_t len = 1 + rng() % 3;
    MatrixGF word = MatrixGF::identity(f, m.dim);
    for (std::size_t i = 0; i < len; ++i)
      word = word * m.gens[rng() % m.gens.size()];
    Fel c = static_cast<Fel>(rng() % f.q());
    z = z + word.scale(c);
  }
  return z;
}

FGModule transposed_module(const FGModule& m) {
  // spins under the transposed generators close under the transposed group,
  // so invariant subspaces here are exactly perps of submodules of m
  FGModule d;
  d.f = m.f;
  d.dim = m.dim;
  for (const MatrixGF& g : m.gens) d.gens.push_back(g.transpose());
  return d;
}

std::vector<Fel> first_row(const MatrixGF& m) {
  std::vector<Fel> v(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) v[j] = m.at(0, j);
  return v;
}

void chop_worker(const FGModule& m, std::mt19937_64& rng,
                 std::vector<FGModule>& out) {
  if (m.dim == 0) return;
  if (m.dim == 1) {
    out.push_back(m);
    return;
  }

  auto split_at = [&](const SubspaceGF& u) {
    FGModule sub = restrict_module(m, u);
    FGModule quot = quotient_module(m, u).first;
    chop_worker(sub, rng, out);
    chop_worker(quot, rng, out);
  };

  for (int attempt = 0; attempt < kChopBudget; ++attempt) {
    MatrixGF z = random_algebra_element(m, rng);
    PolyGF cp = char_poly(z);
    auto factors = poly_factor(cp, rng);
    for (const auto& [fac, mult] : factors) {
      MatrixGF fz = poly_at_matrix(fac, z);
      MatrixGF nullrows = left_kernel(fz);
      if (nullrows.rows() == 0) continue;

      SubspaceGF w = spin_vector(m, first_row(nullrows));
      if (w.dim() < m.dim) {
        split_at(w);
        return;
      }
      // spin is full: the Norton test on the transposed module is decisive
      // when the factor's null space is as small as possible
      if (nullrows.rows() != static_cast<std::size_t>(fac.deg())) continue;
      FGModule dual = transposed_module(m);
      MatrixGF dual_null = kernel(fz);  // null rows of fz transposed
      SubspaceGF wd = spin_vector(dual, first_row(dual_null));
      if (wd.dim() == m.dim) {
        out.push_back(m);  // certified irreducible
        return;
      }
      split_at(subspace_perp(wd));
      return;
    }
  }
  fail("ChopBudgetExhausted", "no splitting element found in budget");
}

}  // namespace

std::vector<FGModule> chop(const FGModule& m, std::uint64_t seed) {
  if (m.dim < 1) fail("BadParameter", "chop needs a nonzero module");
  std::mt19937_64 rng(seed);
  std::vector<FGModule> out;
  chop_worker(m, rng, out);
  return out;
}

std::vector<MatrixGF> hom_space(const FGModule& s, const FGModule& m) {
  if (s.f != m.f || s.gens.size() != m.gens.size())
    fail("BadParameter", "hom space needs matching field and generator count");
  const Field& f = s.field();
  std::size_t ds = s.dim, dm = m.dim;
  // unknowns X[k][l] flattened row-major; equations A X = X B per generator
  MatrixGF sys(f, s.gens.size() * ds * dm, ds * dm);
  std::size_t r = 0;
  for (std::size_t gi = 0; gi < s.gens.size(); ++gi) {
    const MatrixGF& a = s.gens[gi];
    const MatrixGF& b = m.gens[gi];
    for (std::size_t i = 0; i < ds; ++i)
      for (std::size_t j = 0; j < dm; ++j, ++r) {
        for (std::size_t k = 0; k < ds; ++k)
          sys.set(r, k * dm + j, f.add(sys.at(r, k * dm + j), a.at(i, k)));
        for (std::size_t l = 0; l < dm; ++l)
          sys.set(r, i * dm + l, f.sub(sys.at(r, i * dm + l), b.at(l, j)));
      }
  }
  MatrixGF null = kernel(sys);
  std::vector<MatrixGF> basis;
  for (std::size_t v = 0; v < null.rows(); ++v) {
    MatrixGF x(f, ds, dm);
    for (std::size_t k = 0; k < ds; ++k)
      for (std::size_t l = 0; l < dm; ++l) x.set(k, l, null.at(v, k * dm + l));
    basis.push_back(std::move(x));
  }
  return basis;
}

namespace {

// necessary condition for a nonzero hom s -> m: s embeds in m, so the
// characteristic polynomial of every algebra word on s divides the one on m
bool may_embed(const FGModule& s, const FGModule& m, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  for (int probe = 0; probe < 3; ++probe) {
    std::size_t len = 1 + rng() % 2;
    MatrixGF zs = MatrixGF::identity(s.field(), s.dim);
    MatrixGF zm = MatrixGF::identity(m.field(), m.dim);
    for (std::size_t i = 0; i < len; ++i) {
      std::size_t gi = rng() % s.gens.size();
      zs = zs * s.gens[gi];
      zm = zm * m.gens[gi];
    }
    if (!poly_mod(char_poly(zm), char_poly(zs)).c.empty()) return false;
  }
  return true;
}

SubspaceGF row_space(const MatrixGF& x) { return SubspaceGF::from_rows(x); }

}  // namespace

bool modules_isomorphic(const FGModule& a, const FGModule& b,
                        std::uint64_t seed) {
  if (a.dim != b.dim) return false;
  if (!may_embed(a, b, seed)) return false;
  std::vector<MatrixGF> h = hom_space(a, b);
  if (h.empty()) return false;
  return is_invertible(h[0]);
}

MinimalSubmodules minimal_submodules(const FGModule& m, std::uint64_t seed) {
  const Field& f = m.field();
  std::vector<FGModule> factors = chop(m, seed);

  std::vector<FGModule> reps;
  for (const FGModule& fac : factors) {
    bool known = false;
    for (const FGModule& r : reps)
      if (modules_isomorphic(r, fac, seed)) {
        known = true;
        break;
      }
    if (!known) reps.push_back(fac);
  }

  MinimalSubmodules out;
  out.complete = true;
  std::vector<SubspaceGF> found;
  for (const FGModule& s : reps) {
    if (!may_embed(s, m, seed)) continue;
    std::vector<MatrixGF> h = hom_space(s, m);
    if (h.empty()) continue;
    std::size_t hd = h.size();
    if (hd == 1) {
      // every nonzero hom is a scalar multiple: one image, still complete
      found.push_back(row_space(h[0]));
    } else if (hd <= 4 && f.q() <= 17) {
      // sweep representatives of the 1-dimensional subspaces of the hom
      // space: first nonzero coordinate normalized to 1, the rest free
      for (std::size_t lead = 0; lead < hd; ++lead) {
        std::size_t tail = hd - lead - 1;
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < tail; ++i) count *= f.q();
        for (std::uint64_t t = 0; t < count; ++t) {
          MatrixGF x = h[lead];
          std::uint64_t rest = t;
          for (std::size_t i = 0; i < tail; ++i) {
            Fel c = static_cast<Fel>(rest % f.q());
            rest /= f.q();
            if (c != 0) x = x + h[lead + 1 + i].scale(c);
          }
          found.push_back(row_space(x));
        }
      }
    } else {
      for (const MatrixGF& x : h) found.push_back(row_space(x));
      out.complete = false;
    }
  }

  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  for (const SubspaceGF& w : found)
    if (chop(restrict_module(m, w), seed).size() != 1)
      fail("InternalError", "candidate minimal submodule is reducible");
  out.subs = std::move(found);
  return out;
}

MinDimGe2 min_dim_ge2_submodule(const FGModule& m, std::uint64_t seed) {
  if (m.dim < 2) fail("BadParameter", "needs dimension at least 2");
  MinimalSubmodules ms = minimal_submodules(m, seed);

  MinDimGe2 best;
  best.complete = ms.complete;
  auto offer = [&](std::size_t dim, const SubspaceGF& w) {
    if (best.dim == 0 || dim < best.dim || (dim == best.dim && w < best.sub)) {
      best.dim = dim;
      best.sub = w;
    }
  };

  for (const SubspaceGF& w : ms.subs)
    if (w.dim() >= 2) offer(w.dim(), w);

  for (const SubspaceGF& l : ms.subs) {
    if (l.dim() != 1) continue;
    auto [quot, proj] = quotient_module(m, l);
    MinimalSubmodules mq = minimal_submodules(quot, seed);
    best.complete = best.complete && mq.complete;
    for (const SubspaceGF& x : mq.subs) {
      // pull back along the projection: lift rows, then add l itself
      MatrixGF lifted(m.field(), x.dim() + 1, m.dim);
      for (std::size_t i = 0; i < x.dim(); ++i) {
        std::size_t col = 0;
        for (std::size_t j = 0; j < m.dim; ++j) {
          if (col < l.dim() && l.pivots()[col] == j) {
            ++col;
            continue;
          }
          lifted.set(i, j, x.basis().at(i, j - col));
        }
      }
      for (std::size_t j = 0; j < m.dim; ++j)
        lifted.set(x.dim(), j, l.basis().at(0, j));
      offer(1 + x.dim(), SubspaceGF::from_rows(lifted));
    }
  }
  return best;
}

SubmoduleLattice submodule_lattice(const FGModule& m, std::size_t cap,
                                   std::uint64_t seed) {
  if (m.dim < 1) fail("BadParameter", "lattice needs a nonzero module");
  SubmoduleLattice lat;
  lat.cap = cap;
  lat.complete = true;

  std::map<SubspaceGF, std::size_t> index;
  std::vector<SubspaceGF> queue;
  std::vector<std::pair<SubspaceGF, SubspaceGF>> raw_edges;

  SubspaceGF zero = SubspaceGF::zero(m.field(), m.dim);
  index.emplace(zero, 0);
  queue.push_back(zero);

  for (std::size_t head = 0; head < queue.size(); ++head) {
    SubspaceGF u = queue[head];
    if (u.dim() == m.dim) continue;

    auto [quot, proj] = quotient_module(m, u);
    MinimalSubmodules mins = minimal_submodules(quot, seed);
    lat.complete = lat.complete && mins.complete;

    std::vector<SubspaceGF> covers;
    for (const SubspaceGF& x : mins.subs) {
      MatrixGF lifted(m.field(), x.dim() + u.dim(), m.dim);
      for (std::size_t i = 0; i < x.dim(); ++i) {
        std::size_t col = 0;
        for (std::size_t j = 0; j < m.dim; ++j) {
          if (col < u.dim() && u.pivots()[col] == j) {
            ++col;
            continue;
          }
          lifted.set(i, j, x.basis().at(i, j - col));
        }
      }
      for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t j = 0; j < m.dim; ++j)
          lifted.set(x.dim() + i, j, u.basis().at(i, j));
      covers.push_back(SubspaceGF::from_rows(lifted));
    }
    if (head == 0 && covers.size() > cap)
      fail("LatticeTooLarge", "minimal submodules alone exceed the cap");

    for (const SubspaceGF& v : covers) {
      auto it = index.find(v);
      if (it == index.end()) {
        if (queue.size() >= cap) {
          lat.complete = false;
          continue;
        }
        index.emplace(v, queue.size());
        queue.push_back(v);
      }
      raw_edges.emplace_back(u, v);
    }
  }

  lat.nodes = queue;
  std::sort(lat.nodes.begin(), lat.nodes.end());
  std::map<SubspaceGF, std::size_t> order;
  for (std::size_t i = 0; i < lat.nodes.size(); ++i) order.emplace(lat.nodes[i], i);
  for (const auto& [a, b] : raw_edges) {
    auto ia = order.find(a), ib = order.find(b);
    if (ia != order.end() && ib != order.end())
      lat.edges.emplace_back(ia->second, ib->second);
  }
  std::sort(lat.edges.begin(), lat.edges.end());
  lat.edges.erase(std::unique(lat.edges.begin(), lat.edges.end()),
                  lat.edges.end());
  return lat;
}

std::string lattice_dump(const SubmoduleLattice& lat) {
  std::string out;
  for (const SubspaceGF& u : lat.nodes) {
    out += "dim=" + std::to_string(u.dim()) + " basis=";
    const Field& f = u.basis().field();
    for (std::size_t i = 0; i < u.dim(); ++i) {
      if (i) out += ';';
      for (std::size_t j = 0; j < u.ambient(); ++j) {
        if (j) out += ' ';
        out += f.elem_str(u.basis().at(i, j));
      }
    }
    out += '\n';
  }
  for (const auto& [a, b] : lat.edges)
    out += "cover " + std::to_string(a) + " " + std::to_string(b) + "\n";
  return out;
}

}  // namespace lindim
