#include "lindim/group.hpp"

#include <algorithm>
#include <numeric>

#include "lindim/error.hpp"

namespace lindim {

namespace {

std::optional<std::uint32_t> least_moved(const Permutation& g) {
  for (std::uint32_t x = 0; x < g.degree(); ++x)
    if (g(x) != x) return x;
  return std::nullopt;
}

class ChainBuilder {
 public:
  ChainBuilder(std::size_t degree, const std::vector<Permutation>& gens,
               std::optional<std::uint32_t> pin)
      : n_(degree), pin_(pin) {
    std::vector<Permutation> initial;
    for (const Permutation& g : gens)
      if (!g.is_identity()) initial.push_back(g);
    if (initial.empty() && !pin_) return;

    std::uint32_t beta0;
    if (pin_) {
      beta0 = *pin_;
    } else {
      beta0 = n_;
      for (const Permutation& g : initial) beta0 = std::min(beta0, *least_moved(g));
    }
    levels_.push_back(make_level(beta0));
    levels_[0].gens = std::move(initial);

    // verify bottom-up; every insertion jumps back down to the touched level
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
    while (i >= 0) {
      rebuild_orbit(static_cast<std::size_t>(i));
      std::ptrdiff_t jump = verify_level(static_cast<std::size_t>(i));
      i = (jump < 0) ? i - 1 : jump;
    }
  }

  std::vector<StabChain::Level> take() { return std::move(levels_); }

 private:
  StabChain::Level make_level(std::uint32_t beta) const {
    StabChain::Level lv;
    lv.beta = beta;
    lv.pos.assign(n_, -1);
    return lv;
  }

  std::vector<const Permutation*> genset(std::size_t k) const {
    std::vector<const Permutation*> out;
    for (std::size_t m = k; m < levels_.size(); ++m)
      for (const Permutation& g : levels_[m].gens) out.push_back(&g);
    return out;
  }

  void rebuild_orbit(std::size_t k) {
    StabChain::Level& lv = levels_[k];
    std::fill(lv.pos.begin(), lv.pos.end(), -1);
    lv.orbit.assign(1, lv.beta);
    lv.transversal.assign(1, Permutation::identity(n_));
    lv.pos[lv.beta] = 0;
    std::vector<const Permutation*> gens = genset(k);
    for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
      for (const Permutation* g : gens) {
        std::uint32_t y = (*g)(lv.orbit[head]);
        if (lv.pos[y] < 0) {
          lv.pos[y] = static_cast<std::int64_t>(lv.orbit.size());
          lv.orbit.push_back(y);
          lv.transversal.push_back(lv.transversal[head] * *g);
        }
      }
    }
  }

  // sift g through levels starting at `from`; residue is identity on success
  Permutation sift_from(Permutation g, std::size_t from) const {
    for (std::size_t k = from; k < levels_.size(); ++k) {
      const StabChain::Level& lv = levels_[k];
      std::int64_t p = lv.pos[g(lv.beta)];
      if (p < 0) return g;
      g = g * lv.transversal[static_cast<std::size_t>(p)].inverse();
    }
    return g;
  }

  // store residue r at the level of its least moved point, keeping levels past
  // any pinned point sorted by base point; returns the insertion index
  std::size_t insert(Permutation r) {
    std::uint32_t p = *least_moved(r);
    std::size_t lo = pin_ ? 1 : 0;
    std::size_t idx = lo;
    while (idx < levels_.size() && levels_[idx].beta < p) ++idx;
    if (idx == levels_.size() || levels_[idx].beta != p)
      levels_.insert(levels_.begin() + static_cast<std::ptrdiff_t>(idx),
                     make_level(p));
    levels_[idx].gens.push_back(std::move(r));
    return idx;
  }

  // checks Schreier generators of level i against the chain below; on failure
  // inserts the residue and returns the level to re-verify from, else -1
  std::ptrdiff_t verify_level(std::size_t i) {
    const StabChain::Level& lv = levels_[i];
    std::vector<const Permutation*> gens = genset(i);
    for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
      for (const Permutation* s : gens) {
        std::uint32_t y = (*s)(lv.orbit[k]);
        Permutation schreier =
            lv.transversal[k] * *s *
            lv.transversal[static_cast<std::size_t>(lv.pos[y])].inverse();
        if (schreier.is_identity()) continue;
        Permutation r = sift_from(std::move(schreier), i + 1);
        if (!r.is_identity())
          return static_cast<std::ptrdiff_t>(insert(std::move(r)));
      }
    }
    return -1;
  }

  std::size_t n_;
  std::optional<std::uint32_t> pin_;
  std::vector<StabChain::Level> levels_;
};

}  // namespace

StabChain StabChain::build(std::size_t degree,
                           const std::vector<Permutation>& gens,
                           std::optional<std::uint32_t> pin_first) {
  for (const Permutation& g : gens)
    if (g.degree() != degree)
      fail("BadParameter", "generator degree mismatch");
  if (pin_first && *pin_first >= degree)
    fail("BadParameter", "pinned base point out of range");
  StabChain c;
  c.degree_ = degree;
  ChainBuilder b(degree, gens, pin_first);
  c.levels_ = b.take();
  return c;
}

std::uint64_t StabChain::order() const {
  std::uint64_t o = 1;
  for (const Level& lv : levels_) o *= lv.orbit.size();
  return o;
}

Permutation StabChain::sift(const Permutation& g) const {
  Permutation cur = g;
  for (const Level& lv : levels_) {
    std::int64_t p = lv.pos[cur(lv.beta)];
    if (p < 0) return cur;
    cur = cur * lv.transversal[static_cast<std::size_t>(p)].inverse();
  }
  return cur;
}

bool StabChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  return sift(g).is_identity();
}

std::vector<Permutation> StabChain::tail_generators() const {
  std::vector<Permutation> out;
  for (std::size_t m = 1; m < levels_.size(); ++m)
    for (const Permutation& g : levels_[m].gens) out.push_back(g);
  return out;
}

Permutation StabChain::min_coset_rep(const Permutation& g) const {
  Permutation cur = g;
  for (const Level& lv : levels_) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < lv.orbit.size(); ++k)
      if (cur(lv.orbit[k]) < cur(lv.orbit[best])) best = k;
    if (best != 0) cur = lv.transversal[best] * cur;
  }
  return cur;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> gens)
    : degree_(degree), gens_(std::move(gens)) {
  if (degree_ == 0) fail("BadParameter", "group degree must be at least 1");
  if (gens_.empty()) fail("BadParameter", "group needs at least one generator");
  for (const Permutation& g : gens_)
    if (g.degree() != degree_)
      fail("BadParameter", "generator degree mismatch");
}

const StabChain& PermGroup::chain() const {
  if (!chain_)
    chain_ = std::make_shared<const StabChain>(StabChain::build(degree_, gens_));
  return *chain_;
}

std::uint64_t PermGroup::order() const { return chain().order(); }

bool PermGroup::contains(const Permutation& g) const {
  return chain().contains(g);
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (!(gens_[i] * gens_[j] == gens_[j] * gens_[i])) return false;
  return true;
}

bool PermGroup::is_cyclic() const {
  if (!is_abelian()) return false;
  std::uint64_t l = 1;
  for (const Permutation& g : gens_) l = std::lcm(l, perm_order(g));
  return l == order();
}

std::vector<Permutation> PermGroup::point_stabilizer_generators(
    std::uint32_t alpha) const {
  if (alpha >= degree_) fail("BadParameter", "stabilizer point out of range");
  StabChain pinned = StabChain::build(degree_, gens_, alpha);
  return pinned.tail_generators();
}

Permutation PermGroup::min_coset_rep(const Permutation& g) const {
  if (g.degree() != degree_) fail("BadParameter", "coset element degree mismatch");
  return chain().min_coset_rep(g);
}

}  // namespace lindim
