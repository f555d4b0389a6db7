#include "lindim/action.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "lindim/error.hpp"

namespace lindim {

namespace {

constexpr std::size_t kMaxDomain = 1000000;

std::vector<std::string> index_labels(std::size_t n) {
  std::vector<std::string> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = std::to_string(i);
  return out;
}

}  // namespace

GroupAction action_natural(const PermGroup& g) {
  GroupAction a;
  a.group = g;
  a.domain_size = g.degree();
  a.labels = index_labels(a.domain_size);
  a.images = g.generators();
  a.name = "natural";
  return a;
}

GroupAction action_ksubsets(const PermGroup& g, std::size_t k) {
  std::size_t n = g.degree();
  if (k < 1 || k > n) fail("BadParameter", "subset size out of range");

  std::vector<std::vector<std::uint32_t>> subsets;
  std::vector<std::uint32_t> cur(k);
  std::iota(cur.begin(), cur.end(), 0u);
  while (true) {
    subsets.push_back(cur);
    if (subsets.size() > kMaxDomain) fail("BadParameter", "domain too large");
    // next combination in lexicographic order
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }

  auto index_of = [&](const std::vector<std::uint32_t>& s) {
    auto it = std::lower_bound(subsets.begin(), subsets.end(), s);
    return static_cast<std::uint32_t>(it - subsets.begin());
  };

  GroupAction a;
  a.group = g;
  a.domain_size = subsets.size();
  a.name = "ksubsets:" + std::to_string(k);
  for (const auto& s : subsets) {
    std::string lab = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) lab += ',';
      lab += std::to_string(s[i]);
    }
    lab += '}';
    a.labels.push_back(lab);
  }
  for (const Permutation& gen : g.generators()) {
    std::vector<std::uint32_t> img(a.domain_size);
    for (std::size_t x = 0; x < a.domain_size; ++x) {
      std::vector<std::uint32_t> s = subsets[x];
      for (std::uint32_t& p : s) p = gen(p);
      std::sort(s.begin(), s.end());
      img[x] = index_of(s);
    }
    a.images.emplace_back(std::move(img));
  }
  return a;
}

GroupAction action_cosets(const PermGroup& g,
                          const std::vector<Permutation>& subgroup_gens) {
  std::size_t n = g.degree();
  std::vector<Permutation> hgens = subgroup_gens;
  if (hgens.empty()) hgens.push_back(Permutation::identity(n));
  for (const Permutation& h : hgens)
    if (h.degree() != n || !g.contains(h))
      fail("BadParameter", "subgroup generator not contained in the group");
  PermGroup h(n, hgens);

  std::uint64_t index = g.order() / h.order();
  if (index > 100000) fail("BadParameter", "coset index too large");

  std::vector<Permutation> reps;
  std::map<std::vector<std::uint32_t>, std::uint32_t> where;
  reps.push_back(h.min_coset_rep(Permutation::identity(n)));
  where[reps[0].images()] = 0;
  for (std::size_t head = 0; head < reps.size(); ++head) {
    for (const Permutation& gen : g.generators()) {
      Permutation r = h.min_coset_rep(reps[head] * gen);
      if (where.emplace(r.images(), static_cast<std::uint32_t>(reps.size()))
              .second)
        reps.push_back(std::move(r));
    }
  }
  if (reps.size() != index) fail("InternalError", "coset enumeration mismatch");

  GroupAction a;
  a.group = g;
  a.domain_size = reps.size();
  a.labels = index_labels(reps.size());
  a.name = "cosets";
  for (const Permutation& gen : g.generators()) {
    std::vector<std::uint32_t> img(reps.size());
    for (std::size_t x = 0; x < reps.size(); ++x)
      img[x] = where.at(h.min_coset_rep(reps[x] * gen).images());
    a.images.emplace_back(std::move(img));
  }
  return a;
}

GroupAction action_regular(const PermGroup& g) {
  GroupAction a = action_cosets(g, {});
  a.name = "regular";
  return a;
}

namespace {

std::vector<Permutation> wreath_generators(const PermGroup& k_grp,
                                           const PermGroup& l_grp) {
  std::size_t k = k_grp.degree(), l = l_grp.degree();
  std::size_t n = k * l;
  std::vector<Permutation> gens;
  for (const Permutation& a : k_grp.generators()) {
    std::vector<std::uint32_t> img(n);
    std::iota(img.begin(), img.end(), 0u);
    for (std::uint32_t d = 0; d < k; ++d) img[d] = a(d);
    gens.emplace_back(std::move(img));
  }
  for (const Permutation& b : l_grp.generators()) {
    std::vector<std::uint32_t> img(n);
    for (std::uint32_t i = 0; i < l; ++i)
      for (std::uint32_t d = 0; d < k; ++d)
        img[i * k + d] = b(i) * static_cast<std::uint32_t>(k) + d;
    gens.emplace_back(std::move(img));
  }
  return gens;
}

}  // namespace

GroupAction action_wreath_imprimitive(const PermGroup& k_grp,
                                      const PermGroup& l_grp) {
  std::size_t k = k_grp.degree(), l = l_grp.degree();
  std::vector<Permutation> gens = wreath_generators(k_grp, l_grp);
  GroupAction a;
  a.group = PermGroup(k * l, gens);
  a.domain_size = k * l;
  a.images = std::move(gens);
  a.name = "wreath-imp";
  for (std::uint32_t i = 0; i < l; ++i)
    for (std::uint32_t d = 0; d < k; ++d)
      a.labels.push_back("(" + std::to_string(d) + "," + std::to_string(i) +
                         ")");
  return a;
}

GroupAction action_wreath_product(const PermGroup& k_grp,
                                  const PermGroup& l_grp) {
  std::size_t k = k_grp.degree(), l = l_grp.degree();
  std::size_t m = 1;
  for (std::size_t i = 0; i < l; ++i) {
    m *= k;
    if (m > kMaxDomain) fail("BadParameter", "product action domain too large");
  }
  std::vector<Permutation> gens = wreath_generators(k_grp, l_grp);

  // tuple (d_0,...,d_{l-1}) with d_0 most significant
  auto decode = [&](std::size_t idx) {
    std::vector<std::uint32_t> t(l);
    for (std::size_t i = l; i-- > 0;) {
      t[i] = static_cast<std::uint32_t>(idx % k);
      idx /= k;
    }
    return t;
  };
  auto encode = [&](const std::vector<std::uint32_t>& t) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < l; ++i) idx = idx * k + t[i];
    return static_cast<std::uint32_t>(idx);
  };

  GroupAction a;
  a.group = PermGroup(k * l, std::move(gens));
  a.domain_size = m;
  a.name = "wreath-prod";
  for (std::size_t idx = 0; idx < m; ++idx) {
    std::vector<std::uint32_t> t = decode(idx);
    std::string lab = "(";
    for (std::size_t i = 0; i < l; ++i) {
      if (i) lab += ',';
      lab += std::to_string(t[i]);
    }
    lab += ')';
    a.labels.push_back(lab);
  }
  for (const Permutation& gen : k_grp.generators()) {
    std::vector<std::uint32_t> img(m);
    for (std::size_t idx = 0; idx < m; ++idx) {
      std::vector<std::uint32_t> t = decode(idx);
      t[0] = gen(t[0]);
      img[idx] = encode(t);
    }
    a.images.emplace_back(std::move(img));
  }
  for (const Permutation& gen : l_grp.generators()) {
    std::vector<std::uint32_t> img(m);
    for (std::size_t idx = 0; idx < m; ++idx) {
      std::vector<std::uint32_t> t = decode(idx), u(l);
      for (std::uint32_t i = 0; i < l; ++i) u[gen(i)] = t[i];
      img[idx] = encode(u);
    }
    a.images.emplace_back(std::move(img));
  }
  return a;
}

GroupAction action_uniform_partitions(const PermGroup& g, std::size_t k) {
  std::size_t n = g.degree();
  if (k < 1 || n % k != 0) fail("BadParameter", "part size must divide degree");

  using Partition = std::vector<std::vector<std::uint32_t>>;
  std::vector<Partition> parts_list;
  Partition acc;
  std::vector<bool> used(n, false);
  std::function<void()> go = [&]() {
    std::uint32_t anchor = 0;
    while (anchor < n && used[anchor]) ++anchor;
    if (anchor == n) {
      parts_list.push_back(acc);
      if (parts_list.size() > kMaxDomain)
        fail("BadParameter", "domain too large");
      return;
    }
    // choose the k-1 companions of the least unused point, in ascending order
    std::vector<std::uint32_t> part{anchor};
    used[anchor] = true;
    std::function<void(std::uint32_t)> pick = [&](std::uint32_t from) {
      if (part.size() == k) {
        acc.push_back(part);
        go();
        acc.pop_back();
        return;
      }
      for (std::uint32_t p = from; p < n; ++p) {
        if (used[p]) continue;
        used[p] = true;
        part.push_back(p);
        pick(p + 1);
        part.pop_back();
        used[p] = false;
      }
    };
    pick(anchor + 1);
    used[anchor] = false;
  };
  go();
  std::sort(parts_list.begin(), parts_list.end());

  std::map<Partition, std::uint32_t> where;
  for (std::size_t i = 0; i < parts_list.size(); ++i)
    where[parts_list[i]] = static_cast<std::uint32_t>(i);

  GroupAction a;
  a.group = g;
  a.domain_size = parts_list.size();
  a.name = "partitions:" + std::to_string(k);
  for (const Partition& pt : parts_list) {
    std::string lab = "{";
    for (std::size_t i = 0; i < pt.size(); ++i) {
      if (i) lab += '|';
      for (std::size_t j = 0; j < pt[i].size(); ++j) {
        if (j) lab += ',';
        lab += std::to_string(pt[i][j]);
      }
    }
    lab += '}';
    a.labels.push_back(lab);
  }
  for (const Permutation& gen : g.generators()) {
    std::vector<std::uint32_t> img(parts_list.size());
    for (std::size_t x = 0; x < parts_list.size(); ++x) {
      Partition pt = parts_list[x];
      for (auto& part : pt) {
        for (std::uint32_t& p : part) p = gen(p);
        std::sort(part.begin(), part.end());
      }
      std::sort(pt.begin(), pt.end());
      img[x] = where.at(pt);
    }
    a.images.emplace_back(std::move(img));
  }
  return a;
}

std::vector<std::vector<std::uint32_t>> orbits(const GroupAction& a) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(a.domain_size, false);
  for (std::uint32_t start = 0; start < a.domain_size; ++start) {
    if (seen[start]) continue;
    std::vector<std::uint32_t> orb{start};
    seen[start] = true;
    for (std::size_t head = 0; head < orb.size(); ++head)
      for (const Permutation& g : a.images) {
        std::uint32_t y = g(orb[head]);
        if (!seen[y]) {
          seen[y] = true;
          orb.push_back(y);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

bool is_transitive(const GroupAction& a) { return orbits(a).size() == 1; }

namespace {

struct Dsu {
  std::vector<std::uint32_t> parent;
  explicit Dsu(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
};

}  // namespace

std::vector<std::uint32_t> minimal_block(const GroupAction& a,
                                         std::uint32_t alpha,
                                         std::uint32_t beta) {
  if (alpha >= a.domain_size || beta >= a.domain_size || alpha == beta)
    fail("BadParameter", "block seed points invalid");
  if (!is_transitive(a)) fail("NotTransitive", "blocks need a transitive action");

  Dsu dsu(a.domain_size);
  std::vector<std::uint32_t> queue;
  auto merge = [&](std::uint32_t x, std::uint32_t y) {
    std::uint32_t rx = dsu.find(x), ry = dsu.find(y);
    if (rx == ry) return;
    dsu.parent[ry] = rx;
    queue.push_back(ry);
  };
  merge(alpha, beta);
  while (!queue.empty()) {
    std::uint32_t y = queue.back();
    queue.pop_back();
    std::uint32_t x = dsu.find(y);
    for (const Permutation& g : a.images) merge(g(x), g(y));
  }

  std::vector<std::uint32_t> block;
  std::uint32_t lead = dsu.find(alpha);
  for (std::uint32_t z = 0; z < a.domain_size; ++z)
    if (dsu.find(z) == lead) block.push_back(z);
  return block;
}

bool is_primitive(const GroupAction& a) {
  if (!is_transitive(a)) fail("NotTransitive", "primitivity needs transitivity");
  for (std::uint32_t beta = 1; beta < a.domain_size; ++beta)
    if (minimal_block(a, 0, beta).size() != a.domain_size) return false;
  return true;
}

namespace {

// equivariant bijection between two transitive actions of the same group,
// tried from every stabilizer-compatible image of point 0
std::optional<std::vector<std::uint32_t>> equivalent_transitive(
    const GroupAction& a, const GroupAction& b) {
  std::size_t m = a.domain_size;
  if (b.domain_size != m) return std::nullopt;
  std::size_t ngens = a.images.size();

  std::vector<Permutation> combined;
  for (std::size_t i = 0; i < ngens; ++i) {
    std::vector<std::uint32_t> img(2 * m);
    for (std::uint32_t x = 0; x < m; ++x) {
      img[x] = a.images[i](x);
      img[m + x] = static_cast<std::uint32_t>(m) + b.images[i](x);
    }
    combined.emplace_back(std::move(img));
  }
  PermGroup c(2 * m, combined);
  std::vector<Permutation> stab0 = c.point_stabilizer_generators(0);

  for (std::uint32_t beta = 0; beta < m; ++beta) {
    bool fixed = true;
    for (const Permutation& s : stab0)
      if (s(static_cast<std::uint32_t>(m) + beta) !=
          static_cast<std::uint32_t>(m) + beta) {
        fixed = false;
        break;
      }
    if (!fixed) continue;

    constexpr std::uint32_t kUnset = 0xffffffffu;
    std::vector<std::uint32_t> phi(m, kUnset);
    std::vector<bool> hit(m, false);
    phi[0] = beta;
    hit[beta] = true;
    std::vector<std::uint32_t> queue{0};
    bool ok = true;
    for (std::size_t head = 0; ok && head < queue.size(); ++head) {
      std::uint32_t x = queue[head];
      for (std::size_t i = 0; ok && i < ngens; ++i) {
        std::uint32_t x2 = a.images[i](x);
        std::uint32_t y2 = b.images[i](phi[x]);
        if (phi[x2] == kUnset) {
          if (hit[y2]) {
            ok = false;
            break;
          }
          phi[x2] = y2;
          hit[y2] = true;
          queue.push_back(x2);
        } else if (phi[x2] != y2) {
          ok = false;
        }
      }
    }
    if (ok && queue.size() == m) return phi;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<std::uint32_t>> actions_equivalent(
    const GroupAction& a, const GroupAction& b) {
  if (!a.group.same_generators(b.group))
    fail("BadParameter", "actions of different groups are not comparable");
  if (a.domain_size != b.domain_size) return std::nullopt;

  std::vector<std::vector<std::uint32_t>> oa = orbits(a), ob = orbits(b);
  if (oa.size() != ob.size()) return std::nullopt;

  std::vector<std::uint32_t> mapping(a.domain_size);
  std::vector<bool> used(ob.size(), false);
  for (const auto& orb_a : oa) {
    GroupAction ra = restrict_to_orbit(a, orb_a);
    bool matched = false;
    for (std::size_t j = 0; j < ob.size() && !matched; ++j) {
      if (used[j] || ob[j].size() != orb_a.size()) continue;
      GroupAction rb = restrict_to_orbit(b, ob[j]);
      if (auto phi = equivalent_transitive(ra, rb)) {
        for (std::size_t x = 0; x < orb_a.size(); ++x)
          mapping[orb_a[x]] = ob[j][(*phi)[x]];
        used[j] = true;
        matched = true;
      }
    }
    if (!matched) return std::nullopt;
  }
  return mapping;
}

GroupAction restrict_to_orbit(const GroupAction& a,
                              const std::vector<std::uint32_t>& orbit) {
  std::vector<std::uint32_t> pos(a.domain_size, 0);
  for (std::size_t i = 0; i < orbit.size(); ++i) pos[orbit[i]] = static_cast<std::uint32_t>(i);
  GroupAction r;
  r.group = a.group;
  r.domain_size = orbit.size();
  r.name = a.name + "|orbit";
  for (std::uint32_t p : orbit) r.labels.push_back(a.labels[p]);
  for (const Permutation& g : a.images) {
    std::vector<std::uint32_t> img(orbit.size());
    for (std::size_t i = 0; i < orbit.size(); ++i) img[i] = pos[g(orbit[i])];
    r.images.emplace_back(std::move(img));
  }
  return r;
}

}  // namespace lindim
