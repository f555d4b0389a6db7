#include "lindim/perm.hpp"

#include <numeric>

#include "lindim/error.hpp"

namespace lindim {

Permutation::Permutation(std::vector<std::uint32_t> images)
    : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (std::uint32_t x : img_) {
    if (x >= img_.size() || seen[x])
      fail("BadParameter", "permutation images are not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> v(n);
  std::iota(v.begin(), v.end(), 0u);
  Permutation p;
  p.img_ = std::move(v);
  return p;
}

bool Permutation::is_identity() const {
  for (std::uint32_t x = 0; x < img_.size(); ++x)
    if (img_[x] != x) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img_.resize(img_.size());
  for (std::uint32_t x = 0; x < img_.size(); ++x) r.img_[img_[x]] = x;
  return r;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    fail("BadParameter", "composing permutations of different degrees");
  Permutation r;
  r.img_.resize(a.degree());
  for (std::uint32_t x = 0; x < a.degree(); ++x) r.img_[x] = b.img_[a.img_[x]];
  return r;
}

Permutation Permutation::parse_cycles(const std::string& text,
                                      std::size_t degree) {
  std::vector<std::uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  bool any = false;
  while (i < text.size()) {
    if (text[i] != '(') fail("ParseError", "expected '(' in cycle notation");
    ++i;
    any = true;
    std::vector<std::uint32_t> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!cycle.empty()) {
        if (text[i] != ',') fail("ParseError", "expected ',' in cycle");
        ++i;
        skip_ws();
      }
      std::size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      if (i == start) fail("ParseError", "expected point number in cycle");
      unsigned long v = std::stoul(text.substr(start, i - start));
      if (v < 1 || v > degree)
        fail("ParseError", "cycle point out of range 1.." +
                               std::to_string(degree));
      std::uint32_t p = static_cast<std::uint32_t>(v - 1);
      if (used[p]) fail("ParseError", "point repeated across cycles");
      used[p] = true;
      cycle.push_back(p);
      skip_ws();
    }
    if (i >= text.size()) fail("ParseError", "unterminated cycle");
    ++i;  // ')'
    for (std::size_t k = 0; k + 1 < cycle.size(); ++k)
      img[cycle[k]] = cycle[k + 1];
    if (cycle.size() > 1) img[cycle.back()] = cycle.front();
    skip_ws();
  }
  if (!any) fail("ParseError", "empty permutation text");
  return Permutation(std::move(img));
}

std::string Permutation::cycles_str() const {
  std::string out;
  std::vector<bool> seen(img_.size(), false);
  for (std::uint32_t x = 0; x < img_.size(); ++x) {
    if (seen[x] || img_[x] == x) continue;
    out += '(';
    std::uint32_t y = x;
    bool first = true;
    do {
      if (!first) out += ',';
      out += std::to_string(y + 1);
      seen[y] = true;
      y = img_[y];
      first = false;
    } while (y != x);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

std::uint64_t perm_order(const Permutation& p) {
  std::uint64_t ord = 1;
  std::vector<bool> seen(p.degree(), false);
  for (std::uint32_t x = 0; x < p.degree(); ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    std::uint32_t y = x;
    do {
      seen[y] = true;
      y = p(y);
      ++len;
    } while (y != x);
    ord = std::lcm(ord, len);
  }
  return ord;
}

}  // namespace lindim
