#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lindim {

// Permutation of {0,...,n-1}.  Composition reads left to right: (a*b) means
// "apply a, then b", so x^(a*b) = (x^a)^b and groups act from the right.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images);
  static Permutation identity(std::size_t n);

  std::size_t degree() const { return img_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return img_[x]; }
  const std::vector<std::uint32_t>& images() const { return img_; }

  bool is_identity() const;
  Permutation inverse() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

  // cycle notation on 1-based points: "(1,2,3)(4,5)"; "()" is the identity
  static Permutation parse_cycles(const std::string& text, std::size_t degree);
  std::string cycles_str() const;

 private:
  std::vector<std::uint32_t> img_;
};

// order of the permutation: lcm of its cycle lengths
std::uint64_t perm_order(const Permutation& p);

}  // namespace lindim
