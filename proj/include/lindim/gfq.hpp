#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lindim {

// An element of GF(p^t), packed as c0 + c1*p + ... + c_{t-1}*p^{t-1} with
// digits 0 <= ci < p.  Every integer in [0, q) is a valid element; 0 and 1
// are the additive and multiplicative identities in every field.
using Fel = std::uint32_t;

// A finite field GF(p^t), q = p^t <= 2^20.  Instances are canonical: get()
// returns the same object for the same (p, t), so pointer equality works and
// two fields of equal order always share one defining polynomial.  For t > 1
// the polynomial comes from a built-in table (p^t <= 2^16) or, beyond that,
// from a deterministic search for the lexicographically least monic
// irreducible (coefficients compared low-degree-first).
class Field {
public:
  static const Field& get(std::uint32_t p, std::uint32_t t);
  // Order form: factors q as p^t.  "4" means GF(4) = GF(2^2).
  static const Field& get_order(std::uint32_t q);

  std::uint32_t p() const { return p_; }
  std::uint32_t t() const { return t_; }
  std::uint32_t q() const { return q_; }
  // Monic, degree t, coefficients low-degree-first (length t+1).
  const std::vector<std::uint32_t>& defining_poly() const { return poly_; }

  Fel add(Fel a, Fel b) const;
  Fel sub(Fel a, Fel b) const;
  Fel neg(Fel a) const;
  Fel mul(Fel a, Fel b) const;
  Fel inv(Fel a) const;          // DivideByZero on 0
  Fel div(Fel a, Fel b) const;   // DivideByZero on b == 0
  Fel pow(Fel a, std::uint64_t e) const;

  // The residue class of x (t > 1); for prime fields there is no generator
  // in this sense and callers use 1.
  Fel gen() const { return t_ == 1 ? 1 : p_; }

  void to_coeffs(Fel a, std::uint32_t* out) const;  // t digits
  Fel from_coeffs(const std::uint32_t* c) const;    // t digits, each < p

  // Text form: a single decimal for t == 1, else t comma-separated
  // coefficients low-degree-first ("1,0,1" is 1 + x^2 in GF(8)).
  std::string elem_str(Fel a) const;
  Fel parse_elem(const std::string& s) const;

  bool operator==(const Field& o) const { return p_ == o.p_ && t_ == o.t_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

private:
  Field(std::uint32_t p, std::uint32_t t);
  Fel mul_ext(Fel a, Fel b) const;

  std::uint32_t p_, t_, q_;
  std::vector<std::uint32_t> poly_;
};

// Irreducibility over the coefficient field, deterministic (Rabin's test).
// Coefficients low-degree-first; degree = coeffs.size() - 1, at most 16 here.
bool is_irreducible(const Field& f, const std::vector<Fel>& coeffs);

// Field embedding GF(p^s) -> GF(p^e) for s | e, determined by sending the
// generator of sub to the least root (low-degree-first lexicographic order
// on coefficient tuples) of sub's defining polynomial in sup.
class Embedding {
public:
  Embedding(const Field& sub, const Field& sup);  // NoEmbedding if unrelated

  const Field& sub() const { return *sub_; }
  const Field& sup() const { return *sup_; }
  Fel gen_image() const { return gen_image_; }
  Fel operator()(Fel a) const;

private:
  const Field* sub_;
  const Field* sup_;
  Fel gen_image_;
};

}  // namespace lindim
