#include "lindim/gfq.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "lindim/error.hpp"
#include "lindim/poly.hpp"

namespace lindim {

namespace {

constexpr std::uint32_t kMaxOrder = 1u << 20;

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

struct TableEntry {
  std::uint32_t p, t;
  std::vector<std::uint32_t> coeffs;  // low-degree-first, monic
};

const std::vector<TableEntry>& poly_table() {
  static const std::vector<TableEntry> table = {
#include "gfq_polytable.inc"
  };
  return table;
}

// Lexicographically least monic irreducible of degree t over GF(p), the
// same order the table was generated with: coefficient tuples
// (c0, ..., c_{t-1}) compared low-degree-first.
std::vector<std::uint32_t> search_defining_poly(std::uint32_t p,
                                                std::uint32_t t) {
  const Field& fp = Field::get(p, 1);
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < t; ++i) total *= p;
  for (std::uint64_t v = 0; v < total; ++v) {
    std::vector<Fel> digits(t);
    std::uint64_t x = v;
    for (std::uint32_t i = 0; i < t; ++i) {
      digits[t - 1 - i] = static_cast<Fel>(x % p);
      x /= p;
    }
    if (digits[0] == 0) continue;  // divisible by x
    std::vector<Fel> coeffs = digits;
    coeffs.push_back(1);
    if (is_irreducible(fp, coeffs))
      return std::vector<std::uint32_t>(coeffs.begin(), coeffs.end());
  }
  fail("InternalError", "no irreducible polynomial found");
}

std::recursive_mutex registry_mutex;

}  // namespace

Field::Field(std::uint32_t p, std::uint32_t t) : p_(p), t_(t) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < t; ++i) {
    q *= p;
    if (q > kMaxOrder)
      fail("FieldTooLarge", "p^t exceeds 2^20");
  }
  q_ = static_cast<std::uint32_t>(q);
  if (t_ == 1) {
    poly_ = {0, 1};  // x, so that defining_poly is always monic of degree t
    return;
  }
  for (const TableEntry& e : poly_table()) {
    if (e.p == p && e.t == t) {
      poly_ = e.coeffs;
      return;
    }
  }
  poly_ = search_defining_poly(p, t);
}

const Field& Field::get(std::uint32_t p, std::uint32_t t) {
  if (t == 0) fail("BadParameter", "t must be positive");
  if (!is_prime(p)) fail("NotPrime", "p = " + std::to_string(p));
  std::lock_guard<std::recursive_mutex> lock(registry_mutex);
  static std::map<std::uint64_t, std::unique_ptr<Field>>* registry =
      new std::map<std::uint64_t, std::unique_ptr<Field>>;
  std::uint64_t key = (static_cast<std::uint64_t>(p) << 8) | t;
  auto it = registry->find(key);
  if (it == registry->end())
    it = registry->emplace(key, std::unique_ptr<Field>(new Field(p, t))).first;
  return *it->second;
}

const Field& Field::get_order(std::uint32_t q) {
  if (q < 2) fail("NotPrime", "field order must be at least 2");
  std::uint32_t p = 2;
  while (q % p != 0) {
    ++p;
    if (static_cast<std::uint64_t>(p) * p > q) {
      p = q;  // q itself is prime
      break;
    }
  }
  std::uint32_t t = 0;
  std::uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++t;
  }
  if (rest != 1)
    fail("NotPrime", std::to_string(q) + " is not a prime power");
  return get(p, t);
}

Fel Field::add(Fel a, Fel b) const {
  if (t_ == 1) {
    Fel s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Fel out = 0, shift = 1;
  for (std::uint32_t i = 0; i < t_; ++i) {
    Fel da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    Fel s = da + db;
    if (s >= p_) s -= p_;
    out += s * shift;
    shift *= p_;
  }
  return out;
}

Fel Field::neg(Fel a) const {
  if (t_ == 1) return a == 0 ? 0 : p_ - a;
  Fel out = 0, shift = 1;
  for (std::uint32_t i = 0; i < t_; ++i) {
    Fel d = a % p_;
    a /= p_;
    out += (d == 0 ? 0 : p_ - d) * shift;
    shift *= p_;
  }
  return out;
}

Fel Field::sub(Fel a, Fel b) const { return add(a, neg(b)); }

Fel Field::mul_ext(Fel a, Fel b) const {
  std::uint32_t da[24], db[24], prod[48] = {0};
  for (std::uint32_t i = 0; i < t_; ++i) {
    da[i] = a % p_;
    a /= p_;
    db[i] = b % p_;
    b /= p_;
  }
  for (std::uint32_t i = 0; i < t_; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < t_; ++j)
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  // reduce modulo the monic defining polynomial
  for (int k = 2 * static_cast<int>(t_) - 2; k >= static_cast<int>(t_); --k) {
    std::uint32_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (std::uint32_t j = 0; j < t_; ++j) {
      std::uint32_t sub = (c * poly_[j]) % p_;
      std::uint32_t idx = k - t_ + j;
      prod[idx] = (prod[idx] + p_ - sub) % p_;
    }
  }
  Fel out = 0, shift = 1;
  for (std::uint32_t i = 0; i < t_; ++i) {
    out += prod[i] * shift;
    shift *= p_;
  }
  return out;
}

Fel Field::mul(Fel a, Fel b) const {
  if (t_ == 1)
    return static_cast<Fel>((static_cast<std::uint64_t>(a) * b) % p_);
  return mul_ext(a, b);
}

Fel Field::pow(Fel a, std::uint64_t e) const {
  Fel r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Fel Field::inv(Fel a) const {
  if (a == 0) fail("DivideByZero", "inverse of zero");
  return pow(a, q_ - 2);
}

Fel Field::div(Fel a, Fel b) const {
  if (b == 0) fail("DivideByZero", "division by zero");
  return mul(a, inv(b));
}

void Field::to_coeffs(Fel a, std::uint32_t* out) const {
  for (std::uint32_t i = 0; i < t_; ++i) {
    out[i] = a % p_;
    a /= p_;
  }
}

Fel Field::from_coeffs(const std::uint32_t* c) const {
  Fel out = 0, shift = 1;
  for (std::uint32_t i = 0; i < t_; ++i) {
    if (c[i] >= p_) fail("BadParameter", "coefficient not reduced mod p");
    out += c[i] * shift;
    shift *= p_;
  }
  return out;
}

std::string Field::elem_str(Fel a) const {
  if (t_ == 1) return std::to_string(a);
  std::string s;
  for (std::uint32_t i = 0; i < t_; ++i) {
    if (i) s += ',';
    s += std::to_string(a % p_);
    a /= p_;
  }
  return s;
}

Fel Field::parse_elem(const std::string& s) const {
  std::uint32_t digits[24];
  std::size_t pos = 0, idx = 0;
  while (true) {
    std::size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? comma
                                                               : comma - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      fail("ParseError", "bad field element '" + s + "'");
    unsigned long v = std::stoul(tok);
    if (idx >= t_ || v >= p_)
      fail("ParseError", "field element '" + s + "' out of range");
    digits[idx++] = static_cast<std::uint32_t>(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (idx != t_)
    fail("ParseError", "expected " + std::to_string(t_) +
                           " coefficients in '" + s + "'");
  return from_coeffs(digits);
}

Embedding::Embedding(const Field& sub, const Field& sup)
    : sub_(&sub), sup_(&sup) {
  if (sub.p() != sup.p() || sup.t() % sub.t() != 0)
    fail("NoEmbedding", "GF(" + std::to_string(sub.q()) + ") does not embed in GF(" +
                            std::to_string(sup.q()) + ")");
  if (sub.t() == 1) {
    gen_image_ = 1;  // the prime subfield is 0..p-1 in every packing
    return;
  }
  // least root of sub's defining polynomial, coefficient tuples compared
  // low-degree-first (the last coordinate varies fastest below)
  const auto& dp = sub.defining_poly();
  std::uint32_t p = sup.p(), e = sup.t();
  std::uint64_t total = sup.q();
  for (std::uint64_t v = 0; v < total; ++v) {
    std::uint32_t digits[24];
    std::uint64_t x = v;
    for (std::uint32_t i = 0; i < e; ++i) {
      digits[e - 1 - i] = static_cast<std::uint32_t>(x % p);
      x /= p;
    }
    Fel cand = sup.from_coeffs(digits);
    Fel acc = 0;
    for (std::size_t i = dp.size(); i-- > 0;)
      acc = sup.add(sup.mul(acc, cand), dp[i]);
    if (acc == 0) {
      gen_image_ = cand;
      return;
    }
  }
  fail("NoEmbedding", "defining polynomial has no root in the larger field");
}

Fel Embedding::operator()(Fel a) const {
  if (sub_->t() == 1) return a;
  std::uint32_t digits[24];
  sub_->to_coeffs(a, digits);
  Fel acc = 0;
  for (std::uint32_t i = sub_->t(); i-- > 0;)
    acc = sup_->add(sup_->mul(acc, gen_image_), digits[i]);
  return acc;
}

}  // namespace lindim
