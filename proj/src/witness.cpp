#include "lindim/witness.hpp"

#include <map>
#include <sstream>

#include "lindim/error.hpp"

namespace lindim {

VerifyReport witness_verify(const WitnessCertificate& c, const GroupAction& a) {
  if (c.phi.size() != a.domain_size)
    fail("ShapeMismatch", "phi has " + std::to_string(c.phi.size()) +
                              " entries for a domain of size " +
                              std::to_string(a.domain_size));
  if (c.rho.size() != a.images.size())
    fail("ShapeMismatch", "rho has " + std::to_string(c.rho.size()) +
                              " matrices for " +
                              std::to_string(a.images.size()) + " generators");
  for (const MatrixGF& r : c.rho)
    if (r.rows() != c.dim || r.cols() != c.dim)
      fail("ShapeMismatch", "rho matrix is not dim x dim");
  for (const std::vector<Fel>& v : c.phi)
    if (v.size() != c.dim) fail("ShapeMismatch", "phi vector of wrong length");

  VerifyReport rep;
  for (std::size_t gi = 0; gi < c.rho.size(); ++gi)
    for (std::uint32_t x = 0; x < a.domain_size; ++x) {
      std::vector<Fel> moved = row_times_matrix(c.phi[x], c.rho[gi]);
      if (moved != c.phi[a.images[gi](x)]) {
        rep.ok = false;
        rep.code = "IntertwineFailure";
        rep.detail = "generator " + std::to_string(gi) + " at point " +
                     a.labels[x];
        return rep;
      }
    }

  std::map<std::vector<Fel>, std::uint32_t> seen;
  for (std::uint32_t x = 0; x < a.domain_size; ++x) {
    auto [it, fresh] = seen.emplace(c.phi[x], x);
    if (!fresh) {
      rep.ok = false;
      rep.code = "NotInjective";
      rep.detail = "points " + a.labels[it->second] + " and " + a.labels[x] +
                   " share an image";
      return rep;
    }
  }

  MatrixGF stacked(c.field(), c.phi.size(), c.dim);
  for (std::size_t i = 0; i < c.phi.size(); ++i)
    for (std::size_t j = 0; j < c.dim; ++j) stacked.set(i, j, c.phi[i][j]);
  std::size_t r = rref(stacked).rank();
  if (r != c.dim) {
    rep.ok = false;
    rep.code = "NotSpanning";
    rep.detail = "phi spans " + std::to_string(r) + " of " +
                 std::to_string(c.dim) + " dimensions";
  }
  return rep;
}

WitnessCertificate make_witness(const FGModule& m, const GroupAction& a,
                                const SubspaceGF& u, const std::string& method,
                                std::uint64_t seed, bool complete) {
  auto [quot, proj] = quotient_module(m, u);
  WitnessCertificate c;
  c.f = m.f;
  c.dim = quot.dim;
  c.rho = quot.gens;
  c.labels = a.labels;
  for (std::uint32_t x = 0; x < a.domain_size; ++x) {
    std::vector<Fel> v(c.dim);
    for (std::size_t j = 0; j < c.dim; ++j) v[j] = proj.at(x, j);
    c.phi.push_back(std::move(v));
  }
  c.kernel_sub = u;
  c.method = method;
  c.seed = seed;
  c.complete = complete;
  return c;
}

std::string witness_str(const WitnessCertificate& c) {
  std::string out = "lindim " + std::to_string(c.dim) + " method " + c.method +
                    " seed " + std::to_string(c.seed) + " complete " +
                    (c.complete ? "true" : "false") + "\n";
  out += "rho\n";
  for (const MatrixGF& r : c.rho) out += matrix_str(r);
  out += "phi\n";
  const Field& f = c.field();
  for (std::size_t i = 0; i < c.phi.size(); ++i) {
    out += c.labels[i] + " :";
    for (Fel e : c.phi[i]) out += " " + f.elem_str(e);
    out += "\n";
  }
  out += "kernel\n";
  out += matrix_str(c.kernel_sub.basis());
  return out;
}

namespace {

// one matrix block: a header line whose first token is the row count,
// followed by that many rows
MatrixGF read_matrix_block(std::istringstream& in, const std::string& header) {
  std::istringstream hs(header);
  std::size_t rows = 0;
  if (!(hs >> rows)) fail("ParseError", "bad matrix header in witness file");
  std::string block = header + "\n";
  for (std::size_t i = 0; i < rows; ++i) {
    std::string line;
    if (!std::getline(in, line))
      fail("ParseError", "truncated matrix block in witness file");
    block += line + "\n";
  }
  return matrix_parse(block);
}

}  // namespace

WitnessCertificate witness_parse(const std::string& text) {
  std::istringstream in(text);
  std::string word, line;
  WitnessCertificate c;

  if (!(in >> word) || word != "lindim")
    fail("ParseError", "witness file must start with a lindim header");
  std::uint64_t value = 0;
  if (!(in >> value >> word) || word != "method")
    fail("ParseError", "bad witness header");
  if (!(in >> c.method >> word) || word != "seed")
    fail("ParseError", "bad witness header");
  if (!(in >> c.seed >> word) || word != "complete")
    fail("ParseError", "bad witness header");
  if (!(in >> word) || (word != "true" && word != "false"))
    fail("ParseError", "bad completeness flag in witness header");
  c.complete = word == "true";
  c.dim = static_cast<std::size_t>(value);
  std::getline(in, line);

  if (!std::getline(in, line) || line != "rho")
    fail("ParseError", "witness file is missing the rho section");
  while (std::getline(in, line) && line != "phi")
    c.rho.push_back(read_matrix_block(in, line));
  if (line != "phi") fail("ParseError", "witness file is missing phi");

  while (std::getline(in, line) && line != "kernel") {
    std::size_t pos = line.find(" :");
    if (pos == std::string::npos)
      fail("ParseError", "bad phi line: " + line);
    c.labels.push_back(line.substr(0, pos));
    std::istringstream vs(line.substr(pos + 2));
    std::vector<Fel> v;
    std::string tok;
    while (vs >> tok) {
      if (c.rho.empty()) fail("ParseError", "phi before any rho matrix");
      v.push_back(c.rho[0].field().parse_elem(tok));
    }
    c.phi.push_back(std::move(v));
  }
  if (line != "kernel") fail("ParseError", "witness file is missing kernel");

  if (!std::getline(in, line))
    fail("ParseError", "witness file is missing the kernel matrix");
  MatrixGF kb = read_matrix_block(in, line);
  c.kernel_sub = SubspaceGF::from_rows(kb);
  c.f = &kb.field();
  return c;
}

std::vector<std::vector<Fel>> afford_from_vector(const FGModule& m,
                                                 const std::vector<Fel>& v,
                                                 const GroupAction& a) {
  if (!is_transitive(a)) fail("BadParameter", "needs a transitive action");
  if (v.size() != m.dim)
    fail("BadParameter", "seed vector length differs from the module");
  if (m.gens.size() != a.images.size())
    fail("BadParameter", "module and action have different generator counts");

  const std::size_t n = a.domain_size;
  std::map<std::vector<Fel>, std::uint32_t> index;
  std::vector<std::vector<Fel>> orb{v};
  index.emplace(v, 0);
  for (std::size_t head = 0; head < orb.size(); ++head)
    for (const MatrixGF& g : m.gens) {
      std::vector<Fel> w = row_times_matrix(orb[head], g);
      if (index.emplace(w, static_cast<std::uint32_t>(orb.size())).second) {
        orb.push_back(std::move(w));
        if (orb.size() > n)
          fail("OrbitTooLong", "matrix orbit exceeds the domain size");
      }
    }
  if (orb.size() != n)
    fail("NoEquivalence", "matrix orbit has size " +
                              std::to_string(orb.size()) + ", domain has " +
                              std::to_string(n));

  GroupAction induced;
  induced.group = a.group;
  induced.domain_size = n;
  for (std::uint32_t i = 0; i < n; ++i)
    induced.labels.push_back(std::to_string(i));
  for (const MatrixGF& g : m.gens) {
    std::vector<std::uint32_t> img(n);
    for (std::uint32_t i = 0; i < n; ++i)
      img[i] = index.at(row_times_matrix(orb[i], g));
    induced.images.emplace_back(std::move(img));
  }
  induced.name = "orbit of a vector";

  auto match = actions_equivalent(a, induced);
  if (!match)
    fail("NoEquivalence", "orbit action is not equivalent to the target");
  std::vector<std::vector<Fel>> phi(n);
  for (std::uint32_t x = 0; x < n; ++x) phi[x] = orb[(*match)[x]];
  return phi;
}

}  // namespace lindim
