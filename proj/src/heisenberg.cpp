#include "satake/heisenberg.hpp"

#include <algorithm>

namespace satake {

HeisenbergElement heisenberg_identity(int rank) {
  return {Int(0), zero_vector(rank), zero_vector(rank), Int(0)};
}

HeisenbergElement multiply(const IntegerBilinearForm& b, const HeisenbergElement& g1,
                           const HeisenbergElement& g2) {
  HeisenbergElement r;
  r.a = g1.a + g2.a + eval_b(b, g1.lam, g2.mu) - eval_b(b, g1.mu, g2.lam) +
        g1.k * eval_b(b, g1.lam, g2.lam);
  r.lam = vec_add(g1.lam, g2.lam);
  r.mu = vec_add(vec_add(g1.mu, g2.mu), vec_scale(g1.k, g2.lam));
  r.k = g1.k + g2.k;
  return r;
}

HeisenbergElement inverse(const IntegerBilinearForm& b, const HeisenbergElement& g) {
  HeisenbergElement r;
  r.a = -g.a + eval_b(b, g.lam, g.mu) - eval_b(b, g.mu, g.lam);
  r.lam = vec_neg(g.lam);
  r.mu = vec_sub(vec_scale(g.k, g.lam), g.mu);
  r.k = -g.k;
  return r;
}

LeftNormalForm left_normal_form(const IntegerBilinearForm& b, const HeisenbergElement& g) {
  LeftNormalForm nf;
  nf.witness = vec_neg(g.lam);
  nf.rep = multiply(b, {Int(0), nf.witness, zero_vector(static_cast<int>(g.lam.size())), Int(0)}, g);
  return nf;
}

bool in_positive_semigroup(const HeisenbergElement& g) {
  if (g.k > 0) return true;
  return g.k == 0 && is_zero(g.mu);
}

namespace {
Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
}  // namespace

DoubleCosetLabel double_coset_normal_form(const IntegerBilinearForm& b,
                                          const EvenSymmetricForm& q,
                                          const HeisenbergElement& g) {
  const HeisenbergElement rep = left_normal_form(b, g).rep;
  if (rep.k < 0 || (rep.k == 0 && !is_zero(rep.mu)))
    throw domain_error("element outside the positive semigroup has no double-coset label");
  if (rep.k == 0) return {Int(0), rep.a, zero_vector(static_cast<int>(rep.mu.size()))};

  // Unique nu with mu + k*nu coordinatewise in [0, k).
  LatticeVector nu(rep.mu.size());
  for (std::size_t i = 0; i < rep.mu.size(); ++i) nu[i] = -floor_div(rep.mu[i], rep.k);
  const LatticeVector mu_bar = vec_add(rep.mu, vec_scale(rep.k, nu));
  const Int a = rep.a - eval_q(q, rep.mu, nu) - rep.k * eval_q(q, nu, nu) / 2;
  return {rep.k, a, mu_bar};
}

std::vector<HeisenbergElement> left_coset_reps(const EvenSymmetricForm& q,
                                               const DoubleCosetLabel& label, const Int& bound) {
  const int rank = static_cast<int>(label.mu_bar.size());
  if (label.k == 0) return {{label.a, zero_vector(rank), zero_vector(rank), Int(0)}};

  const auto pts = enumerate_sublevel(q, label.k, e_map(q, label.mu_bar), bound - label.a);
  std::vector<HeisenbergElement> out;
  out.reserve(pts.size());
  for (const auto& p : pts) {
    out.push_back({label.a + p.value, zero_vector(rank),
                   vec_add(label.mu_bar, vec_scale(label.k, p.nu)), label.k});
  }
  return out;
}

}  // namespace satake
