#include "satake/lattice.hpp"

#include <algorithm>
#include <cmath>

namespace satake {

LatticeVector vec_add(const LatticeVector& x, const LatticeVector& y) {
  if (x.size() != y.size()) throw domain_error("lattice: rank mismatch");
  LatticeVector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

LatticeVector vec_sub(const LatticeVector& x, const LatticeVector& y) {
  if (x.size() != y.size()) throw domain_error("lattice: rank mismatch");
  LatticeVector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

LatticeVector vec_neg(const LatticeVector& x) {
  LatticeVector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = -x[i];
  return r;
}

LatticeVector vec_scale(const Int& c, const LatticeVector& x) {
  LatticeVector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = c * x[i];
  return r;
}

LatticeVector zero_vector(int rank) { return LatticeVector(static_cast<std::size_t>(rank), Int(0)); }

bool is_zero(const LatticeVector& x) {
  return std::all_of(x.begin(), x.end(), [](const Int& c) { return c == 0; });
}

Int determinant(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  Matrix a = m;
  Int prev = 1;
  Int sign = 1;
  for (int i = 0; i < n - 1; ++i) {
    if (a[i][i] == 0) {
      int p = -1;
      for (int r = i + 1; r < n; ++r)
        if (a[r][i] != 0) { p = r; break; }
      if (p < 0) return 0;
      std::swap(a[i], a[p]);
      sign = -sign;
    }
    for (int r = i + 1; r < n; ++r) {
      for (int c = i + 1; c < n; ++c) {
        a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) / prev;
      }
      a[r][i] = 0;
    }
    prev = a[i][i];
  }
  return sign * a[n - 1][n - 1];
}

EvenSymmetricForm derive_q(const IntegerBilinearForm& b) {
  const int n = b.rank();
  EvenSymmetricForm q;
  q.gram.assign(n, std::vector<Int>(n, Int(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q.gram[i][j] = b.gram[i][j] + b.gram[j][i];
  return q;
}

static Int eval_gram(const Matrix& g, const LatticeVector& x, const LatticeVector& y) {
  if (x.size() != g.size() || y.size() != g.size())
    throw config_error("bilinear form: dimension mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) s += x[i] * g[i][j] * y[j];
  return s;
}

Int eval_b(const IntegerBilinearForm& b, const LatticeVector& x, const LatticeVector& y) {
  return eval_gram(b.gram, x, y);
}

Int eval_q(const EvenSymmetricForm& q, const LatticeVector& x, const LatticeVector& y) {
  return eval_gram(q.gram, x, y);
}

Covector e_map(const EvenSymmetricForm& q, const LatticeVector& v) {
  if (determinant(q.gram) == 0) throw domain_error("e_map: form is degenerate");
  if (v.size() != q.gram.size()) throw config_error("e_map: dimension mismatch");
  Covector w(q.gram.size(), Int(0));
  for (std::size_t j = 0; j < q.gram.size(); ++j)
    for (std::size_t i = 0; i < q.gram.size(); ++i) w[j] += v[i] * q.gram[i][j];
  return w;
}

Int eval_covector(const Covector& c, const LatticeVector& v) {
  if (c.size() != v.size()) throw config_error("covector: dimension mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * v[i];
  return s;
}

bool is_negative_definite(const EvenSymmetricForm& q) {
  const int n = q.rank();
  for (int i = 1; i <= n; ++i) {
    Matrix lead(static_cast<std::size_t>(i), std::vector<Int>(static_cast<std::size_t>(i)));
    for (int r = 0; r < i; ++r)
      for (int c = 0; c < i; ++c) lead[r][c] = q.gram[r][c];
    const Int d = determinant(lead);
    if (i % 2 == 1 ? d >= 0 : d <= 0) return false;
  }
  return true;
}

void validate_even_symmetric(const EvenSymmetricForm& q) {
  const int n = q.rank();
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(q.gram[i].size()) != n) throw config_error("Q: not square");
    if (q.gram[i][i] % 2 != 0) throw config_error("Q: diagonal entry is odd");
    for (int j = 0; j < n; ++j)
      if (q.gram[i][j] != q.gram[j][i]) throw config_error("Q: not symmetric");
  }
}

namespace {

struct Ldl {
  std::vector<Rat> d;                  // positive pivots
  std::vector<std::vector<Rat>> u;     // u[i][j], j > i
};

// q(x) = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2 for the positive-definite
// rational matrix A.
Ldl ldl_decompose(std::vector<std::vector<Rat>> a) {
  const int n = static_cast<int>(a.size());
  Ldl out;
  out.d.resize(n);
  out.u.assign(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    out.d[i] = a[i][i];
    if (out.d[i] <= 0) throw domain_error("enumeration requires definite form");
    for (int j = i + 1; j < n; ++j) out.u[i][j] = a[i][j] / out.d[i];
    for (int r = i + 1; r < n; ++r)
      for (int c = i + 1; c < n; ++c) a[r][c] -= out.d[i] * out.u[i][r] * out.u[i][c];
  }
  return out;
}

// Solve A x = rhs by Gaussian elimination over rationals.
std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> a, std::vector<Rat> rhs) {
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) {
    int p = i;
    while (p < n && a[p][i] == 0) ++p;
    if (p == n) throw domain_error("linear solve: singular matrix");
    std::swap(a[i], a[p]);
    std::swap(rhs[i], rhs[p]);
    for (int r = 0; r < n; ++r) {
      if (r == i) continue;
      const Rat f = a[r][i] / a[i][i];
      if (f == 0) continue;
      for (int c = i; c < n; ++c) a[r][c] -= f * a[i][c];
      rhs[r] -= f * rhs[i];
    }
  }
  std::vector<Rat> x(n);
  for (int i = 0; i < n; ++i) x[i] = rhs[i] / a[i][i];
  return x;
}

void enumerate_rec(const Ldl& ldl, const std::vector<Rat>& center, int i,
                   LatticeVector& nu, const Rat& remaining,
                   std::vector<SublevelPointRat>& out) {
  if (i < 0) {
    out.push_back({nu, Rat(0)});  // value filled in by caller
    return;
  }
  // term_i = d_i (nu_i - m_i + sum_{j>i} u_ij (nu_j - m_j))^2
  Rat off = -center[static_cast<std::size_t>(i)];
  for (std::size_t j = static_cast<std::size_t>(i) + 1; j < nu.size(); ++j)
    off += ldl.u[static_cast<std::size_t>(i)][j] * (Rat(nu[j]) - center[j]);
  const Rat budget = remaining / ldl.d[static_cast<std::size_t>(i)];
  if (budget < 0) return;
  const double s = std::sqrt(static_cast<double>(budget));
  const double o = static_cast<double>(off);
  Int lo = Int(static_cast<long long>(std::floor(-o - s))) - 2;
  Int hi = Int(static_cast<long long>(std::ceil(-o + s))) + 2;
  for (Int t = lo; t <= hi; ++t) {
    const Rat e = Rat(t) + off;
    const Rat term = ldl.d[static_cast<std::size_t>(i)] * e * e;
    if (term > remaining) continue;
    nu[static_cast<std::size_t>(i)] = t;
    enumerate_rec(ldl, center, i - 1, nu, remaining - term, out);
  }
  nu[static_cast<std::size_t>(i)] = 0;
}

}  // namespace

std::vector<SublevelPointRat> enumerate_sublevel_rat(const EvenSymmetricForm& q, const Int& k,
                                                     const std::vector<Rat>& shift,
                                                     const Rat& bound) {
  if (k < 1) throw domain_error("enumerate_sublevel: level must be positive");
  if (!is_negative_definite(q)) throw domain_error("enumeration requires definite form");
  const int n = q.rank();
  if (static_cast<int>(shift.size()) != n) throw config_error("enumerate_sublevel: shift rank mismatch");

  if (n == 0) {
    if (bound >= 0) return {{LatticeVector{}, Rat(0)}};
    return {};
  }

  // val(nu) = nu^T A nu + c^T nu with A = (k/2)(-Q) positive definite, c = -shift.
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Rat(-k * q.gram[i][j]) / 2;
  std::vector<Rat> c(n);
  for (int i = 0; i < n; ++i) c[i] = -Rat(shift[static_cast<std::size_t>(i)]);

  // Real minimizer m solves A m = -c/2; val(m) = c^T m / 2.
  std::vector<Rat> rhs(n);
  for (int i = 0; i < n; ++i) rhs[i] = -c[i] / 2;
  const std::vector<Rat> center = solve_linear(a, rhs);
  Rat v0 = 0;
  for (int i = 0; i < n; ++i) v0 += c[i] * center[i];
  v0 /= 2;

  const Rat radius = bound - v0;
  if (radius < 0) return {};

  const Ldl ldl = ldl_decompose(a);
  std::vector<SublevelPointRat> out;
  LatticeVector nu = zero_vector(n);
  enumerate_rec(ldl, center, n - 1, nu, radius, out);

  for (auto& p : out) {
    Rat val = v0;
    for (int i = 0; i < n; ++i) {
      Rat e = Rat(p.nu[static_cast<std::size_t>(i)]) - center[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < n; ++j)
        e += ldl.u[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
             (Rat(p.nu[static_cast<std::size_t>(j)]) - center[static_cast<std::size_t>(j)]);
      val += ldl.d[static_cast<std::size_t>(i)] * e * e;
    }
    p.value = val;
  }
  std::sort(out.begin(), out.end(), [](const SublevelPointRat& x, const SublevelPointRat& y) {
    if (x.value != y.value) return x.value < y.value;
    return x.nu < y.nu;
  });
  return out;
}

std::vector<SublevelPoint> enumerate_sublevel(const EvenSymmetricForm& q, const Int& k,
                                              const Covector& shift, const Int& bound) {
  std::vector<Rat> s(shift.size());
  for (std::size_t i = 0; i < shift.size(); ++i) s[i] = Rat(shift[i]);
  const auto pts = enumerate_sublevel_rat(q, k, s, Rat(bound));
  std::vector<SublevelPoint> out;
  out.reserve(pts.size());
  for (const auto& p : pts) {
    if (denominator(p.value) != 1) throw domain_error("enumerate_sublevel: non-integer value");
    out.push_back({p.nu, Int(numerator(p.value))});
  }
  return out;
}

Int sublevel_min(const EvenSymmetricForm& q, const Int& k, const Covector& shift) {
  // val(0) = 0 is always attainable, so the minimum is <= 0.
  const auto pts = enumerate_sublevel(q, k, shift, Int(0));
  Int m = 0;
  for (const auto& p : pts) m = std::min(m, p.value);
  return m;
}

}  // namespace satake
