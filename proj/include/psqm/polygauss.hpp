#pragma once
// Exact state representation: polynomial(u) * exp(-u^T A u) with A a symmetric
// positive-definite matrix over the surd field.  The class is closed under
// application of WeylOperators (coordinate multiplication and derivatives),
// which is the engine behind every closed-form star-genvalue check.

#include "psqm/bopp.hpp"
#include "psqm/symbol.hpp"
#include "psqm/weyl.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <vector>

namespace psqm {

struct PolyGaussForm {
  int dim = 1;                           // spatial dimension d; 2d variables
  PolynomialSymbol poly;                 // over the 2d phase variables
  std::vector<std::vector<Surd>> quad;   // 2d x 2d symmetric PD matrix A
  double norm = 1.0;                     // optional numeric prefactor

  PolyGaussForm() = default;
  PolyGaussForm(int d, PolynomialSymbol p, std::vector<std::vector<Surd>> A,
                double n = 1.0)
      : dim(d), poly(std::move(p)), quad(std::move(A)), norm(n) {
    validate();
  }

  static std::vector<std::vector<Surd>> scaled_identity(int d, const Surd& a) {
    std::vector<std::vector<Surd>> A(2 * d, std::vector<Surd>(2 * d, Surd(0)));
    for (int i = 0; i < 2 * d; ++i) A[i][i] = a;
    return A;
  }

  static PolyGaussForm gaussian(int d, const Surd& width = Surd(1)) {
    return PolyGaussForm(d, PolynomialSymbol::constant(d, CScalar(1)),
                         scaled_identity(d, width));
  }

  void validate() const {
    const size_t n = 2 * static_cast<size_t>(dim);
    if (quad.size() != n)
      throw std::invalid_argument("PolyGaussForm: quad size mismatch");
    for (const auto& row : quad)
      if (row.size() != n)
        throw std::invalid_argument("PolyGaussForm: quad not square");
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (quad[i][j] != quad[j][i])
          throw std::invalid_argument("PolyGaussForm: quad not symmetric");
    // positive definiteness: all leading principal minors > 0
    for (size_t k = 1; k <= n; ++k)
      if (leading_minor(k).sign() <= 0)
        throw std::invalid_argument("PolyGaussForm: quad not positive definite");
  }

  Surd leading_minor(size_t k) const {
    // fraction-free is unnecessary at 6x6; use recursive cofactor expansion
    std::vector<std::vector<Surd>> M(k, std::vector<Surd>(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) M[i][j] = quad[i][j];
    return det(M);
  }

  static Surd det(const std::vector<std::vector<Surd>>& M) {
    size_t n = M.size();
    if (n == 1) return M[0][0];
    Surd s(0);
    int sign = 1;
    for (size_t c = 0; c < n; ++c) {
      if (!M[0][c].is_zero()) {
        std::vector<std::vector<Surd>> sub(n - 1, std::vector<Surd>(n - 1));
        for (size_t i = 1; i < n; ++i) {
          size_t jj = 0;
          for (size_t j = 0; j < n; ++j) {
            if (j == c) continue;
            sub[i - 1][jj++] = M[i][j];
          }
        }
        Surd t = M[0][c] * det(sub);
        s += (sign > 0) ? t : -t;
      }
      sign = -sign;
    }
    return s;
  }

  // d/du_v applied to poly * exp(-u^T A u):
  //   [d poly/du_v - 2 (A u)_v poly] * exp(-u^T A u)
  PolynomialSymbol poly_deriv(const PolynomialSymbol& p, int v) const {
    PolynomialSymbol r = p.deriv(v);
    for (int j = 0; j < 2 * dim; ++j) {
      if (quad[v][j].is_zero()) continue;
      CScalar c(Surd(Rat(-2)) * quad[v][j]);
      for (const auto& [m, pc] : p.terms) {
        SIdx mm = m;
        mm[j] += 1;
        r.add(mm, c * pc);
      }
    }
    return r;
  }

  std::complex<double> eval(const std::vector<double>& u) const {
    double e = 0.0;
    for (int i = 0; i < 2 * dim; ++i)
      for (int j = 0; j < 2 * dim; ++j) e += quad[i][j].to_d() * u[i] * u[j];
    return poly.eval(u) * std::exp(-e) * norm;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["dim"] = dim;
    j["poly"] = poly.to_json();
    nlohmann::json A = nlohmann::json::array();
    for (const auto& row : quad) {
      for (const auto& e : row) A.push_back(e.to_d());
    }
    j["quad_row_major"] = A;
    j["norm"] = norm;
    return j;
  }
};

inline PolyGaussForm polygauss_apply(const WeylOperator& op,
                                     const PolyGaussForm& s) {
  if (op.dim != s.dim)
    throw std::invalid_argument("polygauss_apply: dimension mismatch");
  const int d = s.dim;
  PolyGaussForm out = s;
  out.poly = PolynomialSymbol::zero(d);
  out.poly.float_mode = s.poly.float_mode;
  // derivatives act first (they sit to the right in normal order); chains
  // recur across operator terms, so cache them by derivative multi-index
  std::map<MIdx, PolynomialSymbol> derived;
  std::function<const PolynomialSymbol&(const MIdx&)> get_derived =
      [&](const MIdx& dm) -> const PolynomialSymbol& {
    auto it = derived.find(dm);
    if (it != derived.end()) return it->second;
    int v = -1;
    for (int j = 0; j < 2 * d; ++j)
      if (dm[j] > 0) v = j;
    PolynomialSymbol p =
        (v < 0) ? s.poly : [&] {
          MIdx prev = dm;
          prev[v] -= 1;
          return s.poly_deriv(get_derived(prev), v);
        }();
    return derived.emplace(dm, std::move(p)).first->second;
  };
  for (const auto& [m, c] : op.terms) {
    MIdx dm(m.begin() + 2 * d, m.end());
    const PolynomialSymbol& p = get_derived(dm);
    // then coordinate multiplication, fused into the accumulation
    for (const auto& [pm, pc] : p.terms) {
      SIdx mm = pm;
      for (int v = 0; v < 2 * d; ++v) mm[v] += m[v];
      out.poly.add(mm, c * pc);
    }
  }
  return out;
}

inline std::complex<double> polygauss_eval(const PolyGaussForm& s,
                                           const std::vector<double>& u) {
  for (double x : u)
    if (!std::isfinite(x))
      throw std::invalid_argument("polygauss_eval: non-finite point");
  return s.eval(u);
}

struct EigenCheck {
  bool is_eigen = false;
  CScalar E;                 // eigenvalue (or best least-squares estimate)
  PolyGaussForm residual;    // r - E*s (zero polynomial when is_eigen)
  double residual_norm = 0;  // l2 norm of residual polynomial coefficients
};

// Computes r = H * s (star application via the Bopp operator) and tests
// whether r = E s for a scalar E.  Exact (zero-tolerance) when neither input
// is float-mode; otherwise coefficient-wise relative tolerance 1e-12 with a
// least-squares eigenvalue.
inline EigenCheck check_star_eigen(const PolynomialSymbol& H,
                                   const PolyGaussForm& s, const NCParams& nc) {
  if (s.poly.is_zero())
    throw std::invalid_argument("check_star_eigen: zero state");
  WeylOperator op = bopp_operator(H, nc);
  PolyGaussForm r = polygauss_apply(op, s);

  EigenCheck res;
  res.residual = r;
  const bool exact = !H.float_mode && !s.poly.float_mode;
  if (exact) {
    const auto& [m0, c0] = *s.poly.terms.begin();
    CScalar lam(0);
    auto it = r.poly.terms.find(m0);
    if (it != r.poly.terms.end()) lam = it->second / c0;
    PolynomialSymbol diff = r.poly - lam * s.poly;
    res.E = lam;
    res.is_eigen = diff.is_zero();
    res.residual.poly = diff;
  } else {
    // least squares over coefficient vectors in floating point
    std::complex<double> num = 0.0;
    double den = 0.0;
    for (const auto& [m, c] : s.poly.terms) {
      auto cs = c.to_c();
      auto it = r.poly.terms.find(m);
      std::complex<double> cr = (it != r.poly.terms.end()) ? it->second.to_c()
                                                           : 0.0;
      num += std::conj(cs) * cr;
      den += std::norm(cs);
    }
    std::complex<double> lam = num / den;
    res.E = CScalar(Surd(rat_from_double(lam.real())),
                    Surd(rat_from_double(lam.imag())));
    double scale = 0.0, err = 0.0;
    PolynomialSymbol diff(s.dim, true);
    for (const auto& [m, c] : r.poly.terms) scale = std::max(scale,
                                                             std::abs(c.to_c()));
    for (const auto& [m, c] : s.poly.terms)
      scale = std::max(scale, std::abs(lam * c.to_c()));
    // union of supports
    auto accum = [&](const SIdx& m) {
      auto itr = r.poly.terms.find(m);
      auto its = s.poly.terms.find(m);
      std::complex<double> cr = itr != r.poly.terms.end() ? itr->second.to_c()
                                                          : 0.0;
      std::complex<double> cs = its != s.poly.terms.end() ? its->second.to_c()
                                                          : 0.0;
      std::complex<double> dd = cr - lam * cs;
      err = std::max(err, std::abs(dd));
      if (std::abs(dd) > 0)
        diff.add(m, CScalar(Surd(rat_from_double(dd.real())),
                            Surd(rat_from_double(dd.imag()))));
    };
    for (const auto& [m, c] : r.poly.terms) accum(m);
    for (const auto& [m, c] : s.poly.terms)
      if (r.poly.terms.find(m) == r.poly.terms.end()) accum(m);
    res.is_eigen = (err <= 1e-12 * (scale > 0 ? scale : 1.0));
    res.residual.poly = diff;
  }
  double n2 = 0.0;
  for (const auto& [m, c] : res.residual.poly.terms) n2 += std::norm(c.to_c());
  res.residual_norm = std::sqrt(n2);
  return res;
}

}  // namespace psqm
