#include "psqm/star_grid.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace psqm {

namespace {

const double pi = 3.14159265358979323846;

// first-order spectral multiplier (i k) along an axis, Nyquist zeroed
std::vector<cplx> ik_line(const PhaseGrid& g, int axis) {
  const std::size_t n = g.axes[axis].n;
  const double L = g.axes[axis].max - g.axes[axis].min;
  std::vector<cplx> m(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == n / 2) {
      m[j] = 0.0;
      continue;
    }
    double kidx = (j < n / 2) ? static_cast<double>(j)
                              : static_cast<double>(j) - static_cast<double>(n);
    m[j] = cplx(0.0, 2.0 * pi * kidx / L);
  }
  return m;
}

void axis_extents(const PhaseGrid& g, int axis, std::size_t& outer,
                  std::size_t& n, std::size_t& inner) {
  n = g.axes[axis].n;
  outer = 1;
  inner = 1;
  for (int a = 0; a < axis; ++a) outer *= g.axes[a].n;
  for (std::size_t a = axis + 1; a < g.axes.size(); ++a) inner *= g.axes[a].n;
}

void mult_lines(Field& f, int axis, const std::vector<cplx>& m) {
  std::size_t outer, n, inner;
  axis_extents(f.grid, axis, outer, n, inner);
  for (std::size_t o = 0; o < outer; ++o) {
    cplx* base = f.v.data() + o * n * inner;
    for (std::size_t j = 0; j < n; ++j) {
      cplx mj = m[j];
      cplx* line = base + j * inner;
      for (std::size_t t = 0; t < inner; ++t) line[t] *= mj;
    }
  }
}

void fft_field(Field& f, int axis, bool inverse) {
  std::size_t outer, n, inner;
  axis_extents(f.grid, axis, outer, n, inner);
  fft_axis(f.v.data(), outer, n, inner, inverse);
}

// one spectral derivative along axis (order 1), Nyquist zeroed
Field deriv1(const Field& f, int axis) {
  Field out = f;
  fft_field(out, axis, false);
  mult_lines(out, axis, ik_line(f.grid, axis));
  fft_field(out, axis, true);
  return out;
}

struct SeriesCtx {
  std::vector<BidiffPair> pairs;
  std::vector<Field> order;  // per-total-order contributions
  int K = 0;
};

void acc_product(Field& dst, const cplx& c, const Field& a, const Field& b) {
  const std::size_t n = dst.v.size();
  const cplx* pa = a.v.data();
  const cplx* pb = b.v.data();
  cplx* pd = dst.v.data();
  for (std::size_t t = 0; t < n; ++t) pd[t] += c * pa[t] * pb[t];
}

void series_rec(SeriesCtx& ctx, std::size_t j, const Field& F, const Field& G,
                cplx coeff, int used, int remaining) {
  const BidiffPair& pr = ctx.pairs[j];
  const cplx step(0.0, to_double(pr.c) / 2.0);  // i c_j / 2
  if (j + 1 == ctx.pairs.size()) {
    // innermost pair: incremental derivatives in spectral space
    acc_product(ctx.order[used], coeff, F, G);
    if (remaining == 0) return;
    Field Fs = F, Gs = G;
    fft_field(Fs, pr.left, false);
    fft_field(Gs, pr.right, false);
    auto mf = ik_line(F.grid, pr.left);
    auto mg = ik_line(G.grid, pr.right);
    cplx c = coeff;
    Field Fr(F.grid), Gr(G.grid);
    for (int k = 1; k <= remaining; ++k) {
      mult_lines(Fs, pr.left, mf);
      mult_lines(Gs, pr.right, mg);
      c *= step / static_cast<double>(k);
      Fr = Fs;
      fft_field(Fr, pr.left, true);
      Gr = Gs;
      fft_field(Gr, pr.right, true);
      acc_product(ctx.order[used + k], c, Fr, Gr);
    }
    return;
  }
  series_rec(ctx, j + 1, F, G, coeff, used, remaining);
  if (remaining == 0) return;
  Field Fl = F, Gl = G;
  cplx c = coeff;
  for (int k = 1; k <= remaining; ++k) {
    Fl = deriv1(Fl, pr.left);
    Gl = deriv1(Gl, pr.right);
    c *= step / static_cast<double>(k);
    series_rec(ctx, j + 1, Fl, Gl, c, used + k, remaining - k);
  }
}

}  // namespace

Field star_series_pairs(const Field& f, const Field& g, int K,
                        const std::vector<BidiffPair>& pairs,
                        StarReport* report, bool accel) {
  if (f.grid != g.grid)
    throw std::invalid_argument("star_series: grid mismatch");
  if (K < 0) throw std::invalid_argument("star_series: K must be >= 0");

  SeriesCtx ctx;
  ctx.pairs = pairs;
  ctx.K = K;
  // expensive (small-inner) axes to the outer DFS levels, so the innermost
  // level, which runs once per leaf, works on cheap batched axes
  std::stable_sort(ctx.pairs.begin(), ctx.pairs.end(),
                   [&](const BidiffPair& a, const BidiffPair& b) {
                     auto cost = [&](const BidiffPair& p) {
                       std::size_t o, n, i1, i2;
                       axis_extents(f.grid, p.left, o, n, i1);
                       axis_extents(f.grid, p.right, o, n, i2);
                       return std::min(i1, i2);
                     };
                     return cost(a) < cost(b);
                   });
  ctx.order.assign(K + 1, Field(f.grid));
  if (ctx.pairs.empty()) {
    acc_product(ctx.order[0], cplx(1.0), f, g);
  } else {
    series_rec(ctx, 0, f, g, cplx(1.0), 0, K);
  }

  Field sum(f.grid);
  if (!accel) {
    for (int k = 0; k <= K; ++k) sum = sum + ctx.order[k];
  } else {
    // iterated averaging of partial sums (Euler summation)
    std::vector<Field> partial;
    partial.reserve(K + 1);
    Field run(f.grid);
    for (int k = 0; k <= K; ++k) {
      run = run + ctx.order[k];
      partial.push_back(run);
    }
    while (partial.size() > 1) {
      for (std::size_t j = 0; j + 1 < partial.size(); ++j)
        partial[j] = cplx(0.5) * (partial[j] + partial[j + 1]);
      partial.pop_back();
    }
    sum = partial[0];
  }

  if (report) {
    report->K = K;
    double s = max_abs(sum);
    double last = max_abs(ctx.order[K]);
    report->last_term_rel = (s > 0) ? last / s : last;
    report->converged = report->last_term_rel < 1e-12;
  }
  return sum;
}

Field star_series(const Field& f, const Field& g, int K, const NCParams& nc,
                  StarReport* report, bool accel, int k_cap) {
  if (K > k_cap)
    throw std::invalid_argument("star_series: K exceeds configured cap");
  const int d = f.grid.dim;
  return star_series_pairs(f, g, K, star_pairs(d, nc), report, accel);
}

Field star_apply_poly(const PolynomialSymbol& a, const Field& psi,
                      const NCParams& nc) {
  if (2 * a.dim != static_cast<int>(psi.grid.axes.size()))
    throw std::invalid_argument("star_apply_poly: dimension mismatch");
  WeylOperator op = bopp_operator(a, nc);
  const int d = a.dim;

  // group terms by derivative multi-index
  std::map<std::vector<int>, PolynomialSymbol> by_deriv;
  for (const auto& [m, c] : op.terms) {
    std::vector<int> beta(m.begin() + 2 * d, m.end());
    SIdx alpha(m.begin(), m.begin() + 2 * d);
    auto it = by_deriv.find(beta);
    if (it == by_deriv.end())
      it = by_deriv.emplace(beta, PolynomialSymbol(d)).first;
    it->second.add(alpha, c);
  }

  Field out(psi.grid);
  for (const auto& [beta, poly] : by_deriv) {
    Field dfield = psi;
    for (int v = 0; v < 2 * d; ++v)
      if (beta[v] > 0) dfield = spectral_partial(dfield, v, beta[v]);
    Field mono = sample(psi.grid, poly);
    const std::size_t n = out.v.size();
    for (std::size_t t = 0; t < n; ++t) out.v[t] += mono.v[t] * dfield.v[t];
  }
  return out;
}

}  // namespace psqm
