#include "heunref/verifier/quadrature.hpp"

#include <cmath>
#include <vector>

#include "heunref/errors.hpp"

namespace heunref {

namespace {

// Kronrod abscissae on [0, 1]; odd indices are the Gauss-7 nodes.
constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr int kMaxDepth = 50;
constexpr int kMaxEvaluations = 300000;

}  // namespace

QuadResult gauss_kronrod15(const std::function<double(double)>& f, double lo, double hi) {
  const double c = 0.5 * (lo + hi), hw = 0.5 * (hi - lo);
  const double fc = f(c);
  double rk = kWgk[7] * fc;
  double rg = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = hw * kXgk[j];
    const double s = f(c - dx) + f(c + dx);
    rk += kWgk[j] * s;
    if (j % 2 == 1) rg += kWg[j / 2] * s;
  }
  QuadResult r;
  r.value = rk * hw;
  r.error = std::fabs((rk - rg) * hw);
  r.evaluations = 15;
  return r;
}

QuadResult quad_adaptive(const std::function<double(double)>& f, double lo, double hi, double tol) {
  QuadResult out;
  if (lo == hi) return out;
  if (lo > hi) {
    out = quad_adaptive(f, hi, lo, tol);
    out.value = -out.value;
    return out;
  }
  const QuadResult whole = gauss_kronrod15(f, lo, hi);
  const double budget = tol * (1.0 + std::fabs(whole.value));
  const double width = hi - lo;

  struct Panel {
    double lo, hi;
    QuadResult r;
    int depth;
  };
  std::vector<Panel> stack{{lo, hi, whole, 0}};
  out.evaluations = whole.evaluations;
  bool failed = false;
  while (!stack.empty()) {
    Panel pn = stack.back();
    stack.pop_back();
    out.max_depth = std::max(out.max_depth, pn.depth);
    const double share = budget * (pn.hi - pn.lo) / width;
    if (pn.r.error <= share || !std::isfinite(pn.r.value)) {
      out.value += pn.r.value;
      out.error += pn.r.error;
      continue;
    }
    if (pn.depth >= kMaxDepth || out.evaluations >= kMaxEvaluations) {
      failed = true;
      out.value += pn.r.value;
      out.error += pn.r.error;
      continue;
    }
    const double mid = 0.5 * (pn.lo + pn.hi);
    const QuadResult left = gauss_kronrod15(f, pn.lo, mid);
    const QuadResult right = gauss_kronrod15(f, mid, pn.hi);
    out.evaluations += 30;
    // Right first so panels are summed left to right.
    stack.push_back({mid, pn.hi, right, pn.depth + 1});
    stack.push_back({pn.lo, mid, left, pn.depth + 1});
  }
  if (!std::isfinite(out.value)) throw ConvergenceError("quad_adaptive: integrand is not finite", out.value, out.error);
  if (failed)
    throw ConvergenceError("quad_adaptive: tolerance not reached within 50 bisections / 300000 evaluations", out.value, out.error);
  return out;
}

}  // namespace heunref
