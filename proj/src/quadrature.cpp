#include "geocascade/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace geocascade {
namespace {

constexpr int kMaxDepth = 40;

struct Accum {
  double value = 0.0;
  double err = 0.0;
  long long evals = 0;
  long long budget = 0;
  bool ok = true;
  const std::function<double(double)>* f = nullptr;

  double eval(double x) {
    ++evals;
    const double v = (*f)(x);
    if (!std::isfinite(v)) {
      ok = false;  // pre-condition violation; keep going, flag the result
      return 0.0;
    }
    return v;
  }
};

// One adaptive step on [a,b]; endpoint/midpoint values and the coarse Simpson
// estimate `whole` are already known, so each step costs two evaluations.
void refine(Accum& acc, double a, double b, double fa, double fm, double fb,
            double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = acc.eval(lm);
  const double frm = acc.eval(rm);
  const double h12 = (b - a) / 12.0;
  const double left = (fa + 4.0 * flm + fm) * h12;
  const double right = (fm + 4.0 * frm + fb) * h12;
  const double diff = left + right - whole;
  // |S2 - S1| <= 15 tol makes the Richardson-extrapolated error <= tol.
  const bool resolved = std::abs(diff) <= 15.0 * tol;
  const bool splittable = lm > a && rm > m && m > lm && b > rm;
  // The budget gates further splitting only: a panel forced to stop still
  // banks its refined estimate and its real error term, so an exhausted run
  // reports an honest bound instead of the tiny allocation it was given.
  if (resolved || !splittable || depth <= 0 || acc.evals >= acc.budget) {
    acc.value += left + right + diff / 15.0;
    acc.err += std::abs(diff) / 15.0;
    if (!resolved) acc.ok = false;  // forced acceptance
    return;
  }
  refine(acc, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1);
  refine(acc, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

QuadratureResult integrate(const QuadratureRequest& request) {
  if (!request.integrand) throw std::invalid_argument("integrate: missing integrand");
  if (!(request.tolerance > 0.0)) throw std::invalid_argument("integrate: tolerance must be > 0");
  if (!(request.b >= request.a)) throw std::invalid_argument("integrate: interval is reversed");

  QuadratureResult out;
  if (request.a == request.b) {
    out.converged = true;
    return out;
  }

  // Normalize breakpoints: interior, sorted, unique; endpoints bracket them.
  std::vector<double> cuts;
  cuts.push_back(request.a);
  for (const double c : request.breakpoints)
    if (c > request.a && c < request.b) cuts.push_back(c);
  cuts.push_back(request.b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  Accum acc;
  acc.f = &request.integrand;
  acc.budget = request.max_evaluations;
  const double width = request.b - request.a;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i];
    const double b = cuts[i + 1];
    const double tol = request.tolerance * ((b - a) / width);
    const double fa = acc.eval(a);
    const double fm = acc.eval(0.5 * (a + b));
    const double fb = acc.eval(b);
    const double whole = (fa + 4.0 * fm + fb) * (b - a) / 6.0;
    refine(acc, a, b, fa, fm, fb, whole, tol, kMaxDepth);
  }

  out.value = acc.value;
  out.error_bound = acc.err;
  out.evaluations = acc.evals;
  out.converged = acc.ok && acc.err <= request.tolerance;
  return out;
}

}  // namespace geocascade
