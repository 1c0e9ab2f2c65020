#include "opocorr/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "opocorr/errors.hpp"

namespace opocorr {

namespace {

struct Segment {
  double a, b;
  double fa, fm, fb;
  double simpson;
  int depth;
};

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) * (fa + 4.0 * fm + fb) / 6.0;
}

}  // namespace

QuadratureResult integrate_adaptive_split(const std::function<double(double)>& f,
                                          std::span<const double> breakpoints,
                                          const QuadratureOptions& opts) {
  QuadratureResult res;
  if (breakpoints.size() < 2) return res;
  const double total_len = breakpoints.back() - breakpoints.front();
  if (!(total_len > 0.0)) return res;

  // Coarse pass over the mandatory pieces. The L1 sum of the piece estimates
  // sets the absolute tolerance scale; a purely relative criterion would never
  // terminate on integrals that cancel to ~0.
  std::vector<Segment> stack;
  stack.reserve(breakpoints.size() * 2);
  double coarse_l1 = 0.0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const double a = breakpoints[i];
    const double b = breakpoints[i + 1];
    if (!(b > a)) continue;  // tolerate duplicates
    const double m = 0.5 * (a + b);
    Segment s{a, b, f(a), f(m), f(b), 0.0, 0};
    s.simpson = simpson(a, b, s.fa, s.fm, s.fb);
    res.n_evals += 3;
    coarse_l1 += std::abs(s.simpson);
    stack.push_back(s);
  }
  const double tol_abs = std::max(opts.abs_tol, opts.rel_tol * coarse_l1);

  while (!stack.empty()) {
    Segment s = stack.back();
    stack.pop_back();
    const double lm = 0.5 * (s.a + 0.5 * (s.a + s.b));
    const double rm = 0.5 * (0.5 * (s.a + s.b) + s.b);
    const double flm = f(lm);
    const double frm = f(rm);
    res.n_evals += 2;
    const double mid = 0.5 * (s.a + s.b);
    const double sl = simpson(s.a, mid, s.fa, flm, s.fm);
    const double sr = simpson(mid, s.b, s.fm, frm, s.fb);
    const double err = (sl + sr - s.simpson) / 15.0;
    const double local_tol = tol_abs * (s.b - s.a) / total_len;
    const bool out_of_budget = res.n_evals > opts.max_evals;
    if (std::abs(err) <= local_tol || s.depth >= opts.max_depth || out_of_budget) {
      res.value += sl + sr + err;  // Richardson-corrected
      res.error_estimate += std::abs(err);
      if (out_of_budget && std::abs(err) > local_tol) {
        res.budget_exhausted = true;
        // flush the rest of the stack at coarse accuracy
        for (const Segment& rest : stack) {
          res.value += rest.simpson;
          res.error_estimate += std::abs(rest.simpson) * 0.1 + local_tol;
        }
        stack.clear();
      }
      continue;
    }
    stack.push_back({s.a, mid, s.fa, flm, s.fm, sl, s.depth + 1});
    stack.push_back({mid, s.b, s.fm, frm, s.fb, sr, s.depth + 1});
  }
  return res;
}

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    const QuadratureOptions& opts) {
  const double pts[2] = {a, b};
  return integrate_adaptive_split(f, pts, opts);
}

}  // namespace opocorr
