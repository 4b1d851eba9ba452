#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

namespace friendjam::quad {

struct Result {
  double value = 0.0;
  double abs_error = 0.0;
  bool converged = false;
  int panels = 0;
};

namespace detail {

// Gauss 7 / Kronrod 15 abscissae and weights on [-1, 1].
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
};

template <class F>
Panel eval_panel(F&& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fc = f(c);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  double resabs = std::abs(resk);
  for (int j = 0; j < 7; ++j) {
    double x = h * kXgk[j];
    double f1 = f(c - x);
    double f2 = f(c + x);
    double sum = f1 + f2;
    resk += kWgk[j] * sum;
    resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) resg += kWg[j / 2] * sum;
  }
  double value = resk * h;
  double err = std::abs((resk - resg) * h);
  // classic QUADPACK-style sharpening of the raw K-G difference
  if (err != 0.0) {
    double scaled = std::pow(200.0 * err / std::max(1e-300, resabs * std::abs(h)), 1.5);
    err = resabs * std::abs(h) * std::min(1.0, scaled);
  }
  err = std::max(err, 50.0 * 2.220446049250313e-16 * std::abs(value));
  return {a, b, value, err};
}

}  // namespace detail

// Globally adaptive integration of f over [a, b]: the panel with the largest
// error estimate is bisected until the summed error drops below
// max(abs_tol, rel_tol * |integral|) or the panel budget runs out.
template <class F>
Result integrate(F&& f, double a, double b, double rel_tol, double abs_tol,
                 int max_panels = 2000) {
  Result res;
  if (a == b) {
    res.converged = true;
    return res;
  }
  std::vector<detail::Panel> panels;
  panels.reserve(64);
  panels.push_back(detail::eval_panel(f, a, b));

  auto worse = [](const detail::Panel& x, const detail::Panel& y) {
    if (x.error != y.error) return x.error < y.error;
    return x.a > y.a;  // deterministic tie-break
  };

  double total = panels[0].value;
  double err = panels[0].error;
  while (static_cast<int>(panels.size()) < max_panels) {
    if (err <= std::max(abs_tol, rel_tol * std::abs(total))) break;
    std::pop_heap(panels.begin(), panels.end(), worse);
    detail::Panel worst = panels.back();
    panels.pop_back();
    double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {  // interval exhausted
      panels.push_back(worst);
      std::push_heap(panels.begin(), panels.end(), worse);
      break;
    }
    detail::Panel left = detail::eval_panel(f, worst.a, mid);
    detail::Panel right = detail::eval_panel(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    panels.push_back(left);
    std::push_heap(panels.begin(), panels.end(), worse);
    panels.push_back(right);
    std::push_heap(panels.begin(), panels.end(), worse);
  }

  // re-sum for a roundoff-clean total (panel count is modest)
  std::sort(panels.begin(), panels.end(),
            [](const detail::Panel& x, const detail::Panel& y) { return x.a < y.a; });
  total = 0.0;
  err = 0.0;
  for (const auto& p : panels) {
    total += p.value;
    err += p.error;
  }
  res.value = total;
  res.abs_error = err;
  res.panels = static_cast<int>(panels.size());
  res.converged = err <= std::max(abs_tol, rel_tol * std::abs(total));
  return res;
}

}  // namespace friendjam::quad
