#include <cmath>

#include "flatwell/errors.hpp"
#include "flatwell/numerics.hpp"

namespace flatwell {

ScalarMinimum minimize_scalar(const std::function<double(double)>& f, double lo, double hi, double tol) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw DomainError("minimize_scalar needs a finite bracket with lo < hi");
  }
  if (!(tol > 0.0)) throw DomainError("minimize_scalar needs tol > 0");

  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  ScalarMinimum best{lo, f(lo)};
  const auto consider = [&best](double x, double fx) {
    if (fx < best.value) best = ScalarMinimum{x, fx};
  };
  consider(hi, f(hi));

  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  consider(c, fc);
  consider(d, fd);

  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
      consider(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
      consider(d, fd);
    }
    // Interior points collapse once the bracket reaches rounding level.
    if (!(a < c && c < d && d < b)) break;
  }
  const double mid = 0.5 * (a + b);
  consider(mid, f(mid));
  return best;
}

}  // namespace flatwell
