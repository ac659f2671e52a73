#pragma once

// Clamped B-spline basis on a symmetric interval [-A, A].
//
// The knot sequence has multiplicity M+1 at both endpoints and K equispaced
// interior spans, which gives K + M basis functions of degree M (C^{M-1} at
// the simple knots). Conceptual indices run from -M to K-1; this code uses
// 0-based indices b = l + M throughout. Evaluation at x = +A takes the left
// limit so the partition of unity holds on the closed interval and the
// sample X = A is never silently dropped from empirical norms.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sdeclass {

struct KnotVector {
  std::vector<double> knots;  // length K + 2M + 1, nondecreasing
  double half_width = 0.0;    // A
  int interior_count = 0;     // K
  int degree = 0;             // M
};

// Knot sequence with +-A boundary multiplicity M+1 and equispaced interior
// knots u_l = -A + 2lA/K, l = 0..K.
inline KnotVector build_knots(double half_width, int interior_count, int degree) {
  const double a = half_width;
  const int k = interior_count;
  const int m = degree;
  if (!(a > 0.0) || !std::isfinite(a)) throw std::invalid_argument("build_knots: half_width must be positive and finite");
  if (k < 1) throw std::invalid_argument("build_knots: interior_count must be >= 1");
  if (m < 1) throw std::invalid_argument("build_knots: degree must be >= 1");
  if (m > 32) throw std::invalid_argument("build_knots: degree above supported maximum (32)");

  KnotVector kv;
  kv.half_width = a;
  kv.interior_count = k;
  kv.degree = m;
  kv.knots.resize(static_cast<std::size_t>(k + 2 * m + 1));
  for (int i = 0; i <= k + 2 * m; ++i) {
    const int l = i - m;  // conceptual index in [-M, K+M]
    double u;
    if (l <= 0) {
      u = -a;
    } else if (l >= k) {
      u = a;
    } else {
      u = -a + (2.0 * l * a) / k;
    }
    kv.knots[static_cast<std::size_t>(i)] = u;
  }
  for (int i = m; i < m + k; ++i) {
    if (!(kv.knots[i] < kv.knots[i + 1]))
      throw std::invalid_argument("build_knots: interior knots collapsed (half_width too small)");
  }
  return kv;
}

struct SplineBasis {
  KnotVector knots;
  int dim = 0;  // K + M

  SplineBasis() = default;
  explicit SplineBasis(KnotVector kv)
      : knots(std::move(kv)),
        dim(knots.interior_count + knots.degree) {}
};

inline SplineBasis make_basis(double half_width, int interior_count, int degree) {
  return SplineBasis(build_knots(half_width, interior_count, degree));
}

namespace detail {

// 0-based index i of the knot span containing x: knots[i] <= x < knots[i+1],
// i in [M, M+K-1]. x == +A maps to the last span (left-limit convention).
// Precondition: -A <= x <= A.
inline int find_span(const KnotVector& kv, double x) {
  const int m = kv.degree;
  const int k = kv.interior_count;
  if (x >= kv.half_width) return m + k - 1;
  int lo = m, hi = m + k - 1;
  while (lo < hi) {
    const int mid = (lo + hi + 1) / 2;
    if (kv.knots[static_cast<std::size_t>(mid)] <= x)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

// Cox-de Boor triangular recursion: the M+1 basis values that are nonzero on
// span `span`, written to out[0..M]. out[r] is the value of function
// (span - M + r). Restricting to the active span realizes the 0/0 := 0
// convention at repeated knots without ever dividing by zero.
inline void basis_funs(const KnotVector& kv, int span, double x, double* out) {
  const int m = kv.degree;
  const double* t = kv.knots.data();
  double left[33], right[33];  // degree capped well above anything used here
  out[0] = 1.0;
  for (int j = 1; j <= m; ++j) {
    left[j] = x - t[span + 1 - j];
    right[j] = t[span + j] - x;
    double saved = 0.0;
    for (int r = 0; r < j; ++r) {
      const double tmp = out[r] / (right[r + 1] + left[j - r]);
      out[r] = saved + right[r + 1] * tmp;
      saved = left[j - r] * tmp;
    }
    out[j] = saved;
  }
}

}  // namespace detail

// Nonzero-block evaluation: returns the index of the first nonzero basis
// function and writes its M+1 values. Returns -1 when |x| > A (all zero).
inline int eval_basis_local(const SplineBasis& basis, double x, double* out) {
  const KnotVector& kv = basis.knots;
  if (x < -kv.half_width || x > kv.half_width) return -1;
  const int span = detail::find_span(kv, x);
  detail::basis_funs(kv, span, x, out);
  return span - kv.degree;
}

// Dense vector of all `dim` basis values at x; zeros outside [-A, A].
inline std::vector<double> eval_basis(const SplineBasis& basis, double x) {
  std::vector<double> values(static_cast<std::size_t>(basis.dim), 0.0);
  double local[33];
  const int first = eval_basis_local(basis, x, local);
  if (first >= 0) {
    for (int r = 0; r <= basis.knots.degree; ++r)
      values[static_cast<std::size_t>(first + r)] = local[r];
  }
  return values;
}

// Greville abscissae: knot averages xi_b = (t_{b+1} + ... + t_{b+M}) / M.
// Coefficients sampled there reproduce affine functions exactly.
inline std::vector<double> greville_abscissae(const SplineBasis& basis) {
  const int m = basis.knots.degree;
  std::vector<double> xi(static_cast<std::size_t>(basis.dim));
  for (int b = 0; b < basis.dim; ++b) {
    double s = 0.0;
    for (int j = 1; j <= m; ++j) s += basis.knots.knots[static_cast<std::size_t>(b + j)];
    xi[static_cast<std::size_t>(b)] = s / m;
  }
  return xi;
}

// Post-transform applied to the raw spline value: either a symmetric
// threshold (values forced into [-T, T]) or a two-sided clamp.
struct Transform {
  enum class Kind { none, threshold, clamp };
  Kind kind = Kind::none;
  double bound = 0.0;  // threshold T
  double lo = 0.0, hi = 0.0;

  static Transform none() { return {}; }
  static Transform threshold(double t) {
    Transform tr;
    tr.kind = Kind::threshold;
    tr.bound = t;
    return tr;
  }
  static Transform clamp(double lo, double hi) {
    Transform tr;
    tr.kind = Kind::clamp;
    tr.lo = lo;
    tr.hi = hi;
    return tr;
  }

  double apply(double v) const {
    switch (kind) {
      case Kind::threshold:
        return std::abs(v) <= bound ? v : std::copysign(bound, v);
      case Kind::clamp:
        return std::min(std::max(v, lo), hi);
      case Kind::none:
      default:
        return v;
    }
  }
};

struct SplineFn {
  SplineBasis basis;
  std::vector<double> coeffs;  // length basis.dim
  Transform transform;

  SplineFn() = default;
  SplineFn(SplineBasis b, std::vector<double> c, Transform t = Transform::none())
      : basis(std::move(b)), coeffs(std::move(c)), transform(t) {
    if (static_cast<int>(coeffs.size()) != basis.dim)
      throw std::invalid_argument("SplineFn: coefficient count " + std::to_string(coeffs.size()) +
                                  " does not match basis dimension " + std::to_string(basis.dim));
  }
};

inline double eval_spline(const SplineFn& f, double x) {
  double local[33];
  double v = 0.0;
  const int first = eval_basis_local(f.basis, x, local);
  if (first >= 0) {
    for (int r = 0; r <= f.basis.knots.degree; ++r)
      v += f.coeffs[static_cast<std::size_t>(first + r)] * local[r];
  }
  return f.transform.apply(v);
}

// Spline with the given samples as coefficients (one per basis function,
// conventionally h evaluated at the knots u_{-M}..u_{K-1}); no transform.
inline SplineFn lipschitz_interpolant(std::span<const double> samples, const SplineBasis& basis) {
  if (static_cast<int>(samples.size()) != basis.dim)
    throw std::invalid_argument("lipschitz_interpolant: expected " + std::to_string(basis.dim) +
                                " samples, got " + std::to_string(samples.size()));
  return SplineFn(basis, std::vector<double>(samples.begin(), samples.end()), Transform::none());
}

}  // namespace sdeclass
