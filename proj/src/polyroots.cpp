#include "clifun/polyroots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace clifun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Evaluation {
  cplx p;
  cplx dp;
  double bound;  // sum |a_k| |z|^k
};

Evaluation evaluate_with_derivative(std::span<const double> a, cplx z) {
  Evaluation e{0.0, 0.0, 0.0};
  const double az = std::abs(z);
  for (std::size_t k = a.size(); k-- > 0;) {
    e.dp = e.dp * z + e.p;
    e.p = e.p * z + a[k];
    e.bound = e.bound * az + std::abs(a[k]);
  }
  return e;
}

// Coefficients of p(x + c), ascending.
std::vector<double> taylor_shift(std::vector<double> a, double c) {
  const std::size_t m = a.size();
  for (std::size_t i = 0; i + 1 < m; ++i)
    for (std::size_t k = m - 1; k-- > i;) a[k] += c * a[k + 1];
  return a;
}

// Positive root of x^m - sum_{k<m} |a_k| x^k for monic a.
double cauchy_bound(std::span<const double> a) {
  const std::size_t m = a.size() - 1;
  double hi = 1.0;
  for (std::size_t k = 0; k < m; ++k) hi = std::max(hi, 1.0 + std::abs(a[k]));
  auto f = [&](double x) {
    double s = 0.0;
    for (std::size_t k = 0; k < m; ++k) s = s * x + std::abs(a[m - 1 - k]);
    return std::pow(x, static_cast<double>(m)) - s;
  };
  // f is negative below the bound and positive above it.
  double lo = 0.0;
  for (int it = 0; it < 200 && hi - lo > 1e-12 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? hi : lo) = mid;
  }
  return hi;
}

std::vector<cplx> aberth(std::span<const double> monic, const RootOptions& opts) {
  const std::size_t m = monic.size() - 1;
  std::vector<cplx> z(m);
  if (m == 0) return z;
  if (m == 1) {
    z[0] = -monic[0];
    return z;
  }

  const double center = -monic[m - 1] / static_cast<double>(m);
  const auto shifted = taylor_shift({monic.begin(), monic.end()}, center);
  const double radius = std::max(cauchy_bound(shifted), 1e-300);
  for (std::size_t k = 0; k < m; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / m + 0.4;
    z[k] = center + std::polar(radius, angle);
  }

  std::vector<bool> done(m, false);
  for (int it = 0; it < opts.max_iterations; ++it) {
    bool all_done = true;
    for (std::size_t i = 0; i < m; ++i) {
      if (done[i]) continue;
      const auto e = evaluate_with_derivative(monic, z[i]);
      if (std::abs(e.p) <= 4.0 * kEps * (m + 1) * e.bound) {
        done[i] = true;
        continue;
      }
      cplx sum = 0.0;
      for (std::size_t j = 0; j < m; ++j)
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      cplx step;
      if (e.dp == cplx(0.0)) {
        step = std::polar(1e-3 * (1.0 + std::abs(z[i])), 1.0 + i);
      } else {
        const cplx ratio = e.p / e.dp;
        step = ratio / (1.0 - ratio * sum);
      }
      z[i] -= step;
      if (std::abs(step) <= 2.0 * kEps * std::abs(z[i]))
        done[i] = true;
      else
        all_done = false;
    }
    if (all_done) return z;
  }
  throw RootFindingError("Aberth iteration did not converge", z);
}

std::vector<double> derivative(std::span<const double> a) {
  std::vector<double> d;
  for (std::size_t k = 1; k < a.size(); ++k) d.push_back(a[k] * static_cast<double>(k));
  return d;
}

// Replaces groups of nearby roots by a common value when that value is an
// m-fold root of p up to rounding: p, p', ..., p^(m-1) all vanish within
// 64 (deg + 1) eps times their running bounds. The common value comes from
// Newton on p^(m-1), whose root there is simple.
void merge_multiple_roots(std::span<const double> a, std::vector<cplx>& z) {
  const std::size_t n = z.size();
  if (n < 2) return;
  std::vector<std::vector<double>> derivs{{a.begin(), a.end()}};
  while (derivs.size() < n + 1) derivs.push_back(derivative(derivs.back()));
  const double slack = 64.0 * static_cast<double>(n + 1) * kEps;

  double scale = 1.0;
  for (const auto& v : z) scale = std::max(scale, std::abs(v));
  std::vector<bool> fixed(n, false);
  for (double rel = 1e-2; rel >= 1e-8; rel *= 0.1) {
    const double tol = rel * scale;
    std::vector<std::size_t> group(n);
    std::iota(group.begin(), group.end(), 0);
    auto find = [&](std::size_t i) {
      while (group[i] != i) i = group[i] = group[group[i]];
      return i;
    };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!fixed[i] && !fixed[j] && std::abs(z[i] - z[j]) <= tol)
          group[find(i)] = find(j);

    for (std::size_t root = 0; root < n; ++root) {
      if (fixed[root] || find(root) != root) continue;
      std::vector<std::size_t> members;
      cplx c = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        if (!fixed[i] && find(i) == root) {
          members.push_back(i);
          c += z[i];
        }
      const std::size_t m = members.size();
      if (m < 2) continue;
      c /= static_cast<double>(m);
      for (int it = 0; it < 20; ++it) {
        const auto e = evaluate_with_derivative(derivs[m - 1], c);
        if (e.dp == cplx(0.0)) break;
        const cplx step = e.p / e.dp;
        c -= step;
        if (std::abs(step) <= 2.0 * kEps * std::abs(c)) break;
      }
      bool ok = true;
      for (std::size_t i : members) ok = ok && std::abs(z[i] - c) <= tol;
      for (std::size_t j = 0; ok && j < m; ++j) {
        const auto e = evaluate_with_derivative(derivs[j], c);
        ok = std::abs(e.p) <= slack * std::max(e.bound, kEps);
      }
      if (!ok) continue;
      for (std::size_t i : members) {
        z[i] = c;
        fixed[i] = true;
      }
    }
  }
}

}  // namespace

cplx evaluate_polynomial(std::span<const double> a, cplx x) {
  cplx r = 0.0;
  for (std::size_t k = a.size(); k-- > 0;) r = r * x + a[k];
  return r;
}

RootSet find_polynomial_roots(std::span<const double> ascending,
                              const RootOptions& opts) {
  if (ascending.size() < 2 || ascending.back() == 0.0)
    throw InvalidArgument("polynomial must have degree >= 1");

  std::vector<double> monic(ascending.begin(), ascending.end());
  const double lead = monic.back();
  for (double& v : monic) v /= lead;

  // Exact zero roots come straight off the constant end.
  std::size_t zeros = 0;
  while (monic[zeros] == 0.0) ++zeros;
  std::vector<double> reduced(monic.begin() + zeros, monic.end());

  std::vector<cplx> roots = aberth(reduced, opts);
  for (auto& z : roots) {
    auto e = evaluate_with_derivative(reduced, z);
    for (int s = 0; s < opts.polish_steps && e.dp != cplx(0.0); ++s) {
      // Residual already at rounding level; further steps are noise.
      if (std::abs(e.p) <= 4.0 * kEps * reduced.size() * e.bound) break;
      const cplx next = z - e.p / e.dp;
      const auto en = evaluate_with_derivative(reduced, next);
      if (!(std::abs(en.p) < std::abs(e.p))) break;
      z = next;
      e = en;
    }
  }
  merge_multiple_roots(reduced, roots);
  for (std::size_t k = 0; k < zeros; ++k) roots.emplace_back(0.0, 0.0);

  for (const auto& z : roots) {
    const auto e = evaluate_with_derivative(monic, z);
    if (std::abs(e.p) > opts.residual_tol * std::max(1.0, e.bound))
      throw RootFindingError("root residual above tolerance", roots);
  }

  const double snap =
      opts.snap_tol < 0.0 ? default_cluster_tolerance(roots) : opts.snap_tol;
  for (auto& z : roots)
    if (std::abs(z.imag()) < snap) z = {z.real(), 0.0};

  std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });

  RootSet rs;
  const std::size_t n = roots.size();
  rs.pairing.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rs.pairing[i] != n) continue;
    if (roots[i].imag() == 0.0) {
      rs.pairing[i] = i;
      continue;
    }
    std::size_t best = n;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rs.pairing[j] != n || roots[j].imag() == 0.0) continue;
      const double dist = std::abs(roots[j] - std::conj(roots[i]));
      if (dist < best_dist) {
        best_dist = dist;
        best = j;
      }
    }
    if (best == n) {
      // An unpaired non-real root cannot come from a real polynomial.
      roots[i] = {roots[i].real(), 0.0};
      rs.pairing[i] = i;
      continue;
    }
    const cplx mean = 0.5 * (roots[i] + std::conj(roots[best]));
    roots[i] = mean;
    roots[best] = std::conj(mean);
    rs.pairing[i] = best;
    rs.pairing[best] = i;
  }
  rs.roots = std::move(roots);
  return rs;
}

RootSet find_roots(const CharPoly& chi, const RootOptions& opts) {
  if (chi.degree() < 1) throw InvalidArgument("characteristic degree < 1");
  return find_polynomial_roots(chi.ascending(), opts);
}

double default_cluster_tolerance(std::span<const cplx> roots) {
  double mx = 0.0;
  for (const auto& z : roots) mx = std::max(mx, std::abs(z));
  return 1e-6 * (1.0 + mx);
}

RootSet cluster_roots(RootSet rs, double tol) {
  const std::size_t n = rs.roots.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(rs.roots[i] - rs.roots[j]) <= tol) parent[find(i)] = find(j);

  std::vector<std::size_t> rep_index(n, n);
  std::vector<cplx> sums;
  std::vector<int> counts;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (rep_index[r] == n) {
      rep_index[r] = sums.size();
      sums.push_back(0.0);
      counts.push_back(0);
    }
    sums[rep_index[r]] += rs.roots[i];
    ++counts[rep_index[r]];
  }

  rs.clusters.clear();
  for (std::size_t c = 0; c < sums.size(); ++c) {
    cplx v = sums[c] / static_cast<double>(counts[c]);
    if (std::abs(v.imag()) <= tol) v = {v.real(), 0.0};
    rs.clusters.push_back({v, counts[c]});
  }

  // Close the cluster set under conjugation.
  const std::size_t k = rs.clusters.size();
  std::vector<bool> fixed(k, false);
  for (std::size_t i = 0; i < k; ++i) {
    if (fixed[i] || rs.clusters[i].value.imag() == 0.0) continue;
    std::size_t best = k;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i || fixed[j]) continue;
      const double dist =
          std::abs(rs.clusters[j].value - std::conj(rs.clusters[i].value));
      if (dist < best_dist) {
        best_dist = dist;
        best = j;
      }
    }
    if (best == k) continue;
    const cplx mean =
        0.5 * (rs.clusters[i].value + std::conj(rs.clusters[best].value));
    rs.clusters[i].value = mean;
    rs.clusters[best].value = std::conj(mean);
    fixed[i] = fixed[best] = true;
  }

  std::sort(rs.clusters.begin(), rs.clusters.end(),
            [](const RootCluster& a, const RootCluster& b) {
              return a.value.real() != b.value.real()
                         ? a.value.real() < b.value.real()
                         : a.value.imag() < b.value.imag();
            });
  return rs;
}

RootSet cluster_roots(RootSet rs) {
  const double tol = default_cluster_tolerance(rs.roots);
  return cluster_roots(std::move(rs), tol);
}

std::vector<cplx> elementary_symmetric(std::span<const cplx> roots) {
  std::vector<cplx> e(roots.size() + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t k = i + 1; k >= 1; --k) e[k] += roots[i] * e[k - 1];
  return e;
}

PolynomialDivision divide_polynomials(std::span<const double> numerator,
                                      std::span<const double> divisor) {
  std::size_t dd = divisor.size();
  while (dd > 0 && divisor[dd - 1] == 0.0) --dd;
  if (dd == 0) throw InvalidArgument("division by the zero polynomial");

  std::vector<double> rem(numerator.begin(), numerator.end());
  PolynomialDivision out;
  if (rem.size() < dd) {
    out.remainder = std::move(rem);
    return out;
  }
  out.quotient.assign(rem.size() - dd + 1, 0.0);
  for (std::size_t k = rem.size() - 1;; --k) {
    const double q = rem[k] / divisor[dd - 1];
    out.quotient[k - dd + 1] = q;
    for (std::size_t j = 0; j < dd; ++j) rem[k - dd + 1 + j] -= q * divisor[j];
    if (k == dd - 1) break;
  }
  rem.resize(dd - 1);
  out.remainder = std::move(rem);
  return out;
}

}  // namespace clifun
