#include "clifun/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace clifun {

std::string to_string(EvalPath p) {
  switch (p) {
    case EvalPath::distinct:
      return "distinct";
    case EvalPath::projector:
      return "projector";
    case EvalPath::regularized:
      return "regularized";
  }
  return "unknown";
}

void RegularizationConfig::validate() const {
  if (eps_sequence.empty())
    throw InvalidArgument("regularization needs at least one eps");
  for (std::size_t i = 0; i < eps_sequence.size(); ++i) {
    if (!(eps_sequence[i] > 0.0))
      throw InvalidArgument("regularization eps must be positive");
    if (i > 0 && !(eps_sequence[i] < eps_sequence[i - 1]))
      throw InvalidArgument("regularization eps must be strictly decreasing");
  }
  if (extrapolation_order < 0 ||
      extrapolation_order >= static_cast<int>(eps_sequence.size()))
    throw InvalidArgument("extrapolation order needs order + 1 eps values");
}

cplx spectral_weight(const CharPoly& chi, cplx lambda) {
  return 1.0 / chi.derivative(lambda);
}

Realified realify(const CMV& Z, double imag_tol) {
  Realified r{real_part(Z), norm_inf(imag_part(Z))};
  if (!(r.residual < imag_tol * (1.0 + norm_inf(r.value)))) {
    std::ostringstream os;
    os << "imaginary residual " << r.residual
       << " does not cancel; the result is not real";
    throw RealificationError(os.str(), r.residual);
  }
  return r;
}

std::vector<std::vector<double>> dagger_trace_table(const MV& A, int kmax) {
  const Signature& sig = A.signature();
  const double d = sig.d();
  std::vector<std::vector<double>> table;
  MV Ak = A;
  for (int k = 1; k <= kmax; ++k) {
    if (k > 1) Ak = Ak * A;
    std::vector<double> row(sig.size());
    for (std::uint32_t J = 0; J < sig.size(); ++J) {
      // <e_J^dagger A^k>_0: only the e_J component of A^k meets e_J^dagger.
      const int dagger = dagger_sign(sig, {J});
      const int square = blade_product(sig, {J}, {J}).sign;
      row[J] = d * dagger * square * Ak[J];
    }
    table.push_back(std::move(row));
  }
  return table;
}

namespace {

struct Spectrum {
  CharPoly chi;
  RootSet roots;  // clustered
  double cluster_tol;
};

Spectrum analyze(const MV& A, double cluster_tol) {
  Spectrum s{faddeev_leverrier(A), {}, cluster_tol};
  RootOptions ro;
  ro.snap_tol = cluster_tol;
  RootSet rs = find_roots(s.chi, ro);
  if (s.cluster_tol < 0.0) s.cluster_tol = default_cluster_tolerance(rs.roots);
  s.roots = cluster_roots(std::move(rs), s.cluster_tol);
  return s;
}

bool simple_spectrum(const Spectrum& s) {
  for (const auto& c : s.roots.clusters)
    if (c.multiplicity > 1) return false;
  const int d = s.chi.degree();
  for (const auto& z : s.roots.roots) {
    const double bound = 1e-8 * std::pow(1.0 + std::abs(z), d - 1);
    if (std::abs(s.chi.derivative(z)) < bound) return false;
  }
  return true;
}

void check_domain(const ScalarFunction& f, const std::vector<cplx>& eigen,
                  double tol) {
  if (!f.guard) return;
  for (const auto& z : eigen)
    if (auto msg = f.guard(z, tol)) throw DomainError(*msg);
}

std::vector<cplx> cluster_values(const RootSet& rs) {
  std::vector<cplx> v;
  for (const auto& c : rs.clusters) v.push_back(c.value);
  return v;
}

std::vector<cplx> evaluate_all(const ScalarFunction& f,
                               const std::vector<cplx>& z) {
  std::vector<cplx> out;
  out.reserve(z.size());
  for (const auto& x : z) out.push_back(f.evaluate(x));
  return out;
}

// sum_i f_i (1/d + beta_i sum_{m=0}^{d-2} P_m(l_i) <A^{m+1}>_{-0}),
// P_m(l) = sum_{k=0}^{d-m-2} l^k C(d-k-m-2).
CMV basis_free_sum(const MV& A, const CharPoly& chi,
                   const std::vector<cplx>& roots,
                   const std::vector<cplx>& fvals) {
  const Signature& sig = A.signature();
  const int d = chi.degree();
  const auto& C = chi.c;

  std::vector<MV> nonscalar;  // <A^{m+1}>_{-0}, m = 0..d-2
  MV Ak = A;
  for (int m = 0; m + 1 < d; ++m) {
    if (m > 0) Ak = Ak * A;
    nonscalar.push_back(nonscalar_part(Ak));
  }

  CMV out(sig);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const cplx l = roots[i];
    const cplx beta = spectral_weight(chi, l);
    std::vector<cplx> B(sig.size(), 0.0);
    for (int m = 0; m + 1 < d; ++m) {
      cplx P = 0.0;
      for (int k = d - m - 2; k >= 0; --k) P = P * l + C[d - k - m - 2];
      for (std::uint32_t J = 1; J < sig.size(); ++J) B[J] += P * nonscalar[m][J];
    }
    out[0u] += fvals[i] / static_cast<double>(d);
    for (std::uint32_t J = 1; J < sig.size(); ++J) out[J] += fvals[i] * beta * B[J];
  }
  return out;
}

// (1/d) sum_i f_i (1 + sum_J e_J b_J(l_i)) with
// b_J(l) = sum_m l^m sum_k C(k) C1(e_J^dagger A^{d-k-m-1}) / chi'(l).
CMV coordinate_sum(const MV& A, const CharPoly& chi,
                   const std::vector<cplx>& roots,
                   const std::vector<cplx>& fvals) {
  const Signature& sig = A.signature();
  const int d = chi.degree();
  const auto& C = chi.c;
  const auto T = dagger_trace_table(A, d - 1);  // T[k-1][J]

  // G[m][J] = sum_{k=0}^{d-m-2} C(k) T(d-k-m-1)[J].
  std::vector<std::vector<double>> G(std::max(d - 1, 0),
                                     std::vector<double>(sig.size(), 0.0));
  for (int m = 0; m + 1 < d; ++m)
    for (int k = 0; k <= d - m - 2; ++k) {
      const auto& row = T[d - k - m - 2];
      for (std::uint32_t J = 1; J < sig.size(); ++J) G[m][J] += C[k] * row[J];
    }

  CMV out(sig);
  const double inv_d = 1.0 / d;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const cplx l = roots[i];
    cplx denom = 0.0;
    for (int k = d - 1; k >= 0; --k)
      denom = denom * l + static_cast<double>(k + 1) * C[d - k - 1];
    const cplx w = fvals[i] * inv_d;
    out[0u] += w;
    for (std::uint32_t J = 1; J < sig.size(); ++J) {
      cplx num = 0.0;
      for (int m = d - 2; m >= 0; --m) num = num * l + G[m][J];
      out[J] += w * num / denom;
    }
  }
  return out;
}

// sum_i f(l_i) prod_{j != i} (A - l_j) / (l_i - l_j) over distinct l.
CMV projector_sum(const MV& A, const std::vector<cplx>& eigen,
                  const std::vector<cplx>& fvals) {
  const CMV Ac = to_complex(A);
  CMV out(A.signature());
  for (std::size_t i = 0; i < eigen.size(); ++i) {
    CMV P = CMV::scalar(A.signature(), 1.0);
    for (std::size_t j = 0; j < eigen.size(); ++j) {
      if (j == i) continue;
      P = P * (Ac - eigen[j]);
      P /= (eigen[i] - eigen[j]);
    }
    P *= fvals[i];
    out += P;
  }
  return out;
}

struct Direct {
  CMV value;
  EvalPath path;
  std::optional<MinimalPoly> minimal;
  bool defective = false;
};

// Paths (a) and (b); reports `defective` instead of regularizing.
Direct evaluate_direct(const MV& A, const Spectrum& s, const ScalarFunction& f,
                       const SpectralOptions& opts) {
  check_domain(f, cluster_values(s.roots), s.cluster_tol);
  if (simple_spectrum(s)) {
    const auto fv = evaluate_all(f, s.roots.roots);
    CMV v = opts.method == Method::coordinate
                ? coordinate_sum(A, s.chi, s.roots.roots, fv)
                : basis_free_sum(A, s.chi, s.roots.roots, fv);
    return {std::move(v), EvalPath::distinct, std::nullopt, false};
  }
  const Diagonalizability diag = is_diagonalizable(A, opts.minimal);
  if (!diag.diagonalizable)
    return {CMV(A.signature()), EvalPath::regularized, diag.minimal, true};
  const auto eigen = cluster_values(diag.minimal_roots);
  check_domain(f, eigen, s.cluster_tol);
  CMV v = projector_sum(A, eigen, evaluate_all(f, eigen));
  return {std::move(v), EvalPath::projector, diag.minimal, false};
}

void finish(SpectralResult& r, const SpectralOptions& opts) {
  if (opts.complex_ok) {
    r.value = real_part(r.complex_value);
    r.imag_residual = norm_inf(imag_part(r.complex_value));
    return;
  }
  auto re = realify(r.complex_value, opts.imag_tol);
  r.value = std::move(re.value);
  r.imag_residual = re.residual;
}

// Neville extrapolation of the samples (eps_i, F_i) to eps = 0.
CMV extrapolate_to_zero(std::span<const double> eps, std::vector<CMV> F) {
  const std::size_t m = F.size();
  for (std::size_t k = 1; k < m; ++k)
    for (std::size_t i = 0; i + k < m; ++i) {
      const double xi = eps[i], xk = eps[i + k];
      F[i] = (F[i + 1] * cplx(xi) - F[i] * cplx(xk)) / cplx(xi - xk);
    }
  return F[0];
}

std::vector<Blade> perturbation_candidates(const MV& A,
                                           const RegularizationConfig& cfg) {
  const Signature& sig = A.signature();
  const double threshold = 1e-8 * std::max(norm_inf(A), 1e-300);
  auto commutes = [&](Blade b) {
    return norm_inf(commutator(A, MV::basis(sig, b))) <= threshold;
  };
  if (cfg.blade) {
    if (cfg.blade->mask >= sig.size() || commutes(*cfg.blade))
      throw RegularizationError(
          "the requested perturbation blade commutes with the multivector");
    return {*cfg.blade};
  }
  std::vector<Blade> out;
  for (std::uint32_t m : grade_lex_order(sig.n()))
    if (!commutes({m})) out.push_back({m});
  return out;
}

SpectralResult regularize(const MV& A, Spectrum s, const ScalarFunction& f,
                          const SpectralOptions& opts,
                          std::optional<MinimalPoly> minimal) {
  const RegularizationConfig& cfg = opts.regularization;
  cfg.validate();
  check_domain(f, cluster_values(s.roots), s.cluster_tol);

  const std::size_t used = static_cast<std::size_t>(cfg.extrapolation_order) + 1;
  const std::span<const double> eps(cfg.eps_sequence.data() +
                                        cfg.eps_sequence.size() - used,
                                    used);

  for (Blade b : perturbation_candidates(A, cfg)) {
    std::vector<CMV> samples;
    bool split = true;
    for (double e : eps) {
      const MV perturbed = A + MV::basis(A.signature(), b, e);
      SpectralOptions inner = opts;
      inner.cluster_tol = -1.0;
      const Spectrum ps = analyze(perturbed, inner.cluster_tol);
      Direct dv = evaluate_direct(perturbed, ps, f, inner);
      if (dv.defective) {
        split = false;
        break;
      }
      samples.push_back(std::move(dv.value));
    }
    if (!split) continue;

    const CMV full = extrapolate_to_zero(eps, samples);
    SpectralResult r{real_part(full), full, 0.0, EvalPath::regularized,
                     std::move(s.chi), std::move(s.roots), std::move(minimal), {}};
    std::ostringstream note;
    note << "perturbation blade " << blade_name(b, A.signature().n())
         << ", extrapolation order " << cfg.extrapolation_order;
    if (used >= 2) {
      const CMV lower = extrapolate_to_zero(
          eps.subspan(1), std::vector<CMV>(samples.begin() + 1, samples.end()));
      const double gap = norm_inf(full - lower);
      note << ", extrapolation gap " << gap;
      if (gap > cfg.agreement_tol * (1.0 + norm_inf(full)))
        throw RegularizationError(
            "eps extrapolation did not settle (gap " + std::to_string(gap) + ")");
    }
    r.notes.push_back(note.str());
    r.notes.push_back(
        "eps -> 0 limit assumes an error expansion in integer powers of eps");
    finish(r, opts);
    return r;
  }
  throw RegularizationError(
      "no non-commuting blade perturbation separates the repeated roots");
}

Spectrum simple_spectrum_or_throw(const MV& A, const SpectralOptions& opts) {
  Spectrum s = analyze(A, opts.cluster_tol);
  if (!simple_spectrum(s))
    throw DegenerateSpectrumError(
        "characteristic polynomial has repeated roots; use apply_function");
  return s;
}

}  // namespace

MV exp_coordinate(const MV& A, const SpectralOptions& opts) {
  const Spectrum s = simple_spectrum_or_throw(A, opts);
  const auto fv = evaluate_all(functions::exp(), s.roots.roots);
  return realify(coordinate_sum(A, s.chi, s.roots.roots, fv), opts.imag_tol)
      .value;
}

MV exp_basis_free(const MV& A, const SpectralOptions& opts) {
  const Spectrum s = simple_spectrum_or_throw(A, opts);
  const auto fv = evaluate_all(functions::exp(), s.roots.roots);
  return realify(basis_free_sum(A, s.chi, s.roots.roots, fv), opts.imag_tol)
      .value;
}

SpectralResult apply_function(const MV& A, const ScalarFunction& f,
                              const SpectralOptions& opts) {
  Spectrum s = analyze(A, opts.cluster_tol);
  Direct dv = evaluate_direct(A, s, f, opts);
  if (dv.defective) return regularize(A, std::move(s), f, opts, dv.minimal);

  SpectralResult r{real_part(dv.value), std::move(dv.value), 0.0, dv.path,
                   std::move(s.chi), std::move(s.roots), std::move(dv.minimal),
                   {}};
  finish(r, opts);
  return r;
}

SpectralResult regularized_apply(const MV& A, const ScalarFunction& f,
                                 const SpectralOptions& opts) {
  opts.regularization.validate();
  return apply_function(A, f, opts);
}

SpectralIdentities spectral_identity_check(const MV& A) {
  const Spectrum s = simple_spectrum_or_throw(A, {});
  const auto& l = s.roots.roots;
  // Unit weights: sum_i (1/d + beta_i B_i) = 1 + sum_i beta_i B_i.
  CMV weighted = basis_free_sum(A, s.chi, l, std::vector<cplx>(l.size(), 1.0));
  weighted[0u] -= 1.0;
  return {std::move(weighted), basis_free_sum(A, s.chi, l, l)};
}

}  // namespace clifun
