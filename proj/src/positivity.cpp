#include "blochspace/positivity.hpp"

#include "blochspace/validation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace blochspace {

namespace {

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Newton recursion k S_k = sum_{m=1..k} (-1)^{m-1} S_{k-m} p_m with S_0 = 1;
// p is indexed p[m-1] = Tr{rho^m}.
std::vector<double> newton_from_traces(const std::vector<double>& p) {
  const int n = static_cast<int>(p.size());
  std::vector<double> s(n + 1, 0.0);
  s[0] = 1.0;
  for (int k = 1; k <= n; ++k) {
    double acc = 0.0;
    for (int m = 1; m <= k; ++m) {
      double term = s[k - m] * p[m - 1];
      acc += (m % 2 == 1) ? term : -term;
    }
    s[k] = acc / k;
  }
  return std::vector<double>(s.begin() + 1, s.end());
}

Verdict verdict_from_min(double min_s, double tol) {
  if (std::abs(min_s) <= tol) return Verdict::Marginal;
  return min_s > 0.0 ? Verdict::Positive : Verdict::NonPositive;
}

void validate_density(const ComplexMatrix& rho, double tol, const char* who) {
  if (rho.dim() < 2)
    throw std::invalid_argument(std::string(who) + ": dimension must be >= 2");
  double herm = rho.hermiticity_residual();
  if (herm > tol) throw ValidationError("hermiticity", herm, tol);
  double tr = std::abs(rho.trace() - Complex(1.0, 0.0));
  if (tr > tol) throw ValidationError("unit_trace", tr, tol);
}

std::vector<double> density_traces(const ComplexMatrix& rho) {
  const int n = rho.dim();
  std::vector<double> p;
  p.reserve(n);
  p.push_back(rho.trace().real());
  ComplexMatrix pow = rho;
  for (int m = 2; m <= n; ++m) {
    pow = pow * rho;
    p.push_back(pow.trace().real());
  }
  return p;
}

std::vector<double> t_from_traceless(const ComplexMatrix& vt, int n, int kmax,
                                     double t2_exact) {
  std::vector<double> t(kmax + 1, 0.0);
  if (kmax >= 0) t[0] = n;
  if (kmax >= 2) t[2] = t2_exact;
  if (kmax >= 3) {
    ComplexMatrix pow = vt * vt;
    for (int m = 3; m <= kmax; ++m) {
      pow = pow * vt;
      t[m] = pow.trace().real();
    }
  }
  return t;
}

}  // namespace

std::vector<double> traces_from_trace_powers(int n, const std::vector<double>& t) {
  if (n < 2) throw std::invalid_argument("traces_from_trace_powers: n < 2");
  const int kmax = static_cast<int>(t.size()) - 1;
  std::vector<double> p;
  p.reserve(kmax);
  for (int k = 1; k <= kmax; ++k) {
    double acc = std::pow(static_cast<double>(n), 1 - k);
    for (int m = 2; m <= k; ++m)
      acc += binom(k, m) * t[m] * std::pow(static_cast<double>(n), m - k);
    p.push_back(acc);
  }
  return p;
}

std::vector<double> char_poly_coeffs(const ComplexMatrix& rho, double tol) {
  validate_density(rho, tol, "char_poly_coeffs");
  return newton_from_traces(density_traces(rho));
}

std::vector<double> trace_powers_from_bloch(const BlochVector& v, int kmax) {
  if (kmax < 0) throw std::invalid_argument("trace_powers_from_bloch: kmax < 0");
  const int n = v.dim();
  ComplexMatrix vt(n);
  for (int L = 1; L <= v.two_j(); ++L)
    for (int M = -L; M <= L; ++M) {
      Complex c = v.component(L, M);
      if (c != Complex(0.0, 0.0)) vt += c * polarization_operator({v.two_j(), L, M});
    }
  return t_from_traceless(vt, n, kmax, v.norm_sq());
}

std::vector<double> trace_powers_via_chain(const BlochVector& v, int kmax) {
  if (kmax < 0) throw std::invalid_argument("trace_powers_via_chain: kmax < 0");
  const int two_j = v.two_j();
  std::vector<double> t(kmax + 1, 0.0);
  t[0] = v.dim();

  std::vector<PolOpLabel> labs = basis_labels(two_j);
  labs.erase(labs.begin());  // drop L = 0: V.T runs over L >= 1
  const int nl = static_cast<int>(labs.size());

  for (int m = 2; m <= kmax; ++m) {
    // Odometer over all length-m label tuples; projections must cancel.
    std::vector<int> idx(m, 0);
    double acc = 0.0;
    for (;;) {
      int sum_m = 0;
      for (int i = 0; i < m; ++i) sum_m += labs[idx[i]].M;
      if (sum_m == 0) {
        std::vector<PolOpLabel> tuple;
        tuple.reserve(m);
        Complex w(1.0, 0.0);
        for (int i = 0; i < m; ++i) {
          tuple.push_back(labs[idx[i]]);
          w *= v.component(labs[idx[i]].L, labs[idx[i]].M);
        }
        if (w != Complex(0.0, 0.0)) acc += (w * multi_trace(two_j, tuple)).real();
      }
      int pos = m - 1;
      while (pos >= 0 && ++idx[pos] == nl) idx[pos--] = 0;
      if (pos < 0) break;
    }
    t[m] = acc;
  }
  return t;
}

std::vector<double> s_from_bloch(const BlochVector& v) {
  const int n = v.dim();
  std::vector<double> t = trace_powers_from_bloch(v, n);
  return newton_from_traces(traces_from_trace_powers(n, t));
}

std::vector<double> eigen_oracle(const ComplexMatrix& a, double tol) {
  if (a.dim() < 1) throw std::invalid_argument("eigen_oracle: empty matrix");
  double herm = a.hermiticity_residual();
  if (herm > tol) throw ValidationError("hermiticity", herm, tol);

  const int n = a.dim();
  // Work on the exactly hermitian average so rounding in the input cannot
  // leak imaginary parts into the diagonal.
  ComplexMatrix b(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      b.at(i, j) = 0.5 * (a.at(i, j) + std::conj(a.at(j, i)));

  const double scale = std::max(1.0, b.max_abs());
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += std::abs(b.at(p, q));
    if (off <= 1e-15 * scale) break;

    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        double r = std::abs(b.at(p, q));
        if (r == 0.0) continue;
        Complex alpha = b.at(p, q) / r;  // phase of the pivot entry
        double theta = (b.at(q, q).real() - b.at(p, p).real()) / (2.0 * r);
        double tt = theta >= 0.0 ? 1.0 / (theta + std::sqrt(theta * theta + 1.0))
                                 : -1.0 / (-theta + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(tt * tt + 1.0);
        double s = tt * c;

        for (int i = 0; i < n; ++i) {
          Complex bip = b.at(i, p), biq = b.at(i, q);
          b.at(i, p) = c * bip - s * std::conj(alpha) * biq;
          b.at(i, q) = s * alpha * bip + c * biq;
        }
        for (int j = 0; j < n; ++j) {
          Complex bpj = b.at(p, j), bqj = b.at(q, j);
          b.at(p, j) = c * bpj - s * alpha * bqj;
          b.at(q, j) = s * std::conj(alpha) * bpj + c * bqj;
        }
        b.at(p, q) = 0.0;
        b.at(q, p) = 0.0;
      }
  }

  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = b.at(i, i).real();
  std::sort(eig.begin(), eig.end(), std::greater<double>());
  return eig;
}

namespace {

PositivityReport finish_report(int n, std::vector<double> s, std::vector<double> t,
                               std::vector<double> traces, double tol, Method method) {
  PositivityReport rep;
  rep.N = n;
  rep.S = std::move(s);
  rep.T = std::move(t);
  rep.traces = std::move(traces);
  rep.tolerance = tol;
  rep.method = method;
  rep.verdict = verdict_from_min(*std::min_element(rep.S.begin(), rep.S.end()), tol);
  return rep;
}

void oracle_check(const ComplexMatrix& rho, const PositivityReport& rep) {
  std::vector<double> eig = eigen_oracle(rho, rep.tolerance);
  Verdict ev = verdict_from_min(eig.back(), rep.tolerance);
  // Marginal is compatible with either side; only opposite firm verdicts are
  // a real disagreement, and indicate a defect somewhere.
  bool clash = (rep.verdict == Verdict::Positive && ev == Verdict::NonPositive) ||
               (rep.verdict == Verdict::NonPositive && ev == Verdict::Positive);
  if (clash)
    throw std::runtime_error(
        "check_positivity: coefficient verdict disagrees with eigenvalue oracle");
}

}  // namespace

PositivityReport check_positivity(const ComplexMatrix& rho, double tol, bool oracle) {
  validate_density(rho, tol, "check_positivity");
  const int n = rho.dim();

  ComplexMatrix vt = rho;
  ComplexMatrix eye_over_n = ComplexMatrix::identity(n);
  eye_over_n *= Complex(1.0 / n, 0.0);
  vt -= eye_over_n;
  double t2 = (vt * vt).trace().real();

  std::vector<double> traces = density_traces(rho);
  std::vector<double> s = newton_from_traces(traces);
  std::vector<double> t_full = t_from_traceless(vt, n, n, t2);
  std::vector<double> t(t_full.begin() + 2, t_full.end());
  PositivityReport rep = finish_report(n, std::move(s), std::move(t),
                                       std::move(traces), tol,
                                       Method::NewtonFromMatrix);
  if (oracle) oracle_check(rho, rep);
  return rep;
}

PositivityReport check_positivity(const BlochVector& v, double tol, bool oracle) {
  const int n = v.dim();
  std::vector<double> t = trace_powers_from_bloch(v, n);
  std::vector<double> traces = traces_from_trace_powers(n, t);
  std::vector<double> s = newton_from_traces(traces);
  std::vector<double> t_tail(t.begin() + 2, t.end());
  PositivityReport rep = finish_report(n, std::move(s), std::move(t_tail),
                                       std::move(traces), tol,
                                       Method::NewtonFromBloch);
  if (oracle) oracle_check(bloch_to_density(v), rep);
  return rep;
}

}  // namespace blochspace
