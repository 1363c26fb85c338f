#include "blochspace/polarization_basis.hpp"

#include "blochspace/angular_momentum.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace blochspace {

namespace {

void require_valid(const PolOpLabel& lab, const char* who) {
  if (!valid_label(lab))
    throw std::invalid_argument(std::string(who) + ": invalid label (two_j=" +
                                std::to_string(lab.two_j) + ", L=" +
                                std::to_string(lab.L) + ", M=" +
                                std::to_string(lab.M) + ")");
}

void require_same_space(const PolOpLabel& a, const PolOpLabel& b, const char* who) {
  if (a.two_j != b.two_j)
    throw std::invalid_argument(std::string(who) + ": labels from different spin spaces");
}

ComplexMatrix build_operator(int two_j, int L, int M) {
  const int n = two_j + 1;
  ComplexMatrix t(n);
  SignedSqrtRational pre =
      SignedSqrtRational::signed_sqrt(1, Rational(2 * L + 1, n));
  HalfInteger j = HalfInteger::from_twice(two_j);
  for (int col = 0; col < n; ++col) {
    int row = col - M;  // selection rule m = m' + M
    if (row < 0 || row >= n) continue;
    HalfInteger mp = HalfInteger::from_twice(two_j - 2 * col);
    HalfInteger m = HalfInteger::from_twice(two_j - 2 * row);
    SignedSqrtRational e =
        pre * cgc(j, mp, HalfInteger::integer(L), HalfInteger::integer(M), j, m);
    t.at(row, col) = e.to_double();
  }
  return t;
}

const std::vector<ComplexMatrix>& cached_basis(int two_j) {
  static std::mutex mu;
  static std::map<int, std::vector<ComplexMatrix>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(two_j);
  if (it != cache.end()) return it->second;
  std::vector<ComplexMatrix> ops;
  for (int L = 0; L <= two_j; ++L)
    for (int M = L; M >= -L; --M) ops.push_back(build_operator(two_j, L, M));
  return cache.emplace(two_j, std::move(ops)).first->second;
}

}  // namespace

bool valid_label(const PolOpLabel& lab) {
  return lab.two_j >= 1 && lab.L >= 0 && lab.L <= lab.two_j &&
         std::abs(lab.M) <= lab.L;
}

std::vector<PolOpLabel> basis_labels(int two_j) {
  if (two_j < 1) throw std::invalid_argument("basis_labels: two_j must be >= 1");
  std::vector<PolOpLabel> labs;
  for (int L = 0; L <= two_j; ++L)
    for (int M = L; M >= -L; --M) labs.push_back({two_j, L, M});
  return labs;
}

int basis_index(const PolOpLabel& lab) {
  require_valid(lab, "basis_index");
  return lab.L * lab.L + (lab.L - lab.M);
}

ComplexMatrix polarization_operator(const PolOpLabel& lab) {
  require_valid(lab, "polarization_operator");
  return cached_basis(lab.two_j)[basis_index(lab)];
}

std::pair<PolOpLabel, double> adjoint_term(const PolOpLabel& lab) {
  require_valid(lab, "adjoint_term");
  double phase = lab.M % 2 == 0 ? 1.0 : -1.0;
  return {PolOpLabel{lab.two_j, lab.L, -lab.M}, phase};
}

std::vector<ExpansionTerm> product_expansion(const PolOpLabel& a,
                                             const PolOpLabel& b) {
  require_valid(a, "product_expansion");
  require_valid(b, "product_expansion");
  require_same_space(a, b, "product_expansion");

  const int two_j = a.two_j;
  const int m3 = a.M + b.M;
  HalfInteger j = HalfInteger::from_twice(two_j);
  SignedSqrtRational root =
      SignedSqrtRational::signed_sqrt(1, Rational((2 * a.L + 1) * (2 * b.L + 1)));

  std::vector<ExpansionTerm> terms;
  int lo = std::max(std::abs(a.L - b.L), std::abs(m3));
  int hi = std::min(a.L + b.L, two_j);
  for (int l3 = lo; l3 <= hi; ++l3) {
    SignedSqrtRational c =
        root *
        wigner6j(HalfInteger::integer(a.L), HalfInteger::integer(b.L),
                 HalfInteger::integer(l3), j, j, j) *
        cgc(HalfInteger::integer(a.L), HalfInteger::integer(a.M),
            HalfInteger::integer(b.L), HalfInteger::integer(b.M),
            HalfInteger::integer(l3), HalfInteger::integer(m3));
    if (c.is_zero()) continue;
    if ((two_j + l3) % 2 != 0) c = -c;
    terms.push_back({PolOpLabel{two_j, l3, m3}, Complex(c.to_double(), 0.0)});
  }
  return terms;
}

std::vector<ExpansionTerm> commutator_expansion(const PolOpLabel& a,
                                                const PolOpLabel& b, bool anti) {
  // [T_a, T_b]_-+ keeps the product-expansion terms whose L has the right
  // parity, doubled; the others cancel between T_a T_b and T_b T_a.
  std::vector<ExpansionTerm> terms;
  for (const ExpansionTerm& t : product_expansion(a, b)) {
    bool even = (a.L + b.L + t.label.L) % 2 == 0;
    if (even == anti) terms.push_back({t.label, 2.0 * t.coeff});
  }
  return terms;
}

Complex multi_trace(int two_j, const std::vector<PolOpLabel>& labels) {
  if (labels.empty()) throw std::invalid_argument("multi_trace: empty product");
  int sum_m = 0;
  Rational pre = 1;
  for (const PolOpLabel& lab : labels) {
    require_valid(lab, "multi_trace");
    if (lab.two_j != two_j)
      throw std::invalid_argument("multi_trace: labels from different spin spaces");
    sum_m += lab.M;
    pre *= 2 * lab.L + 1;
    pre /= two_j + 1;
  }
  if (sum_m != 0) return Complex(0.0, 0.0);

  HalfInteger j = HalfInteger::from_twice(two_j);
  double total = 0.0;
  for (int tm = -two_j; tm <= two_j; tm += 2) {
    // Chain of couplings j,m -> j,m+M1 -> j,m+M1+M2 -> ... -> j,m.
    SignedSqrtRational chain = SignedSqrtRational::of_rational(1);
    int tcur = tm;
    for (const PolOpLabel& lab : labels) {
      int tnext = tcur + 2 * lab.M;
      if (std::abs(tnext) > two_j) {
        chain = SignedSqrtRational();
        break;
      }
      chain = chain * cgc(HalfInteger::integer(lab.L), HalfInteger::integer(lab.M),
                          j, HalfInteger::from_twice(tcur), j,
                          HalfInteger::from_twice(tnext));
      if (chain.is_zero()) break;
      tcur = tnext;
    }
    total += chain.to_double();
  }
  return Complex(SignedSqrtRational::signed_sqrt(1, pre).to_double() * total, 0.0);
}

}  // namespace blochspace
