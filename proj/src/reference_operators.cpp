#include "blochspace/reference_operators.hpp"

#include <cmath>
#include <stdexcept>

namespace blochspace {

namespace {

ComplexMatrix from_rows(int n, const double* entries) {
  ComplexMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = Complex(entries[i * n + j], 0.0);
  return a;
}

}  // namespace

std::vector<std::pair<PolOpLabel, ComplexMatrix>> reference_operators(int two_j) {
  const double s2 = 1.0 / std::sqrt(2.0);
  const double s3 = 1.0 / std::sqrt(3.0);
  const double s6 = 1.0 / std::sqrt(6.0);

  std::vector<std::pair<PolOpLabel, ComplexMatrix>> out;
  if (two_j == 1) {
    const double t00[] = {s2, 0, 0, s2};
    const double t11[] = {0, -1, 0, 0};
    const double t10[] = {s2, 0, 0, -s2};
    const double t1m1[] = {0, 0, 1, 0};
    out.push_back({{1, 0, 0}, from_rows(2, t00)});
    out.push_back({{1, 1, 1}, from_rows(2, t11)});
    out.push_back({{1, 1, 0}, from_rows(2, t10)});
    out.push_back({{1, 1, -1}, from_rows(2, t1m1)});
    return out;
  }
  if (two_j == 2) {
    const double t00[] = {s3, 0, 0, 0, s3, 0, 0, 0, s3};
    const double t11[] = {0, -s2, 0, 0, 0, -s2, 0, 0, 0};
    const double t10[] = {s2, 0, 0, 0, 0, 0, 0, 0, -s2};
    const double t1m1[] = {0, 0, 0, s2, 0, 0, 0, s2, 0};
    const double t22[] = {0, 0, 1, 0, 0, 0, 0, 0, 0};
    const double t21[] = {0, -s2, 0, 0, 0, s2, 0, 0, 0};
    const double t20[] = {s6, 0, 0, 0, -2 * s6, 0, 0, 0, s6};
    const double t2m1[] = {0, 0, 0, s2, 0, 0, 0, -s2, 0};
    const double t2m2[] = {0, 0, 0, 0, 0, 0, 1, 0, 0};
    out.push_back({{2, 0, 0}, from_rows(3, t00)});
    out.push_back({{2, 1, 1}, from_rows(3, t11)});
    out.push_back({{2, 1, 0}, from_rows(3, t10)});
    out.push_back({{2, 1, -1}, from_rows(3, t1m1)});
    out.push_back({{2, 2, 2}, from_rows(3, t22)});
    out.push_back({{2, 2, 1}, from_rows(3, t21)});
    out.push_back({{2, 2, 0}, from_rows(3, t20)});
    out.push_back({{2, 2, -1}, from_rows(3, t2m1)});
    out.push_back({{2, 2, -2}, from_rows(3, t2m2)});
    return out;
  }
  throw std::invalid_argument("reference_operators: tabulated only for two_j = 1, 2");
}

}  // namespace blochspace
