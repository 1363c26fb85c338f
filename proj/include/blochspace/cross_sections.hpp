#pragma once

#include "blochspace/bloch_codec.hpp"

#include <array>
#include <string>
#include <vector>

namespace blochspace {

// ---------------------------------------------------------------------------
// Qubit (N = 2).  The state is rho = I/2 + x T_10 + V_11 T_11 + V_1-1 T_1-1
// with V_11 = alpha + i beta; it is a state iff x^2 + 2(alpha^2+beta^2) <= 1/2,
// with equality exactly on the pure-state surface.

double qubit_norm_sq(double x, double alpha, double beta);

// Parametric pure-state surface: returns (Re V_11, Im V_11, V_10) =
// ((sin t)/2 cos u, (sin t)/2 sin u, (cos t)/sqrt(2)) for t in [0, pi],
// u in [0, 2 pi]; arguments outside those ranges throw.
std::array<double, 3> qubit_surface(double t, double u);

// ---------------------------------------------------------------------------
// Qutrit (N = 3).  Eight real parameters of the Bloch vector:
// V_10 = x, V_11 = a + i b, V_20 = y, V_21 = alpha1 + i beta1,
// V_22 = alpha2 + i beta2 (negative-M components follow by hermiticity).

struct QutritParams {
  double x = 0, a = 0, b = 0, y = 0;
  double alpha1 = 0, beta1 = 0, alpha2 = 0, beta2 = 0;
};

BlochVector qutrit_bloch(const QutritParams& q);
QutritParams qutrit_params(const BlochVector& v);  // requires two_j == 2

// |V|^2, the cubic invariant T_3 = Tr{(V.T)^3}, and
// F = 1/9 - |V|^2/2 + T_3 = 3 det(rho), all in closed form.
double qutrit_norm_sq(const QutritParams& q);
double qutrit_t3(const QutritParams& q);
double qutrit_f(const QutritParams& q);

// ---------------------------------------------------------------------------
// Two-parameter cross sections: all but two of the eight parameters are set
// to zero.  The 28 parameter pairs fall into seven families with a common
// F(s, t); the pair order below fixes which parameter is s and which is t.

enum class QutritAxis { X, A, B, Y, Alpha1, Beta1, Alpha2, Beta2 };

const char* axis_name(QutritAxis axis);
QutritAxis axis_from_name(const std::string& name);

struct SectionPair {
  QutritAxis s;
  QutritAxis t;
  friend bool operator==(const SectionPair&, const SectionPair&) = default;
};

enum class SectionTag { I, II, III, IV, V, VI, VII };

const char* section_name(SectionTag tag);
SectionTag section_from_name(const std::string& name);

// Family of a pair (accepted in either orientation; unknown pairs throw) and
// the members of each family in canonical orientation.
SectionTag section_type(const SectionPair& pair);
SectionPair canonical_pair(const SectionPair& pair);
std::vector<SectionPair> section_members(SectionTag tag);

// Closed forms on the section plane; identical for every member of a family.
double section_f(SectionTag tag, double s, double t);
double section_norm_sq(SectionTag tag, double s, double t);

// The full parameter point of a section pair at (s, t).
QutritParams embed_pair(const SectionPair& pair, double s, double t);

// Pure states lying in the section plane: the (s, t) points with
// |V|^2 = 2/3 and F = 0 (eigenvalues {1, 0, 0}).  Empty for VI and VII.
std::vector<std::array<double, 2>> section_pure_states(SectionTag tag);

// ---------------------------------------------------------------------------
// Grid scan of a section over [-1, 1]^2.

enum class PointClass {
  Allowed = 0,         // |V|^2 <= 2/3 + tol and F >= -tol: physical state
  TraceBoundOnly = 1,  // |V|^2 <= 2/3 + tol but F < -tol
  Outside = 2,         // |V|^2 > 2/3 + tol
};

struct ScanResult {
  SectionPair pair;  // canonical orientation
  SectionTag tag = SectionTag::I;
  int resolution = 0;
  double tol = 0.0;
  std::vector<double> grid;       // shared axis values, -1 + 2i/(R-1)
  std::vector<double> norm_sq;    // row-major, [is * R + it]
  std::vector<double> f;          // same layout
  std::vector<PointClass> cls;    // same layout
  // F = 0 contour restricted to cells touching the trace-bound region,
  // extracted by marching squares with linear interpolation and chained
  // into polylines.
  std::vector<std::vector<std::array<double, 2>>> boundary;
  std::vector<std::array<double, 2>> pure_states;
};

// Scans a section pair (canonicalized first) or a family's first member.
// Rows are evaluated in parallel; the BLOCHSPACE_THREADS environment
// variable caps the worker count, and results are byte-identical regardless
// of the thread count.  For resolution <= 201 every grid point is
// cross-checked against check_positivity; a disagreement clearly outside the
// tolerance band raises std::runtime_error.
ScanResult scan_section(const SectionPair& pair, int resolution = 401,
                        double tol = 1e-9);
ScanResult scan_section(SectionTag tag, int resolution = 401, double tol = 1e-9);

}  // namespace blochspace
