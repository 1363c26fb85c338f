#pragma once

#include "blochspace/complex_matrix.hpp"

#include <utility>
#include <vector>

namespace blochspace {

// Label of one basis operator T_LM acting on the spin-j space of dimension
// N = two_j + 1.  Valid labels have two_j >= 1, 0 <= L <= two_j, |M| <= L;
// there are N^2 of them, and together they form an orthonormal basis of the
// N x N complex matrices under Tr{A^dagger B}.
struct PolOpLabel {
  int two_j = 0;
  int L = 0;
  int M = 0;

  friend bool operator==(const PolOpLabel&, const PolOpLabel&) = default;
};

bool valid_label(const PolOpLabel& lab);

// All N^2 labels in canonical order: L ascending 0..two_j, and within each L
// the projection M descending from +L to -L.
std::vector<PolOpLabel> basis_labels(int two_j);

// Position of a label in the canonical order: L^2 + (L - M).
int basis_index(const PolOpLabel& lab);

// The matrix of T_LM: sqrt((2L+1)/N) times the matrix of Clebsch-Gordan
// coefficients <j m'; L M | j m> placed at row m, column m' (row 0 is m = j).
// Entries are real in this phase convention.  Matrices are cached per two_j;
// the cache is safe for concurrent use.  Invalid labels throw.
ComplexMatrix polarization_operator(const PolOpLabel& lab);

// T_LM^dagger = phase * T_{L,-M} with phase = (-1)^M; returns the mirrored
// label and the phase.
std::pair<PolOpLabel, double> adjoint_term(const PolOpLabel& lab);

// One term of an operator expansion on the basis.
struct ExpansionTerm {
  PolOpLabel label;
  Complex coeff;
};

// Expansion of the product T_a T_b back onto the basis.  Only terms with a
// non-zero coefficient are returned, ordered by ascending L.  The two labels
// must share two_j.
std::vector<ExpansionTerm> product_expansion(const PolOpLabel& a,
                                             const PolOpLabel& b);

// Expansion of the commutator [T_a, T_b] (anti = false) or anticommutator
// {T_a, T_b} (anti = true).  Commutator terms all carry odd L_a + L_b + L,
// anticommutator terms even.
std::vector<ExpansionTerm> commutator_expansion(const PolOpLabel& a,
                                                const PolOpLabel& b, bool anti);

// Trace of an ordered product Tr{T_1 T_2 ... T_n} for labels sharing two_j,
// evaluated with the closed-form chain of Clebsch-Gordan coefficients (no
// matrix products).  Zero unless the projections M_i sum to zero; always real
// in this convention, returned as complex to match the direct-trace route.
Complex multi_trace(int two_j, const std::vector<PolOpLabel>& labels);

}  // namespace blochspace
