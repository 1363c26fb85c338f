#pragma once

#include "blochspace/complex_matrix.hpp"
#include "blochspace/polarization_basis.hpp"

#include <utility>
#include <vector>

namespace blochspace {

// Hand-tabulated basis operators for the two smallest spaces (two_j = 1 and
// two_j = 2), written out entry by entry from the defining Clebsch-Gordan
// sums. They serve as an independent reference: the generated operators must
// reproduce them to near machine precision, which pins both the sign
// convention and the row ordering (row i corresponds to m = j - i).
//
// Throws std::invalid_argument for any other two_j.
std::vector<std::pair<PolOpLabel, ComplexMatrix>> reference_operators(int two_j);

}  // namespace blochspace
