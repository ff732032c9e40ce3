#pragma once

#include <array>

#include "gtcl/transition.hpp"

namespace gtcl::example_block {

// Reference data for the worked example reproduced by the `example`
// command: the weight-zero 3x3 transition block over bounding (4,2,0).
// Entry (3,3) of the reference table disagrees with both independent
// computations of that entry; the command reports the difference instead
// of hiding it.

inline BoundingTuple bounding() { return BoundingTuple({4, 2, 0}); }

inline WeightTuple weight_class() { return WeightTuple({2, 2, 2}); }

inline std::array<std::array<Rational, 3>, 3> reference_entries() {
  const auto r = [](long long num, long long den) { return make_rational(num, den); };
  return {{{r(1, 4), r(0, 1), r(0, 1)},
           {r(-1, 4), r(1, 4), r(0, 1)},
           {r(1, 24), r(-1, 8), r(1, 24)}}};
}

}  // namespace gtcl::example_block
