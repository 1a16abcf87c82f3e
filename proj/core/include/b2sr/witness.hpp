#pragma once

#include <vector>

#include "b2sr/b2.hpp"
#include "b2sr/decision.hpp"
#include "b2sr/rho.hpp"
#include "b2sr/terms.hpp"

namespace b2sr {

// A two coloring of the classes of a position partition. Value 1 or 2
// per class, indexed by class id.
using ClassColoring = std::vector<int>;

// The valuation sending letter z to the matrix unit whose row is the
// color of (z, head) and whose column is the color of (z, tail).
Valuation valuation_from_coloring(const RhoPartition& part,
                                  const ClassColoring& coloring);

// Build a valuation separating p from q out of an invalid verdict:
// evaluates the two sides to different elements. Throws
// std::invalid_argument if the verdict is valid.
Valuation build_witness(const Polynomial& p, const Polynomial& q,
                        const Verdict& verdict);

}  // namespace b2sr
