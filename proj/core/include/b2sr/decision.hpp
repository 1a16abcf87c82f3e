#pragma once

#include <optional>
#include <string>
#include <utility>

#include "b2sr/rho.hpp"
#include "b2sr/terms.hpp"

namespace b2sr {

// The four structural conditions, checked in this order. An identity
// holds over the matrix-unit semiring iff all four agree on both sides.
enum class Condition : std::uint8_t { content, rho, init, term };

std::string_view condition_name(Condition c);

struct Verdict {
    bool valid = false;
    // Set iff !valid: the first condition that separates the sides.
    std::optional<Condition> failed_condition;
    // Human readable account of the separation, empty when valid.
    std::string detail;
    // For rho failures: a generating pair of one side not respected by
    // the other side's partition. For init/term failures: the positions
    // witnessing the disagreement.
    std::optional<std::pair<Position, Position>> separating_pair;
    // Whether separating_pair was found on the left side (p); otherwise
    // it comes from the right side (q).
    bool pair_from_lhs = false;
};

// Decide whether p = q holds in every model, by comparing contents,
// position equivalences, and initial and terminal classes. Runs in
// near linear time in the size of the input.
Verdict decide(const Polynomial& p, const Polynomial& q);

// Decide the inequality u <= v, encoded as u + v = v.
Verdict decide_inequality(const Polynomial& u, const Polynomial& v);

}  // namespace b2sr
