#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "b2sr/proof.hpp"
#include "b2sr/terms.hpp"

namespace b2sr {

struct CheckFailure {
    // Offending node, or UINT32_MAX for derivation level failures
    // (root coverage, id numbering).
    std::uint32_t node_id = 0;
    std::string reason;
};

struct CheckResult {
    std::vector<CheckFailure> failures;

    bool ok() const noexcept { return failures.empty(); }
};

inline constexpr std::uint32_t check_no_node = UINT32_MAX;

// Re-instantiate the axiom from its stored substitution and compare with
// the stored lhs and rhs. Returns an empty string on success, else the
// reason for rejection.
std::string check_instance(const AxiomInstance& inst);

// Full structural check of a derivation of counterpart <= goal: ids
// match indices, premises resolve, the DAG is acyclic, every node obeys
// its rule locally, and the union of root conclusions covers the
// counterpart. Purely syntactic; no appeal to the decision procedure.
CheckResult check_derivation(const Derivation& d, const Polynomial& counterpart);

}  // namespace b2sr
