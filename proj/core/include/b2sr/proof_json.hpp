#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "b2sr/derive.hpp"
#include "b2sr/proof.hpp"

namespace b2sr {

class ProofJsonError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A derivation tagged with which inequality of the identity it proves.
struct DirectedDerivation {
    Derivation derivation;
    std::string direction;  // "lhs<=rhs" or "rhs<=lhs"
};

// Serialized node shape:
//   {"id": n, "conclusion": "w1 + w2", "rule": "summand|sum|axiom",
//    "premises": [ids], "axiom": "rook|crossing", "subst": {...}}
// with axiom and subst present only on axiom nodes. Substitution entries
// are juxtaposed letter strings, "" for the empty sequence; y is omitted
// for rook instances.
std::string derivation_to_json(const Derivation& d,
                               const std::string& direction, int indent = 2);

// The canonical proof document for an identity: a two element array,
// direction "lhs<=rhs" first.
std::string derivation_pair_to_json(const DerivationPair& pair,
                                    int indent = 2);

// Parse either a single direction object or a pair array. Instances are
// rebuilt from their substitutions; malformed substitutions raise
// ProofJsonError, while semantic mismatches are left for the checker to
// report per node. Arbitrary distinct node ids are accepted and remapped
// to dense 0-based ids.
std::vector<DirectedDerivation> derivations_from_json(const std::string& text);

}  // namespace b2sr
