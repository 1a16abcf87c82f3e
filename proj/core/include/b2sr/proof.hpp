#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "b2sr/terms.hpp"

namespace b2sr {

// The two axiom schemes of the finite inequational basis. With
// u <= v standing for u + v = v:
//   rook:     x2 z2 <= x1 z1 + x1 z2 + x2 z1,
//   crossing: x1 y z2 <= x1 y z1 + x2 y z2, y nonempty.
// All other substitution slots may be empty as long as every word in the
// instance stays nonempty.
enum class AxiomName : std::uint8_t { rook, crossing };

std::string_view axiom_name(AxiomName a);

struct AxiomSubstitution {
    LetterSeq x1;
    LetterSeq x2;
    LetterSeq y;  // empty for rook, nonempty for crossing
    LetterSeq z1;
    LetterSeq z2;

    friend auto operator<=>(const AxiomSubstitution&,
                            const AxiomSubstitution&) = default;
};

// A fully instantiated axiom: the inequality lhs <= rhs obtained by
// substituting letter sequences into one of the two schemes.
struct AxiomInstance {
    AxiomName axiom;
    AxiomSubstitution subst;
    Word lhs;
    Polynomial rhs;

    // Instantiate, validating shape: every produced word nonempty,
    // y nonempty exactly when the scheme is crossing. Returns nullopt
    // on violation.
    static std::optional<AxiomInstance> make(AxiomName axiom,
                                             AxiomSubstitution subst);

    friend auto operator<=>(const AxiomInstance&, const AxiomInstance&) =
        default;
};

// Derivation rules:
//   summand: no premises, conclusion {w} for a word w of the goal,
//   sum:     conclusion is the union of the premises' conclusions,
//   axiom:   one premise concluding the instance's rhs (as a set);
//            conclusion {lhs}.
// Soundness: each node's conclusion, read as a polynomial, satisfies
// conclusion <= goal over the matrix-unit semiring.
enum class Rule : std::uint8_t { summand, sum, axiom };

std::string_view rule_name(Rule r);

struct DerivationNode {
    std::uint32_t id = 0;
    Polynomial conclusion;
    Rule rule = Rule::summand;
    std::vector<std::uint32_t> premises;
    std::optional<AxiomInstance> instance;  // present iff rule == axiom
};

// A derivation DAG establishing counterpart <= goal: node ids equal
// vector indices, premises point to earlier nodes, and the union of the
// root conclusions covers every word of the counterpart polynomial.
struct Derivation {
    Polynomial goal;
    std::vector<DerivationNode> nodes;
    std::vector<std::uint32_t> roots;
};

}  // namespace b2sr
