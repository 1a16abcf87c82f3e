#include "b2sr/proof.hpp"

#include <stdexcept>

namespace b2sr {

std::string_view axiom_name(AxiomName a) {
    switch (a) {
        case AxiomName::rook: return "rook";
        case AxiomName::crossing: return "crossing";
    }
    throw std::logic_error("corrupt AxiomName");
}

std::string_view rule_name(Rule r) {
    switch (r) {
        case Rule::summand: return "summand";
        case Rule::sum: return "sum";
        case Rule::axiom: return "axiom";
    }
    throw std::logic_error("corrupt Rule");
}

std::optional<AxiomInstance> AxiomInstance::make(AxiomName axiom,
                                                AxiomSubstitution subst) {
    const LetterSeq& x1 = subst.x1;
    const LetterSeq& x2 = subst.x2;
    const LetterSeq& y = subst.y;
    const LetterSeq& z1 = subst.z1;
    const LetterSeq& z2 = subst.z2;

    if (axiom == AxiomName::rook) {
        if (!y.empty()) return std::nullopt;
        // x2 z2 <= x1 z1 + x1 z2 + x2 z1: all four words must be nonempty.
        LetterSeq lhs = cat(x2, z2);
        LetterSeq r1 = cat(x1, z1);
        LetterSeq r2 = cat(x1, z2);
        LetterSeq r3 = cat(x2, z1);
        if (lhs.empty() || r1.empty() || r2.empty() || r3.empty()) {
            return std::nullopt;
        }
        return AxiomInstance{
            axiom, std::move(subst), Word(std::move(lhs)),
            Polynomial({Word(std::move(r1)), Word(std::move(r2)),
                        Word(std::move(r3))})};
    }

    // crossing: x1 y z2 <= x1 y z1 + x2 y z2, y nonempty. The nonempty
    // core y already keeps every word nonempty.
    if (y.empty()) return std::nullopt;
    LetterSeq lhs = cat(x1, y, z2);
    LetterSeq r1 = cat(x1, y, z1);
    LetterSeq r2 = cat(x2, y, z2);
    return AxiomInstance{axiom, std::move(subst), Word(std::move(lhs)),
                         Polynomial({Word(std::move(r1)),
                                     Word(std::move(r2))})};
}

}  // namespace b2sr
