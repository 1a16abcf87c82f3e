#include "b2sr/witness.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace b2sr {

Valuation valuation_from_coloring(const RhoPartition& part,
                                  const ClassColoring& coloring) {
    if (coloring.size() != part.class_count()) {
        throw std::invalid_argument("coloring size does not match partition");
    }
    Valuation val;
    for (const Letter& l : part.letters()) {
        int row = coloring[part.class_of({l, Side::head})];
        int col = coloring[part.class_of({l, Side::tail})];
        val.set(l, b2_unit(row, col));
    }
    return val;
}

namespace {

// Letters private to one side go to zero, the rest to e11. Every word on
// the private side hits a zero or the sum mixes distinct values, so that
// side evaluates to zero while the other evaluates to e11.
Valuation content_witness(const Polynomial& p, const Polynomial& q) {
    std::set<Letter> cp = p.content();
    std::set<Letter> cq = q.content();
    std::set<Letter> diff;
    std::set_difference(cp.begin(), cp.end(), cq.begin(), cq.end(),
                        std::inserter(diff, diff.end()));
    if (diff.empty()) {
        std::set_difference(cq.begin(), cq.end(), cp.begin(), cp.end(),
                            std::inserter(diff, diff.end()));
    }
    Valuation val;
    for (const Letter& l : cp) {
        val.set(l, diff.count(l) ? B2Element::zero : B2Element::e11);
    }
    for (const Letter& l : cq) {
        val.set(l, diff.count(l) ? B2Element::zero : B2Element::e11);
    }
    return val;
}

// Indicator coloring on one distinguished class: 1 there, 2 elsewhere.
ClassColoring indicator(const RhoPartition& part, std::size_t cls) {
    ClassColoring col(part.class_count(), 2);
    col.at(cls) = 1;
    return col;
}

}  // namespace

Valuation build_witness(const Polynomial& p, const Polynomial& q,
                        const Verdict& verdict) {
    if (verdict.valid) {
        throw std::invalid_argument(
            "cannot build a witness for a valid identity");
    }
    switch (*verdict.failed_condition) {
        case Condition::content:
            return content_witness(p, q);
        case Condition::rho: {
            // Color over the side whose equivalence lacks the pair: its
            // words all evaluate to one matrix unit, while the pair makes
            // the other side collapse to zero.
            const auto& pair = *verdict.separating_pair;
            const Polynomial& lacking = verdict.pair_from_lhs ? q : p;
            RhoPartition part = build_rho(lacking);
            return valuation_from_coloring(
                part, indicator(part, part.class_of(pair.first)));
        }
        case Condition::init: {
            // Shared equivalence, different initial classes: rows split.
            RhoPartition part = build_rho(p);
            return valuation_from_coloring(
                part, indicator(part, part.init_class()));
        }
        case Condition::term: {
            RhoPartition part = build_rho(p);
            return valuation_from_coloring(
                part, indicator(part, part.term_class()));
        }
    }
    throw std::logic_error("corrupt Condition in verdict");
}

}  // namespace b2sr
