#include "b2sr/decision.hpp"

#include <algorithm>

namespace b2sr {

std::string_view condition_name(Condition c) {
    switch (c) {
        case Condition::content: return "Content";
        case Condition::rho: return "Rho";
        case Condition::init: return "Init";
        case Condition::term: return "Term";
    }
    throw std::logic_error("corrupt Condition");
}

namespace {

Verdict content_failure(const Letter& l, bool on_lhs) {
    Verdict v;
    v.valid = false;
    v.failed_condition = Condition::content;
    v.detail = "letter " + l.symbol() + " occurs only on the " +
               (on_lhs ? "left" : "right") + " side";
    v.pair_from_lhs = on_lhs;
    return v;
}

// Walks the star generators of `side` (the same set the partition build
// unites) and reports the first one the other side's partition does not
// respect. Star pairs are genuine generating pairs, and by transitivity
// their containment already forces containment of the full equivalence.
std::optional<std::pair<Position, Position>> unrespected_pair(
    const Polynomial& side, const RhoPartition& other) {
    const Letter& first_anchor = side.words().front().first();
    const Letter& last_anchor = side.words().front().last();
    for (const Word& w : side.words()) {
        Position fa{first_anchor, Side::head};
        Position fw{w.first(), Side::head};
        if (!other.same_class(fa, fw)) return std::pair{fa, fw};
        Position la{last_anchor, Side::tail};
        Position lw{w.last(), Side::tail};
        if (!other.same_class(la, lw)) return std::pair{la, lw};
        const LetterSeq& ls = w.letters();
        for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
            Position a{ls[i], Side::tail};
            Position b{ls[i + 1], Side::head};
            if (!other.same_class(a, b)) return std::pair{a, b};
        }
    }
    return std::nullopt;
}

}  // namespace

Verdict decide(const Polynomial& p, const Polynomial& q) {
    std::set<Letter> cp = p.content();
    std::set<Letter> cq = q.content();
    if (cp != cq) {
        for (const Letter& l : cp) {
            if (!cq.count(l)) return content_failure(l, true);
        }
        for (const Letter& l : cq) {
            if (!cp.count(l)) return content_failure(l, false);
        }
    }

    RhoPartition pp = build_rho(p);
    RhoPartition pq = build_rho(q);
    if (auto pair = unrespected_pair(p, pq)) {
        Verdict v;
        v.valid = false;
        v.failed_condition = Condition::rho;
        v.detail = "positions " + pair->first.str() + " and " +
                   pair->second.str() + " are identified on the left side only";
        v.separating_pair = *pair;
        v.pair_from_lhs = true;
        return v;
    }
    if (auto pair = unrespected_pair(q, pp)) {
        Verdict v;
        v.valid = false;
        v.failed_condition = Condition::rho;
        v.detail = "positions " + pair->first.str() + " and " +
                   pair->second.str() +
                   " are identified on the right side only";
        v.separating_pair = *pair;
        v.pair_from_lhs = false;
        return v;
    }

    // Same content and same equivalence from here on, so either
    // partition speaks for both sides.
    Position init_p{p.words().front().first(), Side::head};
    Position init_q{q.words().front().first(), Side::head};
    if (!pp.same_class(init_p, init_q)) {
        Verdict v;
        v.valid = false;
        v.failed_condition = Condition::init;
        v.detail = "initial positions " + init_p.str() + " and " +
                   init_q.str() + " fall into different classes";
        v.separating_pair = std::pair{init_p, init_q};
        v.pair_from_lhs = true;
        return v;
    }

    Position term_p{p.words().front().last(), Side::tail};
    Position term_q{q.words().front().last(), Side::tail};
    if (!pp.same_class(term_p, term_q)) {
        Verdict v;
        v.valid = false;
        v.failed_condition = Condition::term;
        v.detail = "terminal positions " + term_p.str() + " and " +
                   term_q.str() + " fall into different classes";
        v.separating_pair = std::pair{term_p, term_q};
        v.pair_from_lhs = true;
        return v;
    }

    Verdict v;
    v.valid = true;
    return v;
}

Verdict decide_inequality(const Polynomial& u, const Polynomial& v) {
    return decide(u.united(v), v);
}

}  // namespace b2sr
