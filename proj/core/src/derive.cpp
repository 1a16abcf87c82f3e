#include "b2sr/derive.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "b2sr/decision.hpp"

namespace b2sr {

namespace {

LetterSeq rev(const LetterSeq& s) { return LetterSeq(s.rbegin(), s.rend()); }

bool has_factor(const Word& w, const Letter& a, const Letter& b) {
    const LetterSeq& ls = w.letters();
    for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
        if (ls[i] == a && ls[i + 1] == b) return true;
    }
    return false;
}

std::size_t common_prefix(const Word& a, const Word& b) {
    std::size_t n = std::min(a.size(), b.size());
    std::size_t i = 0;
    while (i < n && a.letters()[i] == b.letters()[i]) ++i;
    return i;
}

}  // namespace

DerivationBuilder::DerivationBuilder(Polynomial goal)
    : goal_(std::move(goal)), rho_(build_rho(goal_)) {}

DerivationBuilder::~DerivationBuilder() = default;
DerivationBuilder::DerivationBuilder(DerivationBuilder&&) noexcept = default;
DerivationBuilder& DerivationBuilder::operator=(DerivationBuilder&&) noexcept =
    default;

std::uint32_t DerivationBuilder::add_node(DerivationNode node) {
    auto it = by_conclusion_.find(node.conclusion);
    if (it != by_conclusion_.end()) return it->second;
    auto id = static_cast<std::uint32_t>(nodes_.size());
    node.id = id;
    by_conclusion_.emplace(node.conclusion, id);
    nodes_.push_back(std::move(node));
    return id;
}

const Polynomial& DerivationBuilder::conclusion_of(std::uint32_t id) const {
    return nodes_.at(id).conclusion;
}

const Word& DerivationBuilder::word_of(std::uint32_t id) const {
    const Polynomial& c = conclusion_of(id);
    if (c.size() != 1) {
        throw std::logic_error("node does not conclude a single word");
    }
    return c.words().front();
}

std::uint32_t DerivationBuilder::summand(const Word& w) {
    if (!goal_.contains(w)) {
        throw DerivationError("word " + w.str() +
                              " is not a summand of the goal");
    }
    return add_node(
        DerivationNode{0, Polynomial::single(w), Rule::summand, {}, {}});
}

std::uint32_t DerivationBuilder::sum(
    const std::vector<std::uint32_t>& premises) {
    if (premises.empty()) {
        throw DerivationError("sum needs at least one premise");
    }
    std::vector<std::uint32_t> deduped;
    for (std::uint32_t id : premises) {
        conclusion_of(id);  // bounds check
        if (std::find(deduped.begin(), deduped.end(), id) == deduped.end()) {
            deduped.push_back(id);
        }
    }
    if (deduped.size() == 1) return deduped.front();
    Polynomial acc = conclusion_of(deduped.front());
    for (std::size_t i = 1; i < deduped.size(); ++i) {
        acc = acc.united(conclusion_of(deduped[i]));
    }
    return add_node(DerivationNode{0, std::move(acc), Rule::sum,
                                   std::move(deduped), {}});
}

std::uint32_t DerivationBuilder::axiom(
    AxiomName ax, AxiomSubstitution subst,
    const std::vector<std::uint32_t>& premises) {
    std::optional<AxiomInstance> inst = AxiomInstance::make(ax, subst);
    if (!inst) {
        throw DerivationError("malformed axiom substitution");
    }
    if (premises.size() != 1) {
        throw DerivationError("axiom step takes exactly one premise");
    }
    if (conclusion_of(premises.front()) != inst->rhs) {
        throw DerivationError(
            "axiom premise concludes " +
            conclusion_of(premises.front()).str() + ", expected " +
            inst->rhs.str());
    }
    Polynomial conclusion = Polynomial::single(inst->lhs);
    return add_node(DerivationNode{0, std::move(conclusion), Rule::axiom,
                                   premises, std::move(*inst)});
}

// Combine single-word nodes into one node concluding exactly `target`,
// then close with the axiom step. Skips the whole detour when the
// instance's left word is already derived or is a goal summand.
std::uint32_t DerivationBuilder::sum_matching(
    const Polynomial& target, const std::vector<std::uint32_t>& word_nodes) {
    Polynomial acc = conclusion_of(word_nodes.front());
    for (std::size_t i = 1; i < word_nodes.size(); ++i) {
        acc = acc.united(conclusion_of(word_nodes[i]));
    }
    if (acc != target) {
        throw std::logic_error("derivation step premises conclude " +
                               acc.str() + ", expected " + target.str());
    }
    return sum(word_nodes);
}

std::uint32_t DerivationBuilder::via_axiom(
    AxiomName ax, AxiomSubstitution subst,
    const std::vector<std::uint32_t>& word_nodes) {
    std::optional<AxiomInstance> inst = AxiomInstance::make(ax, subst);
    if (!inst) {
        throw std::logic_error("internal axiom substitution is malformed");
    }
    Polynomial lhs = Polynomial::single(inst->lhs);
    if (auto it = by_conclusion_.find(lhs); it != by_conclusion_.end()) {
        return it->second;
    }
    if (goal_.contains(inst->lhs)) return summand(inst->lhs);
    std::uint32_t premise = sum_matching(inst->rhs, word_nodes);
    return axiom(ax, std::move(subst), {premise});
}

namespace {

const Word& least_word_headed(const Polynomial& p, const Letter& x) {
    for (const Word& w : p.words()) {
        if (w.first() == x) return w;
    }
    throw std::logic_error("no word headed by " + x.symbol());
}

const Word& least_word_ending(const Polynomial& p, const Letter& x) {
    for (const Word& w : p.words()) {
        if (w.last() == x) return w;
    }
    throw std::logic_error("no word ending in " + x.symbol());
}

const Word& least_word_with_factor(const Polynomial& p, const Letter& a,
                                   const Letter& b) {
    for (const Word& w : p.words()) {
        if (has_factor(w, a, b)) return w;
    }
    throw std::logic_error("no word with factor " + a.symbol() + b.symbol());
}

std::vector<Position> slice(const std::vector<Position>& path,
                            std::size_t last) {
    return std::vector<Position>(path.begin(), path.begin() + last + 1);
}

}  // namespace

// Realizes the first-letter fact along a generator path ending in
// (x, head): produces a node concluding one word that starts with x.
// The path is peeled from its far end; each peel closes with one rook
// step whose left word starts with the target letter, feeding on
// crossing steps that align the neighboring goal summands.
std::uint32_t DerivationBuilder::derive_first_from_path(
    const std::vector<Position>& path) {
    const Letter& x = path.back().letter;
    if (auto it = memo_first_.find(x); it != memo_first_.end()) {
        return it->second;
    }
    std::uint32_t result;
    bool heads_goal_word = false;
    for (const Word& w : goal_.words()) {
        if (w.first() == x) {
            heads_goal_word = true;
            break;
        }
    }
    if (heads_goal_word) {
        result = summand(least_word_headed(goal_, x));
    } else {
        std::size_t k = path.size();
        if (k < 3) {
            throw std::logic_error("first-letter path too short to peel");
        }
        std::size_t t0 = k - 2;
        while (path[t0].side != Side::head) --t0;
        if (t0 == k - 2) {
            throw std::logic_error(
                "head-head path end contradicts the summand scan");
        }
        if (t0 == k - 3) {
            // ... (zk2,1) (zk1,2) (x,1): both flanking edges are
            // adjacencies, through factors zk1 zk2 and zk1 x.
            const Letter& zk1 = path[k - 2].letter;
            const Letter& zk2 = path[k - 3].letter;
            const Word& a = least_word_with_factor(goal_, zk1, zk2);
            auto [u1, u2] = find_factor(a, zk1, zk2);
            const Word& b = least_word_with_factor(goal_, zk1, x);
            auto [v1, v2] = find_factor(b, zk1, x);
            std::uint32_t sub = derive_first_from_path(slice(path, k - 3));
            const Word& sub_word = word_of(sub);
            LetterSeq w_rest = sub_word.suffix(1);  // sub_word = zk2 w_rest
            std::uint32_t na = summand(a);
            std::uint32_t nb = summand(b);
            std::uint32_t nb2 = via_axiom(
                AxiomName::crossing,
                {u1, v1, {zk1}, cat(LetterSeq{zk2}, u2),
                 cat(LetterSeq{x}, v2)},
                {na, nb});
            std::uint32_t nc2 = via_axiom(
                AxiomName::crossing,
                {{}, cat(u1, LetterSeq{zk1}), {zk2}, w_rest, u2},
                {sub, na});
            result = via_axiom(AxiomName::rook,
                               {cat(u1, LetterSeq{zk1}),
                                {},
                                {},
                                cat(LetterSeq{zk2}, u2),
                                cat(LetterSeq{x}, v2)},
                               {na, nb2, nc2});
        } else {
            // ... (zt,1) (zt1,2) ... (zk1,2) (x,1): a run of tail
            // positions separates the last head from x, every letter on
            // it a last letter of the goal.
            const Letter& zt = path[t0].letter;
            const Letter& zt1 = path[t0 + 1].letter;
            const Letter& zk1 = path[k - 2].letter;
            const Word& w1_word = least_word_ending(goal_, zt1);
            LetterSeq w1 = w1_word.prefix(w1_word.size() - 1);
            const Word& w2_word = least_word_ending(goal_, zk1);
            LetterSeq w2 = w2_word.prefix(w2_word.size() - 1);
            const Word& u = least_word_with_factor(goal_, zt1, zt);
            auto [u1, u2] = find_factor(u, zt1, zt);
            const Word& v = least_word_with_factor(goal_, zk1, x);
            auto [v1, v2] = find_factor(v, zk1, x);
            std::uint32_t sub = derive_first_from_path(slice(path, t0));
            const Word& sub_word = word_of(sub);
            LetterSeq w3 = sub_word.suffix(1);  // sub_word = zt w3
            std::uint32_t nu = summand(u);
            std::uint32_t nw1 = summand(w1_word);
            std::uint32_t nw2 = summand(w2_word);
            std::uint32_t nv = summand(v);
            std::uint32_t nd1 = via_axiom(
                AxiomName::crossing,
                {u1, w1, {zt1}, cat(LetterSeq{zt}, u2), {}},
                {nu, nw1});
            std::uint32_t ne1 = via_axiom(
                AxiomName::rook,
                {cat(u1, LetterSeq{zt1}), cat(w2, LetterSeq{zk1}), {},
                 {}, cat(LetterSeq{zt}, u2)},
                {nd1, nu, nw2});
            std::uint32_t ne1c = via_axiom(
                AxiomName::crossing,
                {v1, w2, {zk1}, cat(LetterSeq{x}, v2),
                 cat(LetterSeq{zt}, u2)},
                {nv, ne1});
            std::uint32_t ne3 = via_axiom(
                AxiomName::crossing,
                {{}, cat(v1, LetterSeq{zk1}), {zt}, w3, u2},
                {sub, ne1c});
            result = via_axiom(AxiomName::rook,
                               {cat(v1, LetterSeq{zk1}),
                                {},
                                {},
                                cat(LetterSeq{zt}, u2),
                                cat(LetterSeq{x}, v2)},
                               {ne1c, nv, ne3});
        }
    }
    memo_first_.emplace(x, result);
    return result;
}

// Realizes the adjacency fact along a generator path from (x0, tail) to
// (yk, head): produces a node concluding one word with factor x0 yk.
std::uint32_t DerivationBuilder::derive_inner_from_path(
    const std::vector<Position>& path) {
    const Letter& x0 = path.front().letter;
    const Letter& yk = path.back().letter;
    auto key = std::pair{x0, yk};
    if (auto it = memo_inner_.find(key); it != memo_inner_.end()) {
        return it->second;
    }
    std::uint32_t result;
    bool factor_in_goal = false;
    for (const Word& w : goal_.words()) {
        if (has_factor(w, x0, yk)) {
            factor_in_goal = true;
            break;
        }
    }
    if (factor_in_goal) {
        result = summand(least_word_with_factor(goal_, x0, yk));
    } else {
        std::size_t k = path.size();
        if (k < 3) {
            throw std::logic_error("inner path too short to peel");
        }
        if (path[k - 2].side == Side::head) {
            // ... (zk1,1) (yk,1): the last edge identifies two first
            // letters, so both head goal words.
            const Letter& zk1 = path[k - 2].letter;
            std::uint32_t sub = derive_inner_from_path(slice(path, k - 2));
            const Word& m = word_of(sub);
            auto [u1, u2] = find_factor(m, x0, zk1);
            const Word& f1 = least_word_headed(goal_, zk1);
            LetterSeq v1 = f1.suffix(1);
            const Word& f2 = least_word_headed(goal_, yk);
            LetterSeq v2 = f2.suffix(1);
            std::uint32_t nf1 = summand(f1);
            std::uint32_t nf2 = summand(f2);
            std::uint32_t ng = via_axiom(
                AxiomName::crossing,
                {{}, cat(u1, LetterSeq{x0}), {zk1}, v1, u2},
                {nf1, sub});
            result = via_axiom(AxiomName::rook,
                               {{},
                                cat(u1, LetterSeq{x0}),
                                {},
                                cat(LetterSeq{zk1}, u2),
                                cat(LetterSeq{yk}, v2)},
                               {ng, nf2, sub});
        } else if (path[k - 3].side == Side::tail) {
            // ... (zk2,2) (zk1,2) (yk,1): the tail run makes both x0 and
            // zk1 terminal letters, so last-letter facts close the gap.
            const Letter& zk1 = path[k - 2].letter;
            const Word& w = least_word_with_factor(goal_, zk1, yk);
            auto [w1, w2] = find_factor(w, zk1, yk);
            std::uint32_t nv = derive_last_letter(zk1);
            const Word& v_word = word_of(nv);
            LetterSeq v = v_word.prefix(v_word.size() - 1);
            std::uint32_t nu = derive_last_letter(x0);
            const Word& u_word = word_of(nu);
            LetterSeq u = u_word.prefix(u_word.size() - 1);
            std::uint32_t nw = summand(w);
            std::uint32_t nj = via_axiom(
                AxiomName::crossing,
                {v, w1, {zk1}, {}, cat(LetterSeq{yk}, w2)},
                {nv, nw});
            result = via_axiom(AxiomName::rook,
                               {cat(v, LetterSeq{zk1}),
                                cat(u, LetterSeq{x0}),
                                {},
                                {},
                                cat(LetterSeq{yk}, w2)},
                               {nv, nj, nu});
        } else {
            // ... (zk2,1) (zk1,2) (yk,1): both flanking edges of zk1 are
            // adjacencies, through factors zk1 zk2 and zk1 yk.
            const Letter& zk2 = path[k - 3].letter;
            const Letter& zk1 = path[k - 2].letter;
            std::uint32_t sub = derive_inner_from_path(slice(path, k - 3));
            const Word& m = word_of(sub);
            auto [u1, u2] = find_factor(m, x0, zk2);
            const Word& v = least_word_with_factor(goal_, zk1, zk2);
            auto [v1, v2] = find_factor(v, zk1, zk2);
            const Word& w = least_word_with_factor(goal_, zk1, yk);
            auto [w1, w2] = find_factor(w, zk1, yk);
            std::uint32_t nv = summand(v);
            std::uint32_t nw = summand(w);
            std::uint32_t nn1 = via_axiom(
                AxiomName::crossing,
                {cat(v1, LetterSeq{zk1}), cat(u1, LetterSeq{x0}), {zk2},
                 v2, u2},
                {nv, sub});
            std::uint32_t nn2 = via_axiom(
                AxiomName::crossing,
                {v1, w1, {zk1}, cat(LetterSeq{zk2}, u2),
                 cat(LetterSeq{yk}, w2)},
                {nn1, nw});
            result = via_axiom(AxiomName::rook,
                               {cat(v1, LetterSeq{zk1}),
                                cat(u1, LetterSeq{x0}),
                                {},
                                cat(LetterSeq{zk2}, u2),
                                cat(LetterSeq{yk}, w2)},
                               {nn1, nn2, sub});
        }
    }
    memo_inner_.emplace(key, result);
    return result;
}

namespace {

bool has_letter(const RhoPartition& rho, const Letter& l) {
    return std::binary_search(rho.letters().begin(), rho.letters().end(), l);
}

}  // namespace

std::uint32_t DerivationBuilder::derive_first_letter(const Letter& x) {
    if (auto it = memo_first_.find(x); it != memo_first_.end()) {
        return it->second;
    }
    if (!has_letter(rho_, x)) {
        throw DerivationError("letter " + x.symbol() +
                              " does not occur in the goal");
    }
    Position target{x, Side::head};
    if (rho_.class_of(target) != rho_.init_class()) {
        throw DerivationError("position " + target.str() +
                              " is not in the goal's initial class");
    }
    if (!graph_) graph_ = std::make_unique<GeneratorGraph>(goal_);
    Position anchor{goal_.words().front().first(), Side::head};
    return derive_first_from_path(graph_->path(anchor, target));
}

std::uint32_t DerivationBuilder::derive_last_letter(const Letter& x) {
    if (auto it = memo_last_.find(x); it != memo_last_.end()) {
        return it->second;
    }
    if (!has_letter(rho_, x)) {
        throw DerivationError("letter " + x.symbol() +
                              " does not occur in the goal");
    }
    Position target{x, Side::tail};
    if (rho_.class_of(target) != rho_.term_class()) {
        throw DerivationError("position " + target.str() +
                              " is not in the goal's terminal class");
    }
    if (!reversed_) {
        reversed_ = std::make_unique<DerivationBuilder>(goal_.reversed());
    }
    std::uint32_t rid = reversed_->derive_first_letter(x);
    std::uint32_t local = graft_reversed(rid);
    memo_last_.emplace(x, local);
    return local;
}

std::uint32_t DerivationBuilder::derive_inner_pair(const Letter& a,
                                                   const Letter& b) {
    auto key = std::pair{a, b};
    if (auto it = memo_inner_.find(key); it != memo_inner_.end()) {
        return it->second;
    }
    if (!has_letter(rho_, a) || !has_letter(rho_, b)) {
        throw DerivationError("letters " + a.symbol() + ", " + b.symbol() +
                              " do not both occur in the goal");
    }
    Position from{a, Side::tail};
    Position to{b, Side::head};
    if (!rho_.same_class(from, to)) {
        throw DerivationError("positions " + from.str() + " and " + to.str() +
                              " are not identified by the goal");
    }
    if (!graph_) graph_ = std::make_unique<GeneratorGraph>(goal_);
    return derive_inner_from_path(graph_->path(from, to));
}

// Map a derivation built over the letter-reversed goal back into this
// builder, reversing every word and axiom substitution. Reversal swaps
// the roles of the flanks: for rook (x1,x2,z1,z2) becomes
// (rev z1, rev z2, rev x1, rev x2), for crossing (x1,x2,y,z1,z2) becomes
// (rev z2, rev z1, rev y, rev x2, rev x1). Both schemes are preserved.
std::uint32_t DerivationBuilder::graft_reversed(std::uint32_t reversed_id) {
    if (auto it = graft_.find(reversed_id); it != graft_.end()) {
        return it->second;
    }
    std::set<std::uint32_t> need;
    std::vector<std::uint32_t> stack{reversed_id};
    while (!stack.empty()) {
        std::uint32_t id = stack.back();
        stack.pop_back();
        if (graft_.count(id) || need.count(id)) continue;
        need.insert(id);
        const DerivationNode& rn = reversed_->nodes_.at(id);
        stack.insert(stack.end(), rn.premises.begin(), rn.premises.end());
    }
    for (std::uint32_t id : need) {  // ascending, premises first
        const DerivationNode& rn = reversed_->nodes_.at(id);
        std::uint32_t local;
        switch (rn.rule) {
            case Rule::summand:
                local = summand(rn.conclusion.words().front().reversed());
                break;
            case Rule::sum: {
                std::vector<std::uint32_t> prem;
                prem.reserve(rn.premises.size());
                for (std::uint32_t p : rn.premises) {
                    prem.push_back(graft_.at(p));
                }
                local = sum(prem);
                break;
            }
            case Rule::axiom: {
                const AxiomSubstitution& s = rn.instance->subst;
                AxiomSubstitution flipped;
                if (rn.instance->axiom == AxiomName::rook) {
                    flipped = {rev(s.z1), rev(s.z2), {}, rev(s.x1),
                               rev(s.x2)};
                } else {
                    flipped = {rev(s.z2), rev(s.z1), rev(s.y), rev(s.x2),
                               rev(s.x1)};
                }
                std::optional<AxiomInstance> check =
                    AxiomInstance::make(rn.instance->axiom, flipped);
                if (!check ||
                    check->lhs != rn.instance->lhs.reversed()) {
                    throw std::logic_error(
                        "instance reversal broke the axiom shape");
                }
                std::uint32_t p = graft_.at(rn.premises.front());
                local = axiom(rn.instance->axiom, std::move(flipped), {p});
                break;
            }
            default:
                throw std::logic_error("corrupt rule in reversed node");
        }
        graft_.emplace(id, local);
    }
    return graft_.at(reversed_id);
}

std::uint32_t DerivationBuilder::derive_word(const Word& w) {
    if (auto it = memo_word_.find(w); it != memo_word_.end()) {
        return it->second;
    }
    // The structural preconditions together say exactly that w <= goal.
    for (const Letter& l : w.letters()) {
        if (!has_letter(rho_, l)) {
            throw DerivationError("letter " + l.symbol() +
                                  " does not occur in the goal");
        }
    }
    Position first_pos{w.first(), Side::head};
    if (rho_.class_of(first_pos) != rho_.init_class()) {
        throw DerivationError("word " + w.str() +
                              " does not start in the goal's initial class");
    }
    Position last_pos{w.last(), Side::tail};
    if (rho_.class_of(last_pos) != rho_.term_class()) {
        throw DerivationError("word " + w.str() +
                              " does not end in the goal's terminal class");
    }
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        Position a{w.letters()[i], Side::tail};
        Position b{w.letters()[i + 1], Side::head};
        if (!rho_.same_class(a, b)) {
            throw DerivationError("adjacency " + a.str() + ", " + b.str() +
                                  " is not identified by the goal");
        }
    }

    std::uint32_t cur;
    if (goal_.contains(w)) {
        cur = summand(w);
    } else {
        // Grow a matching prefix letter by letter with crossing steps,
        // then cut the overhang with one last-letter crossing.
        cur = derive_first_letter(w.first());
        std::size_t m = w.size();
        for (;;) {
            const Word& have = word_of(cur);
            std::size_t i = common_prefix(have, w);
            if (i == m) {
                if (have == w) break;
                const Letter& last = w.letters()[m - 1];
                std::uint32_t nlast = derive_last_letter(last);
                const Word& lw = word_of(nlast);
                LetterSeq u = lw.prefix(lw.size() - 1);
                cur = via_axiom(AxiomName::crossing,
                                {w.prefix(m - 1), u, {last},
                                 have.suffix(m), {}},
                                {cur, nlast});
                continue;
            }
            const Letter& join = w.letters()[i - 1];
            const Letter& next = w.letters()[i];
            std::uint32_t inner = derive_inner_pair(join, next);
            const Word& m_word = word_of(inner);
            auto [u1, u2] = find_factor(m_word, join, next);
            cur = via_axiom(AxiomName::crossing,
                            {w.prefix(i - 1), u1, {join}, have.suffix(i),
                             cat(LetterSeq{next}, u2)},
                            {cur, inner});
        }
    }
    memo_word_.emplace(w, cur);
    return cur;
}

Derivation DerivationBuilder::finish(
    const std::vector<std::uint32_t>& roots) const {
    std::vector<char> keep(nodes_.size(), 0);
    std::vector<std::uint32_t> stack;
    for (std::uint32_t r : roots) {
        conclusion_of(r);  // bounds check
        stack.push_back(r);
    }
    while (!stack.empty()) {
        std::uint32_t id = stack.back();
        stack.pop_back();
        if (keep[id]) continue;
        keep[id] = 1;
        const DerivationNode& n = nodes_[id];
        stack.insert(stack.end(), n.premises.begin(), n.premises.end());
    }

    Derivation d{goal_, {}, {}};
    std::vector<std::uint32_t> remap(nodes_.size(), UINT32_MAX);
    for (std::uint32_t id = 0; id < nodes_.size(); ++id) {
        if (!keep[id]) continue;
        remap[id] = static_cast<std::uint32_t>(d.nodes.size());
        DerivationNode n = nodes_[id];
        n.id = remap[id];
        for (std::uint32_t& p : n.premises) p = remap[p];
        d.nodes.push_back(std::move(n));
    }
    for (std::uint32_t r : roots) {
        std::uint32_t mapped = remap[r];
        if (std::find(d.roots.begin(), d.roots.end(), mapped) ==
            d.roots.end()) {
            d.roots.push_back(mapped);
        }
    }
    return d;
}

Derivation derive_first_letter(const Polynomial& goal, const Letter& x) {
    DerivationBuilder b(goal);
    std::uint32_t id = b.derive_first_letter(x);
    return b.finish({id});
}

Derivation derive_last_letter(const Polynomial& goal, const Letter& x) {
    DerivationBuilder b(goal);
    std::uint32_t id = b.derive_last_letter(x);
    return b.finish({id});
}

Derivation derive_inner_pair(const Polynomial& goal, const Letter& a,
                             const Letter& b) {
    DerivationBuilder builder(goal);
    std::uint32_t id = builder.derive_inner_pair(a, b);
    return builder.finish({id});
}

Derivation derive_word(const Polynomial& goal, const Word& w) {
    DerivationBuilder b(goal);
    std::uint32_t id = b.derive_word(w);
    return b.finish({id});
}

Derivation derive_inequality(const Polynomial& u, const Polynomial& v) {
    Verdict verdict = decide_inequality(u, v);
    if (!verdict.valid) {
        throw DerivationError("inequality " + u.str() + " <= " + v.str() +
                              " does not hold: " + verdict.detail);
    }
    DerivationBuilder b(v);
    std::vector<std::uint32_t> roots;
    roots.reserve(u.size());
    for (const Word& w : u.words()) {
        roots.push_back(b.derive_word(w));
    }
    return b.finish(roots);
}

DerivationPair derive_identity(const Polynomial& p, const Polynomial& q) {
    Verdict verdict = decide(p, q);
    if (!verdict.valid) {
        throw DerivationError("identity " + p.str() + " = " + q.str() +
                              " does not hold: " + verdict.detail);
    }
    return DerivationPair{derive_inequality(p, q), derive_inequality(q, p)};
}

}  // namespace b2sr
