#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "b2sr/proof.hpp"
#include "b2sr/rho.hpp"
#include "b2sr/terms.hpp"

namespace b2sr {

class DerivationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Incrementally builds a derivation DAG over a fixed goal polynomial.
// Nodes are deduplicated by conclusion, so repeated subgoals are derived
// once and shared. The derive_* entry points realize the structural
// facts of the goal as explicit derivations:
//   derive_first_letter(x): some word x u with first letter x, provided
//     (x, head) lies in the initial class of the goal;
//   derive_last_letter(x): some word u x, provided (x, tail) lies in the
//     terminal class;
//   derive_inner_pair(a, b): some word with factor a b, provided
//     ((a, tail), (b, head)) is in the goal's position equivalence;
//   derive_word(w): exactly w, provided w <= goal holds.
// Each returns the id of a node whose conclusion is the singleton word.
class DerivationBuilder {
public:
    explicit DerivationBuilder(Polynomial goal);
    ~DerivationBuilder();

    DerivationBuilder(DerivationBuilder&&) noexcept;
    DerivationBuilder& operator=(DerivationBuilder&&) noexcept;

    const Polynomial& goal() const noexcept { return goal_; }
    const RhoPartition& partition() const noexcept { return rho_; }

    // Core rules. Each throws DerivationError when the side conditions
    // fail (word not in goal, premise union mismatch, malformed instance).
    std::uint32_t summand(const Word& w);
    std::uint32_t sum(const std::vector<std::uint32_t>& premises);
    std::uint32_t axiom(AxiomName ax, AxiomSubstitution subst,
                        const std::vector<std::uint32_t>& premises);

    std::uint32_t derive_first_letter(const Letter& x);
    std::uint32_t derive_last_letter(const Letter& x);
    std::uint32_t derive_inner_pair(const Letter& a, const Letter& b);
    std::uint32_t derive_word(const Word& w);

    const Polynomial& conclusion_of(std::uint32_t id) const;

    // The single word concluded by a node built by the derive_* helpers.
    const Word& word_of(std::uint32_t id) const;

    // Extract the finished derivation: nodes not reachable from the
    // given roots are pruned and ids renumbered in topological order.
    Derivation finish(const std::vector<std::uint32_t>& roots) const;

private:
    std::uint32_t add_node(DerivationNode node);
    std::uint32_t sum_matching(const Polynomial& target,
                               const std::vector<std::uint32_t>& word_nodes);
    std::uint32_t via_axiom(AxiomName ax, AxiomSubstitution subst,
                            const std::vector<std::uint32_t>& word_nodes);
    std::uint32_t derive_first_from_path(const std::vector<Position>& path);
    std::uint32_t derive_inner_from_path(const std::vector<Position>& path);
    std::uint32_t graft_reversed(std::uint32_t reversed_id);

    Polynomial goal_;
    RhoPartition rho_;
    std::unique_ptr<GeneratorGraph> graph_;
    std::vector<DerivationNode> nodes_;
    std::map<Polynomial, std::uint32_t> by_conclusion_;
    std::map<Letter, std::uint32_t> memo_first_;
    std::map<Letter, std::uint32_t> memo_last_;
    std::map<std::pair<Letter, Letter>, std::uint32_t> memo_inner_;
    std::map<Word, std::uint32_t> memo_word_;

    // Last-letter facts are derived as first-letter facts of the letter
    // reversed goal, then grafted back with every instance reversed.
    std::unique_ptr<DerivationBuilder> reversed_;
    std::map<std::uint32_t, std::uint32_t> graft_;
};

// Standalone derivations of single structural facts, roots set to the
// one resulting node.
Derivation derive_first_letter(const Polynomial& goal, const Letter& x);
Derivation derive_last_letter(const Polynomial& goal, const Letter& x);
Derivation derive_inner_pair(const Polynomial& goal, const Letter& a,
                             const Letter& b);
Derivation derive_word(const Polynomial& goal, const Word& w);

// Derivation of u <= v: goal v, roots covering every word of u.
// Throws DerivationError if the inequality does not hold.
Derivation derive_inequality(const Polynomial& u, const Polynomial& v);

// The two inequality derivations making up a proof of p = q.
struct DerivationPair {
    Derivation forward;   // p <= q, goal q
    Derivation backward;  // q <= p, goal p
};

// Throws DerivationError if p = q does not hold.
DerivationPair derive_identity(const Polynomial& p, const Polynomial& q);

}  // namespace b2sr
