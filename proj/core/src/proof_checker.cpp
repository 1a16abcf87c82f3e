#include "b2sr/proof_checker.hpp"

#include <algorithm>
#include <set>

namespace b2sr {

std::string check_instance(const AxiomInstance& inst) {
    std::optional<AxiomInstance> rebuilt =
        AxiomInstance::make(inst.axiom, inst.subst);
    if (!rebuilt) {
        return "substitution violates the axiom shape";
    }
    if (rebuilt->lhs != inst.lhs) {
        return "left word " + inst.lhs.str() +
               " does not match the substitution, expected " +
               rebuilt->lhs.str();
    }
    if (rebuilt->rhs != inst.rhs) {
        return "right side " + inst.rhs.str() +
               " does not match the substitution, expected " +
               rebuilt->rhs.str();
    }
    return "";
}

CheckResult check_derivation(const Derivation& d,
                             const Polynomial& counterpart) {
    CheckResult res;
    auto fail = [&res](std::uint32_t id, std::string reason) {
        res.failures.push_back({id, std::move(reason)});
    };

    if (d.nodes.empty()) {
        fail(check_no_node, "derivation has no nodes");
        return res;
    }
    auto n = static_cast<std::uint32_t>(d.nodes.size());
    bool structure_ok = true;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (d.nodes[i].id != i) {
            fail(i, "node id does not match its index");
            structure_ok = false;
        }
        for (std::uint32_t p : d.nodes[i].premises) {
            if (p >= n) {
                fail(i, "premise id out of range");
                structure_ok = false;
            }
        }
    }
    if (!structure_ok) return res;

    // Cycle scan over premise edges. Conclusions are stored per node, so
    // the local rule checks below stay meaningful either way, but a
    // cyclic proof justifies nothing and must be rejected.
    {
        std::vector<std::uint8_t> color(n, 0);  // 0 new, 1 open, 2 done
        for (std::uint32_t start = 0; start < n && res.ok(); ++start) {
            if (color[start]) continue;
            std::vector<std::pair<std::uint32_t, std::size_t>> stack{
                {start, 0}};
            color[start] = 1;
            while (!stack.empty()) {
                auto& [id, next] = stack.back();
                if (next < d.nodes[id].premises.size()) {
                    std::uint32_t p = d.nodes[id].premises[next++];
                    if (color[p] == 1) {
                        fail(id, "premises form a cycle");
                        break;
                    }
                    if (color[p] == 0) {
                        color[p] = 1;
                        stack.emplace_back(p, 0);
                    }
                } else {
                    color[id] = 2;
                    stack.pop_back();
                }
            }
        }
    }

    for (const DerivationNode& node : d.nodes) {
        switch (node.rule) {
            case Rule::summand:
                if (!node.premises.empty()) {
                    fail(node.id, "summand node has premises");
                }
                if (node.instance) {
                    fail(node.id, "summand node carries an axiom instance");
                }
                if (node.conclusion.size() != 1) {
                    fail(node.id, "summand node concludes " +
                                      node.conclusion.str() +
                                      ", not a single word");
                } else if (!d.goal.contains(node.conclusion.words().front())) {
                    fail(node.id, "word " +
                                      node.conclusion.words().front().str() +
                                      " is not a summand of the goal");
                }
                break;
            case Rule::sum: {
                if (node.premises.empty()) {
                    fail(node.id, "sum node has no premises");
                    break;
                }
                if (node.instance) {
                    fail(node.id, "sum node carries an axiom instance");
                }
                Polynomial acc = d.nodes[node.premises.front()].conclusion;
                for (std::size_t i = 1; i < node.premises.size(); ++i) {
                    acc = acc.united(d.nodes[node.premises[i]].conclusion);
                }
                if (acc != node.conclusion) {
                    fail(node.id, "sum concludes " + node.conclusion.str() +
                                      ", premises give " + acc.str());
                }
                break;
            }
            case Rule::axiom: {
                if (!node.instance) {
                    fail(node.id, "axiom node lacks an instance");
                    break;
                }
                if (std::string reason = check_instance(*node.instance);
                    !reason.empty()) {
                    fail(node.id, reason);
                    break;
                }
                if (node.premises.size() != 1) {
                    fail(node.id, "axiom node needs exactly one premise");
                    break;
                }
                const Polynomial& premise =
                    d.nodes[node.premises.front()].conclusion;
                if (premise != node.instance->rhs) {
                    fail(node.id, "axiom premise concludes " + premise.str() +
                                      ", instance requires " +
                                      node.instance->rhs.str());
                }
                if (node.conclusion !=
                    Polynomial::single(node.instance->lhs)) {
                    fail(node.id, "axiom concludes " + node.conclusion.str() +
                                      ", instance gives " +
                                      node.instance->lhs.str());
                }
                break;
            }
            default:
                fail(node.id, "unknown rule");
        }
    }

    if (d.roots.empty()) {
        fail(check_no_node, "derivation has no roots");
    }
    std::set<Word> covered;
    for (std::uint32_t r : d.roots) {
        if (r >= n) {
            fail(check_no_node, "root id out of range");
            continue;
        }
        const auto& words = d.nodes[r].conclusion.words();
        covered.insert(words.begin(), words.end());
    }
    for (const Word& w : counterpart.words()) {
        if (!covered.count(w)) {
            fail(check_no_node,
                 "root conclusions do not cover the word " + w.str());
        }
    }
    return res;
}

}  // namespace b2sr
