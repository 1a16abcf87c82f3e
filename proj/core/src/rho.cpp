#include "b2sr/rho.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace b2sr {

std::string Position::str() const {
    return letter.symbol() + ':' + (side == Side::head ? '1' : '2');
}

std::string_view rho_rel_name(RhoRel rel) {
    switch (rel) {
        case RhoRel::first_letters: return "rho1";
        case RhoRel::last_letters: return "rho2";
        case RhoRel::adjacency: return "rho3";
    }
    throw std::logic_error("corrupt RhoRel");
}

std::vector<GeneratorPair> generating_pairs(const Polynomial& p) {
    std::set<Letter> firsts;
    std::set<Letter> lasts;
    std::set<std::pair<Letter, Letter>> factors;
    for (const Word& w : p.words()) {
        firsts.insert(w.first());
        lasts.insert(w.last());
        const LetterSeq& ls = w.letters();
        for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
            factors.emplace(ls[i], ls[i + 1]);
        }
    }
    std::vector<GeneratorPair> out;
    for (auto i = firsts.begin(); i != firsts.end(); ++i) {
        for (auto j = i; j != firsts.end(); ++j) {
            out.push_back({{*i, Side::head},
                           {*j, Side::head},
                           RhoRel::first_letters});
        }
    }
    for (auto i = lasts.begin(); i != lasts.end(); ++i) {
        for (auto j = i; j != lasts.end(); ++j) {
            out.push_back({{*i, Side::tail},
                           {*j, Side::tail},
                           RhoRel::last_letters});
        }
    }
    for (const auto& [a, b] : factors) {
        out.push_back({{a, Side::tail}, {b, Side::head}, RhoRel::adjacency});
    }
    return out;
}

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        parent_[find(a)] = find(b);
    }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace

RhoPartition RhoPartition::build(const Polynomial& p) {
    RhoPartition part;
    {
        std::set<Letter> letters = p.content();
        part.letters_.assign(letters.begin(), letters.end());
    }
    std::map<Letter, std::size_t> index;
    for (std::size_t i = 0; i < part.letters_.size(); ++i) {
        index[part.letters_[i]] = i;
        part.positions_.push_back({part.letters_[i], Side::head});
        part.positions_.push_back({part.letters_[i], Side::tail});
    }
    auto head = [&](const Letter& l) { return 2 * index.at(l); };
    auto tail = [&](const Letter& l) { return 2 * index.at(l) + 1; };

    // All first letters are pairwise identified, likewise all last
    // letters, so a star around one anchor generates the same classes as
    // the full pair set. This keeps the union pass linear in the input.
    UnionFind uf(part.positions_.size());
    const Letter& first_anchor = p.words().front().first();
    const Letter& last_anchor = p.words().front().last();
    for (const Word& w : p.words()) {
        uf.unite(head(first_anchor), head(w.first()));
        uf.unite(tail(last_anchor), tail(w.last()));
        const LetterSeq& ls = w.letters();
        for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
            uf.unite(tail(ls[i]), head(ls[i + 1]));
        }
    }

    std::map<std::size_t, std::size_t> cls_of_root;
    for (std::size_t i = 0; i < part.positions_.size(); ++i) {
        std::size_t root = uf.find(i);
        auto [it, fresh] =
            cls_of_root.try_emplace(root, part.class_members_.size());
        if (fresh) part.class_members_.emplace_back();
        part.class_of_[part.positions_[i]] = it->second;
        part.class_members_[it->second].push_back(part.positions_[i]);
    }
    part.init_class_ = part.class_of_.at({first_anchor, Side::head});
    part.term_class_ = part.class_of_.at({last_anchor, Side::tail});
    return part;
}

std::size_t RhoPartition::class_of(const Position& pos) const {
    auto it = class_of_.find(pos);
    if (it == class_of_.end()) {
        throw std::invalid_argument("position " + pos.str() +
                                    " is not over this content");
    }
    return it->second;
}

const std::vector<Position>& RhoPartition::class_members(
    std::size_t cls) const {
    return class_members_.at(cls);
}

const Position& RhoPartition::representative(std::size_t cls) const {
    return class_members_.at(cls).front();
}

bool RhoPartition::same_class(const Position& a, const Position& b) const {
    return class_of(a) == class_of(b);
}

RhoPartition build_rho(const Polynomial& p) { return RhoPartition::build(p); }

bool partitions_equal(const RhoPartition& a, const RhoPartition& b) {
    if (a.letters() != b.letters()) {
        throw std::invalid_argument(
            "partitions range over different contents");
    }
    if (a.class_count() != b.class_count()) return false;
    // Classes are numbered by least member on both sides, so equality of
    // partitions is equality of the two class id assignments.
    for (const Position& pos : a.positions()) {
        if (a.class_of(pos) != b.class_of(pos)) return false;
    }
    return true;
}

GeneratorGraph::GeneratorGraph(const Polynomial& p) {
    for (const GeneratorPair& g : generating_pairs(p)) {
        if (g.a == g.b) continue;
        adjacency_[g.a].push_back(g.b);
        adjacency_[g.b].push_back(g.a);
    }
    for (auto& [pos, nbrs] : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
}

std::vector<Position> GeneratorGraph::path(const Position& from,
                                           const Position& to) const {
    if (from == to) return {from};
    std::map<Position, Position> parent;
    std::deque<Position> queue{from};
    parent.emplace(from, from);
    while (!queue.empty()) {
        Position cur = queue.front();
        queue.pop_front();
        auto it = adjacency_.find(cur);
        if (it == adjacency_.end()) continue;
        for (const Position& next : it->second) {
            if (!parent.emplace(next, cur).second) continue;
            if (next == to) {
                std::vector<Position> rev{to};
                Position walk = cur;
                for (;;) {
                    rev.push_back(walk);
                    const Position& up = parent.at(walk);
                    if (up == walk) break;
                    walk = up;
                }
                return {rev.rbegin(), rev.rend()};
            }
            queue.push_back(next);
        }
    }
    throw std::invalid_argument("positions " + from.str() + " and " +
                                to.str() + " are not connected");
}

RhoRel GeneratorGraph::edge_relation(const Position& a, const Position& b) {
    if (a.side == Side::head && b.side == Side::head) {
        return RhoRel::first_letters;
    }
    if (a.side == Side::tail && b.side == Side::tail) {
        return RhoRel::last_letters;
    }
    return RhoRel::adjacency;
}

std::vector<Position> connection_path(const Polynomial& p,
                                      const Position& from,
                                      const Position& to) {
    return GeneratorGraph(p).path(from, to);
}

}  // namespace b2sr
