#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "b2sr/terms.hpp"

namespace b2sr {

// Each letter x of a polynomial contributes two positions: (x, head) acts
// on the row side of a product through x, (x, tail) on the column side.
enum class Side : std::uint8_t { head = 1, tail = 2 };

struct Position {
    Letter letter;
    Side side;

    std::string str() const;

    friend auto operator<=>(const Position&, const Position&) = default;
};

// The three sources of forced position identifications:
//   first_letters: heads of any two words of the polynomial coincide,
//   last_letters:  tails of any two words coincide,
//   adjacency:     inside a word ... a b ..., tail of a meets head of b.
enum class RhoRel : std::uint8_t {
    first_letters,
    last_letters,
    adjacency,
};

std::string_view rho_rel_name(RhoRel rel);

struct GeneratorPair {
    Position a;
    Position b;
    RhoRel rel;

    friend auto operator<=>(const GeneratorPair&, const GeneratorPair&) =
        default;
};

// The full generating relation of the position equivalence of p:
// all pairs of head positions of first letters (including the reflexive
// ones), all pairs of tail positions of last letters, and the adjacency
// pairs of every two-letter factor, duplicates removed.
std::vector<GeneratorPair> generating_pairs(const Polynomial& p);

// The equivalence on positions of p generated by the pairs above,
// together with the classes of the shared initial and terminal positions.
// Classes are numbered in order of their least position; positions are
// ordered letter-major, head before tail.
class RhoPartition {
public:
    static RhoPartition build(const Polynomial& p);

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    const std::vector<Position>& positions() const noexcept {
        return positions_;
    }

    std::size_t class_count() const noexcept { return class_members_.size(); }
    std::size_t class_of(const Position& pos) const;
    const std::vector<Position>& class_members(std::size_t cls) const;

    // Least position of the class, the canonical representative.
    const Position& representative(std::size_t cls) const;

    bool same_class(const Position& a, const Position& b) const;

    // Class holding every (first letter, head) position.
    std::size_t init_class() const noexcept { return init_class_; }
    // Class holding every (last letter, tail) position.
    std::size_t term_class() const noexcept { return term_class_; }

private:
    std::vector<Letter> letters_;
    std::vector<Position> positions_;
    std::map<Position, std::size_t> class_of_;
    std::vector<std::vector<Position>> class_members_;
    std::size_t init_class_ = 0;
    std::size_t term_class_ = 0;
};

RhoPartition build_rho(const Polynomial& p);

// Whether two polynomials over the same content induce the same position
// equivalence. Throws std::invalid_argument when the contents differ.
bool partitions_equal(const RhoPartition& a, const RhoPartition& b);

// The undirected graph on positions whose edges are the generating pairs,
// supporting shortest connection paths between equivalent positions.
// Breadth first search visits neighbors in position order, which keeps
// the returned paths deterministic.
class GeneratorGraph {
public:
    explicit GeneratorGraph(const Polynomial& p);

    // Shortest path from one position to an equivalent one, inclusive of
    // both endpoints; a single element when from == to. Throws
    // std::invalid_argument when the positions are not connected.
    std::vector<Position> path(const Position& from, const Position& to) const;

    // The relation that justifies the edge between two adjacent positions
    // on a path. (head,head) pairs come from first_letters, (tail,tail)
    // from last_letters, and mixed pairs from adjacency.
    static RhoRel edge_relation(const Position& a, const Position& b);

private:
    std::map<Position, std::vector<Position>> adjacency_;
};

// Shortest generator path between two rho-equivalent positions of p.
std::vector<Position> connection_path(const Polynomial& p,
                                      const Position& from,
                                      const Position& to);

}  // namespace b2sr
