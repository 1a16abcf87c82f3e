#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace b2sr {

// Thrown by the polynomial parser. offset() is the byte position of the
// first offending character (input length for truncated input).
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, std::size_t offset)
        : std::runtime_error(std::move(msg)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// A variable symbol: one lowercase letter followed by an optional decimal
// index, e.g. "x", "y2", "z17". Ordering is lexicographic on the symbol
// text, which is all the rest of the library ever needs.
class Letter {
public:
    explicit Letter(std::string symbol);

    const std::string& symbol() const noexcept { return symbol_; }

    friend auto operator<=>(const Letter&, const Letter&) = default;

private:
    std::string symbol_;
};

// A possibly empty run of letters. Words are nonempty by construction;
// axiom substitutions and scratch factors may be empty, so they live here.
using LetterSeq = std::vector<Letter>;

// Concatenate any number of LetterSeq into one.
template <typename... Seqs>
LetterSeq cat(const Seqs&... seqs) {
    LetterSeq out;
    out.reserve((seqs.size() + ... + 0));
    (out.insert(out.end(), seqs.begin(), seqs.end()), ...);
    return out;
}

// A nonempty word over the letter alphabet.
class Word {
public:
    explicit Word(LetterSeq letters);

    const LetterSeq& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }

    const Letter& first() const noexcept { return letters_.front(); }
    const Letter& last() const noexcept { return letters_.back(); }

    // First n letters, 0 <= n <= size(). May be empty.
    LetterSeq prefix(std::size_t n) const;
    // Letters from index i to the end, 0 <= i <= size(). May be empty.
    LetterSeq suffix(std::size_t i) const;

    Word reversed() const;

    std::string str() const;

    friend auto operator<=>(const Word&, const Word&) = default;

private:
    LetterSeq letters_;
};

// A polynomial is a nonempty finite set of words; addition is idempotent
// and commutative, so the representation is a sorted duplicate-free vector.
class Polynomial {
public:
    explicit Polynomial(std::vector<Word> words);

    static Polynomial single(Word w);

    const std::vector<Word>& words() const noexcept { return words_; }
    std::size_t size() const noexcept { return words_.size(); }

    bool contains(const Word& w) const;

    // Set union, the semiring sum of the two polynomials.
    Polynomial united(const Polynomial& other) const;

    // The set of letters occurring in some word.
    std::set<Letter> content() const;

    Polynomial reversed() const;

    std::string str() const;

    friend auto operator<=>(const Polynomial&, const Polynomial&) = default;

private:
    std::vector<Word> words_;
};

// Grammar: poly ::= word ("+" word)*, word ::= letter+,
// letter ::= [a-z][0-9]*. Whitespace and '*' separate letters without
// further meaning. Malformed input raises ParseError with a byte offset.
Polynomial parse_polynomial(std::string_view input);

// Parse a juxtaposed run of letters, e.g. "x1yx2". Empty input gives the
// empty sequence. Used for axiom substitutions inside proof objects.
LetterSeq parse_letter_seq(std::string_view input);

// Canonical text form: words joined by " + ", letters juxtaposed.
std::string print_polynomial(const Polynomial& p);

std::string to_string(const LetterSeq& seq);

std::set<Letter> content(const Word& w);

// Leftmost occurrence of the two-letter factor a b inside w, as the split
// w = u1 a b u2. Returns the pair (u1, u2); throws std::invalid_argument
// if no occurrence exists.
std::pair<LetterSeq, LetterSeq> find_factor(const Word& w, const Letter& a,
                                            const Letter& b);

}  // namespace b2sr
