#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "b2sr/b2.hpp"
#include "b2sr/terms.hpp"

namespace b2sr {

// Raised when an exhaustive check would enumerate more than the
// configured number of letters allows.
class OracleRefusal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleOptions {
    // Enumeration runs over 5^n valuations; refuse beyond this many letters.
    std::size_t max_letters = 8;
    std::size_t threads = 1;
};

struct OracleResult {
    bool holds = false;
    // First refuting valuation in enumeration order, when !holds.
    std::optional<Valuation> counterexample;
    // Number of valuations enumerated (all of them when the identity
    // holds, the prefix up to the first counterexample otherwise).
    std::uint64_t valuations = 0;
};

// Ground truth by brute force: evaluate both sides under every valuation
// of the joint content. Valuations are enumerated as base five counters
// over the sorted letter list, the first letter most significant, with
// element order 0 < e11 < e12 < e21 < e22. Deterministic for any thread
// count: the reported counterexample is always the enumeration-least one.
OracleResult oracle_check(const Polynomial& p, const Polynomial& q,
                          const OracleOptions& opts = {});

// Fixed letter pool used by the exhaustive family enumerators.
const std::vector<Letter>& enumeration_alphabet();

// All words of length 1..max_len over the first `alphabet` pool letters,
// sorted lexicographically.
std::vector<Word> enumerate_words(std::size_t alphabet, std::size_t max_len);

// All polynomials with at most max_summands words drawn from `words`,
// ordered by summand count, then by combination position.
std::vector<Polynomial> enumerate_polynomials(const std::vector<Word>& words,
                                              std::size_t max_summands);

// Every ordered pair (p, q) over the (alphabet, max_len, max_summands)
// family, diagonal included, in row major order.
void for_each_identity(
    std::size_t alphabet, std::size_t max_len, std::size_t max_summands,
    const std::function<void(const Polynomial&, const Polynomial&)>& fn);

}  // namespace b2sr
