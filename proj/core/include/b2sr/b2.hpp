#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "b2sr/terms.hpp"

namespace b2sr {

// The five elements of the combinatorial Brandt monoid completed with a
// multiplicative zero: the four matrix units e_{ij} plus 0. Addition is
// x + y = x when x == y and 0 otherwise, so 0 is absorbing for both
// operations and the semiring has no additive identity.
enum class B2Element : std::uint8_t {
    zero = 0,
    e11 = 1,
    e12 = 2,
    e21 = 3,
    e22 = 4,
};

inline constexpr std::size_t b2_card = 5;

// Matrix unit e_{row,col}, row and col in {1,2}.
constexpr B2Element b2_unit(int row, int col) {
    return static_cast<B2Element>(1 + (row - 1) * 2 + (col - 1));
}

// Row index of a matrix unit, 0 for zero.
constexpr int b2_row(B2Element x) {
    auto i = static_cast<int>(x);
    return i == 0 ? 0 : (i - 1) / 2 + 1;
}

// Column index of a matrix unit, 0 for zero.
constexpr int b2_col(B2Element x) {
    auto i = static_cast<int>(x);
    return i == 0 ? 0 : (i - 1) % 2 + 1;
}

namespace detail {

constexpr std::array<std::array<B2Element, b2_card>, b2_card> make_add_table() {
    std::array<std::array<B2Element, b2_card>, b2_card> t{};
    for (std::size_t i = 0; i < b2_card; ++i)
        for (std::size_t j = 0; j < b2_card; ++j)
            t[i][j] = (i == j) ? static_cast<B2Element>(i) : B2Element::zero;
    return t;
}

constexpr std::array<std::array<B2Element, b2_card>, b2_card> make_mul_table() {
    std::array<std::array<B2Element, b2_card>, b2_card> t{};
    for (std::size_t i = 0; i < b2_card; ++i)
        for (std::size_t j = 0; j < b2_card; ++j) {
            auto x = static_cast<B2Element>(i);
            auto y = static_cast<B2Element>(j);
            if (x == B2Element::zero || y == B2Element::zero ||
                b2_col(x) != b2_row(y)) {
                t[i][j] = B2Element::zero;
            } else {
                t[i][j] = b2_unit(b2_row(x), b2_col(y));
            }
        }
    return t;
}

inline constexpr auto add_table = make_add_table();
inline constexpr auto mul_table = make_mul_table();

}  // namespace detail

constexpr B2Element b2_add(B2Element x, B2Element y) {
    return detail::add_table[static_cast<std::size_t>(x)]
                            [static_cast<std::size_t>(y)];
}

constexpr B2Element b2_mul(B2Element x, B2Element y) {
    return detail::mul_table[static_cast<std::size_t>(x)]
                            [static_cast<std::size_t>(y)];
}

std::string_view b2_name(B2Element x);

// Inverse of b2_name; throws std::invalid_argument on unknown names.
B2Element b2_from_name(std::string_view name);

class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A total assignment of B2 elements to some set of letters.
class Valuation {
public:
    Valuation() = default;
    explicit Valuation(std::map<Letter, B2Element> assignment)
        : assignment_(std::move(assignment)) {}

    void set(const Letter& l, B2Element v) { assignment_[l] = v; }

    // Throws EvalError when the letter is unassigned.
    B2Element at(const Letter& l) const;

    const std::map<Letter, B2Element>& assignment() const noexcept {
        return assignment_;
    }

    friend auto operator<=>(const Valuation&, const Valuation&) = default;

private:
    std::map<Letter, B2Element> assignment_;
};

// Product of the letter values in order. Stops early once the partial
// product hits zero, which is absorbing.
B2Element eval_word(const Word& w, const Valuation& val);

// Sum of the word values.
B2Element eval_poly(const Polynomial& p, const Valuation& val);

// Whether the identity p = q holds under the valuation.
bool holds(const Polynomial& p, const Polynomial& q, const Valuation& val);

}  // namespace b2sr
