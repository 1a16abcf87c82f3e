#include "b2sr/b2.hpp"

namespace b2sr {

std::string_view b2_name(B2Element x) {
    switch (x) {
        case B2Element::zero: return "0";
        case B2Element::e11: return "e11";
        case B2Element::e12: return "e12";
        case B2Element::e21: return "e21";
        case B2Element::e22: return "e22";
    }
    throw std::logic_error("corrupt B2Element");
}

B2Element b2_from_name(std::string_view name) {
    if (name == "0") return B2Element::zero;
    if (name == "e11") return B2Element::e11;
    if (name == "e12") return B2Element::e12;
    if (name == "e21") return B2Element::e21;
    if (name == "e22") return B2Element::e22;
    throw std::invalid_argument("unknown element name: \"" +
                                std::string(name) + '"');
}

B2Element Valuation::at(const Letter& l) const {
    auto it = assignment_.find(l);
    if (it == assignment_.end()) {
        throw EvalError("letter " + l.symbol() + " has no assigned value");
    }
    return it->second;
}

B2Element eval_word(const Word& w, const Valuation& val) {
    B2Element acc = val.at(w.first());
    for (std::size_t i = 1; i < w.size() && acc != B2Element::zero; ++i) {
        acc = b2_mul(acc, val.at(w.letters()[i]));
    }
    return acc;
}

B2Element eval_poly(const Polynomial& p, const Valuation& val) {
    B2Element acc = eval_word(p.words().front(), val);
    for (std::size_t i = 1; i < p.size(); ++i) {
        acc = b2_add(acc, eval_word(p.words()[i], val));
    }
    return acc;
}

bool holds(const Polynomial& p, const Polynomial& q, const Valuation& val) {
    return eval_poly(p, val) == eval_poly(q, val);
}

}  // namespace b2sr
