#include "b2sr/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>

namespace b2sr {

namespace {

// Words compiled to letter indices into a flat digit array.
struct Compiled {
    std::vector<Letter> letters;
    std::vector<std::vector<std::size_t>> p_words;
    std::vector<std::vector<std::size_t>> q_words;
};

std::vector<std::size_t> compile_word(const Word& w,
                                      const std::vector<Letter>& letters) {
    std::vector<std::size_t> out;
    out.reserve(w.size());
    for (const Letter& l : w.letters()) {
        out.push_back(static_cast<std::size_t>(
            std::lower_bound(letters.begin(), letters.end(), l) -
            letters.begin()));
    }
    return out;
}

B2Element eval_compiled_word(const std::vector<std::size_t>& w,
                             const B2Element* digits) {
    B2Element acc = digits[w[0]];
    for (std::size_t i = 1; i < w.size() && acc != B2Element::zero; ++i) {
        acc = b2_mul(acc, digits[w[i]]);
    }
    return acc;
}

B2Element eval_compiled_poly(const std::vector<std::vector<std::size_t>>& ws,
                             const B2Element* digits) {
    B2Element acc = eval_compiled_word(ws[0], digits);
    for (std::size_t i = 1; i < ws.size(); ++i) {
        acc = b2_add(acc, eval_compiled_word(ws[i], digits));
    }
    return acc;
}

// Decode enumeration index v into the digit array: the first letter is
// the most significant base five digit.
void decode(std::uint64_t v, std::vector<B2Element>& digits) {
    for (std::size_t i = digits.size(); i-- > 0;) {
        digits[i] = static_cast<B2Element>(v % 5);
        v /= 5;
    }
}

// Advance the digit array by one, last letter fastest. Returns false on
// wraparound past the final valuation.
bool advance(std::vector<B2Element>& digits) {
    for (std::size_t i = digits.size(); i-- > 0;) {
        auto d = static_cast<std::uint8_t>(digits[i]);
        if (d < 4) {
            digits[i] = static_cast<B2Element>(d + 1);
            return true;
        }
        digits[i] = B2Element::zero;
    }
    return false;
}

// Least refuting index in [lo, hi), or UINT64_MAX. Stops as soon as the
// local index can no longer beat the best found by lower chunks.
std::uint64_t scan_chunk(const Compiled& c, std::uint64_t lo,
                         std::uint64_t hi,
                         std::atomic<std::uint64_t>& global_best) {
    std::vector<B2Element> digits(c.letters.size());
    decode(lo, digits);
    for (std::uint64_t v = lo; v < hi; ++v) {
        if (v >= global_best.load(std::memory_order_relaxed)) {
            return UINT64_MAX;
        }
        if (eval_compiled_poly(c.p_words, digits.data()) !=
            eval_compiled_poly(c.q_words, digits.data())) {
            std::uint64_t cur = global_best.load(std::memory_order_relaxed);
            while (v < cur && !global_best.compare_exchange_weak(
                                  cur, v, std::memory_order_relaxed)) {
            }
            return v;
        }
        advance(digits);
    }
    return UINT64_MAX;
}

}  // namespace

OracleResult oracle_check(const Polynomial& p, const Polynomial& q,
                          const OracleOptions& opts) {
    Compiled c;
    {
        std::set<Letter> joint = p.content();
        for (const Letter& l : q.content()) joint.insert(l);
        c.letters.assign(joint.begin(), joint.end());
    }
    // 5^28 overflows 64 bits; anything near that is hopeless anyway.
    std::size_t hard_cap = std::min<std::size_t>(opts.max_letters, 27);
    if (c.letters.size() > hard_cap) {
        std::ostringstream msg;
        msg << "refusing exhaustive check over " << c.letters.size()
            << " letters (limit " << hard_cap << ", 5^n valuations)";
        throw OracleRefusal(msg.str());
    }
    for (const Word& w : p.words()) {
        c.p_words.push_back(compile_word(w, c.letters));
    }
    for (const Word& w : q.words()) {
        c.q_words.push_back(compile_word(w, c.letters));
    }

    std::uint64_t total = 1;
    for (std::size_t i = 0; i < c.letters.size(); ++i) total *= 5;

    std::atomic<std::uint64_t> best{UINT64_MAX};
    std::size_t threads = std::max<std::size_t>(1, opts.threads);
    threads = static_cast<std::size_t>(
        std::min<std::uint64_t>(threads, total));
    if (threads == 1) {
        scan_chunk(c, 0, total, best);
    } else {
        std::uint64_t chunk = (total + threads - 1) / threads;
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t) {
            std::uint64_t lo = t * chunk;
            std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, total);
            if (lo >= hi) break;
            pool.emplace_back([&c, lo, hi, &best] {
                scan_chunk(c, lo, hi, best);
            });
        }
        for (auto& th : pool) th.join();
    }

    OracleResult result;
    std::uint64_t found = best.load();
    if (found == UINT64_MAX) {
        result.holds = true;
        result.valuations = total;
    } else {
        result.holds = false;
        result.valuations = found + 1;
        std::vector<B2Element> digits(c.letters.size());
        decode(found, digits);
        Valuation val;
        for (std::size_t i = 0; i < c.letters.size(); ++i) {
            val.set(c.letters[i], digits[i]);
        }
        result.counterexample = std::move(val);
    }
    return result;
}

const std::vector<Letter>& enumeration_alphabet() {
    static const std::vector<Letter> pool = [] {
        std::vector<Letter> out;
        for (const char* s : {"x", "y", "z", "u", "v", "w", "s", "t"}) {
            out.push_back(Letter(s));
        }
        return out;
    }();
    return pool;
}

std::vector<Word> enumerate_words(std::size_t alphabet, std::size_t max_len) {
    const std::vector<Letter>& pool = enumeration_alphabet();
    if (alphabet == 0 || alphabet > pool.size()) {
        throw std::invalid_argument("alphabet size out of range");
    }
    std::vector<Letter> letters(pool.begin(), pool.begin() + alphabet);
    std::sort(letters.begin(), letters.end());

    std::vector<Word> out;
    std::vector<Letter> cur;
    auto rec = [&](auto&& self) -> void {
        if (!cur.empty()) out.push_back(Word(cur));
        if (cur.size() == max_len) return;
        for (const Letter& l : letters) {
            cur.push_back(l);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Polynomial> enumerate_polynomials(const std::vector<Word>& words,
                                              std::size_t max_summands) {
    std::vector<Polynomial> out;
    std::vector<Word> chosen;
    auto rec = [&](auto&& self, std::size_t start, std::size_t want) -> void {
        if (want == 0) {
            out.push_back(Polynomial(chosen));
            return;
        }
        for (std::size_t i = start; i + want <= words.size(); ++i) {
            chosen.push_back(words[i]);
            self(self, i + 1, want - 1);
            chosen.pop_back();
        }
    };
    for (std::size_t k = 1; k <= max_summands && k <= words.size(); ++k) {
        rec(rec, 0, k);
    }
    return out;
}

void for_each_identity(
    std::size_t alphabet, std::size_t max_len, std::size_t max_summands,
    const std::function<void(const Polynomial&, const Polynomial&)>& fn) {
    std::vector<Polynomial> polys =
        enumerate_polynomials(enumerate_words(alphabet, max_len),
                              max_summands);
    for (const Polynomial& p : polys) {
        for (const Polynomial& q : polys) {
            fn(p, q);
        }
    }
}

}  // namespace b2sr
