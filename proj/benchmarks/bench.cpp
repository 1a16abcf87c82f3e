#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "b2sr/decision.hpp"
#include "b2sr/derive.hpp"
#include "b2sr/oracle.hpp"
#include "b2sr/proof_checker.hpp"
#include "b2sr/terms.hpp"

namespace {

using namespace b2sr;

std::vector<Letter> pool() {
    return {Letter("x"), Letter("y"), Letter("z")};
}

Word fixed_length_word(std::mt19937& rng, std::size_t n) {
    const auto letters = pool();
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    LetterSeq ls;
    ls.reserve(n);
    for (std::size_t i = 0; i < n; ++i) ls.push_back(letters[pick(rng)]);
    return Word(std::move(ls));
}

Polynomial random_poly(std::mt19937& rng, std::size_t words,
                       std::size_t word_len) {
    std::vector<Word> ws;
    ws.reserve(words);
    for (std::size_t i = 0; i < words; ++i) {
        ws.push_back(fixed_length_word(rng, word_len));
    }
    return Polynomial(std::move(ws));
}

// (xy)^k x: a word equivalent to xyx, growing linearly with k.
Word pump(std::size_t k) {
    LetterSeq ls;
    ls.reserve(2 * k + 1);
    for (std::size_t i = 0; i < k; ++i) {
        ls.push_back(Letter("x"));
        ls.push_back(Letter("y"));
    }
    ls.push_back(Letter("x"));
    return Word(std::move(ls));
}

void BM_decide_single_words(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937 rng(7);
    const Polynomial p = Polynomial::single(fixed_length_word(rng, n));
    const Polynomial q = Polynomial::single(fixed_length_word(rng, n));
    for (auto _ : state) {
        benchmark::DoNotOptimize(decide(p, q).valid);
    }
    state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(BM_decide_single_words)->Range(64, 16384)->Complexity();

void BM_decide_polynomials(benchmark::State& state) {
    const auto words = static_cast<std::size_t>(state.range(0));
    std::mt19937 rng(11);
    const Polynomial p = random_poly(rng, words, 32);
    const Polynomial q = random_poly(rng, words, 32);
    for (auto _ : state) {
        benchmark::DoNotOptimize(decide(p, q).valid);
    }
}
BENCHMARK(BM_decide_polynomials)->Range(4, 256);

void BM_oracle_four_letters(benchmark::State& state) {
    const Polynomial p = parse_polynomial("uxyz + zyxu");
    const Polynomial q = parse_polynomial("uxyz");
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle_check(p, q).holds);
    }
}
BENCHMARK(BM_oracle_four_letters);

void BM_derive_pump(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    const Polynomial goal = parse_polynomial("xyx");
    const Polynomial u = Polynomial::single(pump(k));
    for (auto _ : state) {
        benchmark::DoNotOptimize(derive_inequality(u, goal).nodes.size());
    }
}
BENCHMARK(BM_derive_pump)->Range(2, 128);

void BM_check_pump(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    const Polynomial goal = parse_polynomial("xyx");
    const Polynomial u = Polynomial::single(pump(k));
    const Derivation d = derive_inequality(u, goal);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_derivation(d, u).ok());
    }
}
BENCHMARK(BM_check_pump)->Range(2, 128);

}  // namespace

BENCHMARK_MAIN();
