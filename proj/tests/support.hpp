// Shared test helpers. Everything here is deliberately naive: the point is to
// cross-check the library against independent reimplementations, so nothing
// in this file may call the code path it is used to check.
#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "b2sr/b2.hpp"
#include "b2sr/proof.hpp"
#include "b2sr/rho.hpp"
#include "b2sr/terms.hpp"

namespace ts {

using namespace b2sr;

inline Letter L(const std::string& s) { return Letter(s); }

inline Word W(const std::string& s) { return Word(parse_letter_seq(s)); }

inline Polynomial P(const std::string& s) { return parse_polynomial(s); }

inline Valuation V(
    std::initializer_list<std::pair<const char*, B2Element>> entries) {
  Valuation v;
  for (const auto& [name, elem] : entries) v.set(Letter(name), elem);
  return v;
}

// Exhaustive model check by plain recursion over the joint alphabet. The
// letters vary in sorted order with the first letter outermost, so the first
// counterexample found here must coincide with the library oracle's.
struct NaiveOracleResult {
  bool holds = true;
  std::optional<Valuation> counterexample;
};

inline NaiveOracleResult naive_oracle(const Polynomial& p,
                                      const Polynomial& q) {
  std::set<Letter> joint = p.content();
  for (const Letter& l : q.content()) joint.insert(l);
  std::vector<Letter> letters(joint.begin(), joint.end());

  Valuation val;
  std::function<std::optional<Valuation>(std::size_t)> rec =
      [&](std::size_t i) -> std::optional<Valuation> {
    if (i == letters.size()) {
      if (eval_poly(p, val) != eval_poly(q, val)) return val;
      return std::nullopt;
    }
    for (int e = 0; e < static_cast<int>(b2_card); ++e) {
      val.set(letters[i], static_cast<B2Element>(e));
      if (auto r = rec(i + 1)) return r;
    }
    return std::nullopt;
  };

  NaiveOracleResult out;
  out.counterexample = rec(0);
  out.holds = !out.counterexample.has_value();
  return out;
}

// Connectedness closure rebuilt from the raw definition: every pair of first
// letters, every pair of last letters, every adjacent factor, closed by flood
// fill over an explicit adjacency map. Class ids follow first appearance in
// canonical position order, matching the library's numbering convention.
struct NaiveRho {
  std::map<Position, int> cls;
  int class_count = 0;
  int init_cls = -1;
  int term_cls = -1;
};

inline NaiveRho naive_rho(const Polynomial& p) {
  std::map<Position, std::set<Position>> adj;
  auto link = [&](const Position& a, const Position& b) {
    adj[a].insert(b);
    adj[b].insert(a);
  };
  for (const Word& w1 : p.words()) {
    for (const Word& w2 : p.words()) {
      link({w1.first(), Side::head}, {w2.first(), Side::head});
      link({w1.last(), Side::tail}, {w2.last(), Side::tail});
    }
  }
  for (const Word& w : p.words()) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      link({w.letters()[i], Side::tail}, {w.letters()[i + 1], Side::head});
    }
  }

  std::vector<Position> all;
  for (const Letter& l : p.content()) {
    all.push_back({l, Side::head});
    all.push_back({l, Side::tail});
  }

  NaiveRho out;
  for (const Position& seed : all) {
    if (out.cls.count(seed)) continue;
    const int id = out.class_count++;
    std::vector<Position> stack{seed};
    out.cls[seed] = id;
    while (!stack.empty()) {
      Position cur = stack.back();
      stack.pop_back();
      for (const Position& nb : adj[cur]) {
        if (!out.cls.count(nb)) {
          out.cls[nb] = id;
          stack.push_back(nb);
        }
      }
    }
  }
  out.init_cls = out.cls.at({p.words().front().first(), Side::head});
  out.term_cls = out.cls.at({p.words().front().last(), Side::tail});
  return out;
}

inline Word random_word(std::mt19937& rng, const std::vector<Letter>& alpha,
                        std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len_d(1, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alpha.size() - 1);
  LetterSeq ls;
  const std::size_t n = len_d(rng);
  for (std::size_t i = 0; i < n; ++i) ls.push_back(alpha[pick(rng)]);
  return Word(ls);
}

inline Polynomial random_poly(std::mt19937& rng,
                              const std::vector<Letter>& alpha,
                              std::size_t max_words, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> cnt(1, max_words);
  std::vector<Word> ws;
  const std::size_t n = cnt(rng);
  for (std::size_t i = 0; i < n; ++i)
    ws.push_back(random_word(rng, alpha, max_len));
  return Polynomial(ws);
}

// Nonempty words over {a, b} of length at most 2: the slot pool for basis
// instantiation sweeps.
inline const std::vector<LetterSeq>& sigma_slot_words() {
  static const std::vector<LetterSeq> ws = [] {
    std::vector<LetterSeq> out;
    for (const char* s : {"a", "b", "aa", "ab", "ba", "bb"})
      out.push_back(parse_letter_seq(s));
    return out;
  }();
  return ws;
}

// Every well-formed instance of both axiom schemes with slots drawn from
// sigma_slot_words() or left empty. Ill-formed substitutions (an empty word
// somewhere, the wrong shape for the middle slot) are skipped because
// AxiomInstance::make refuses them.
inline void for_each_sigma_instance(
    const std::function<void(const AxiomInstance&)>& fn) {
  const auto& ws = sigma_slot_words();
  const std::vector<LetterSeq> empty_only{LetterSeq{}};
  auto slot = [&](bool nonempty) -> const std::vector<LetterSeq>& {
    return nonempty ? ws : empty_only;
  };
  for (int mask = 0; mask < 16; ++mask) {
    for (const LetterSeq& x1 : slot(mask & 1)) {
      for (const LetterSeq& x2 : slot(mask & 2)) {
        for (const LetterSeq& z1 : slot(mask & 4)) {
          for (const LetterSeq& z2 : slot(mask & 8)) {
            AxiomSubstitution rs{x1, x2, {}, z1, z2};
            if (auto inst = AxiomInstance::make(AxiomName::rook, rs))
              fn(*inst);
            for (const LetterSeq& y : ws) {
              AxiomSubstitution cs{x1, x2, y, z1, z2};
              if (auto inst = AxiomInstance::make(AxiomName::crossing, cs))
                fn(*inst);
            }
          }
        }
      }
    }
  }
}

}  // namespace ts
