#include <doctest.h>

#include "b2sr/derive.hpp"
#include "b2sr/proof_checker.hpp"
#include "support.hpp"

using namespace b2sr;
using ts::L;
using ts::P;
using ts::W;

namespace {

AxiomInstance rook_abcd() {
  auto inst = AxiomInstance::make(
      AxiomName::rook, {parse_letter_seq("a"), parse_letter_seq("b"), {},
                        parse_letter_seq("c"), parse_letter_seq("d")});
  REQUIRE(inst.has_value());
  return *inst;
}

// goal xxx, counterpart xx: one summand feeding one crossing step
Derivation strip_fixture() {
  return derive_inequality(P("xx"), P("xxx"));
}

}  // namespace

TEST_CASE("instances rebuild from their substitution") {
  const AxiomInstance rook = rook_abcd();
  CHECK(rook.lhs == W("bd"));
  CHECK(rook.rhs == P("ac + ad + bc"));
  CHECK(check_instance(rook).empty());

  auto crossing = AxiomInstance::make(
      AxiomName::crossing, {parse_letter_seq("a"), parse_letter_seq("b"),
                            parse_letter_seq("y"), parse_letter_seq("c"),
                            parse_letter_seq("d")});
  REQUIRE(crossing.has_value());
  CHECK(crossing->lhs == W("ayd"));
  CHECK(crossing->rhs == P("ayc + byd"));
  CHECK(check_instance(*crossing).empty());
}

TEST_CASE("instances with the wrong shape are refused at creation") {
  // crossing needs a nonempty middle
  CHECK(!AxiomInstance::make(AxiomName::crossing,
                             {parse_letter_seq("a"), parse_letter_seq("b"),
                              {}, parse_letter_seq("c"),
                              parse_letter_seq("d")})
             .has_value());
  // rook forbids a middle
  CHECK(!AxiomInstance::make(AxiomName::rook,
                             {parse_letter_seq("a"), parse_letter_seq("b"),
                              parse_letter_seq("y"), parse_letter_seq("c"),
                              parse_letter_seq("d")})
             .has_value());
  // every produced word must be nonempty
  CHECK(!AxiomInstance::make(AxiomName::rook, {{}, {}, {}, {}, {}})
             .has_value());
  CHECK(!AxiomInstance::make(AxiomName::rook,
                             {parse_letter_seq("a"), {}, {}, {},
                              parse_letter_seq("d")})
             .has_value());
}

TEST_CASE("tampered instances are caught by the checker") {
  AxiomInstance bad_lhs = rook_abcd();
  bad_lhs.lhs = W("bc");
  CHECK(!check_instance(bad_lhs).empty());

  AxiomInstance bad_rhs = rook_abcd();
  bad_rhs.rhs = P("ac + ad");
  CHECK(!check_instance(bad_rhs).empty());

  AxiomInstance bad_subst = rook_abcd();
  bad_subst.subst.z2 = parse_letter_seq("c");
  CHECK(!check_instance(bad_subst).empty());

  AxiomInstance bad_shape = rook_abcd();
  bad_shape.subst.y = parse_letter_seq("w");
  CHECK(!check_instance(bad_shape).empty());
}

TEST_CASE("the checker accepts engine output") {
  const Derivation d = strip_fixture();
  CHECK(check_derivation(d, P("xx")).ok());
  const DerivationPair pair = derive_identity(P("xxyy"), P("yyxx"));
  CHECK(check_derivation(pair.forward, P("xxyy")).ok());
  CHECK(check_derivation(pair.backward, P("yyxx")).ok());
}

TEST_CASE("an altered substitution no longer matches the stored sides") {
  Derivation d = strip_fixture();
  bool mutated = false;
  for (DerivationNode& n : d.nodes) {
    if (n.rule == Rule::axiom) {
      n.instance->subst.x2 = parse_letter_seq("x");
      mutated = true;
    }
  }
  REQUIRE(mutated);
  CHECK(!check_derivation(d, P("xx")).ok());
}

TEST_CASE("a dropped premise breaks the sum") {
  Derivation d = derive_first_letter(P("ab + za + zx"), L("x"));
  bool mutated = false;
  for (DerivationNode& n : d.nodes) {
    if (n.rule == Rule::sum && n.premises.size() > 1 && !mutated) {
      n.premises.pop_back();
      mutated = true;
    }
  }
  REQUIRE(mutated);
  const CheckResult res = check_derivation(d, P("x"));
  CHECK(!res.ok());
}

TEST_CASE("an altered conclusion is rejected") {
  Derivation d = strip_fixture();
  d.nodes.back().conclusion = P("xxx");
  CHECK(!check_derivation(d, P("xx")).ok());
}

TEST_CASE("axiom nodes need exactly one matching premise") {
  Derivation d = strip_fixture();
  d.nodes.back().premises.clear();
  CHECK(!check_derivation(d, P("xx")).ok());
}

TEST_CASE("a premise cycle is rejected") {
  const Polynomial goal = P("x + y");
  const DerivationNode a{0, P("x"), Rule::summand, {}, {}};
  const DerivationNode b{1, P("x + y"), Rule::sum, {0, 2}, {}};
  const DerivationNode c{2, P("x + y"), Rule::sum, {1, 0}, {}};
  const Derivation d{goal, {a, b, c}, {1}};
  const CheckResult res = check_derivation(d, goal);
  REQUIRE(!res.ok());
  bool mentions_cycle = false;
  for (const CheckFailure& f : res.failures) {
    if (f.reason.find("cycl") != std::string::npos) mentions_cycle = true;
  }
  CHECK(mentions_cycle);
}

TEST_CASE("ids must equal indices") {
  Derivation d = strip_fixture();
  d.nodes[0].id = 42;
  CHECK(!check_derivation(d, P("xx")).ok());
}

TEST_CASE("premises and roots must resolve") {
  Derivation d1 = strip_fixture();
  d1.nodes.back().premises = {99};
  CHECK(!check_derivation(d1, P("xx")).ok());

  Derivation d2 = strip_fixture();
  d2.roots = {99};
  const CheckResult res2 = check_derivation(d2, P("xx"));
  REQUIRE(!res2.ok());
  CHECK(res2.failures.front().node_id == check_no_node);

  Derivation d3 = strip_fixture();
  d3.roots.clear();
  CHECK(!check_derivation(d3, P("xx")).ok());
}

TEST_CASE("the roots must cover the counterpart") {
  const Derivation d = strip_fixture();
  CHECK(check_derivation(d, P("xx")).ok());
  const CheckResult res = check_derivation(d, P("x + xx"));
  REQUIRE(!res.ok());
  CHECK(res.failures.front().node_id == check_no_node);
  CHECK(res.failures.front().reason.find("x") != std::string::npos);
}

TEST_CASE("rules must not carry foreign payload") {
  Derivation d1 = strip_fixture();
  for (DerivationNode& n : d1.nodes) {
    if (n.rule == Rule::summand) n.instance = rook_abcd();
  }
  CHECK(!check_derivation(d1, P("xx")).ok());

  Derivation d2 = strip_fixture();
  for (DerivationNode& n : d2.nodes) {
    if (n.rule == Rule::summand) n.premises = {0};
  }
  CHECK(!check_derivation(d2, P("xx")).ok());
}

TEST_CASE("summands must come from the goal") {
  Derivation d = strip_fixture();
  for (DerivationNode& n : d.nodes) {
    if (n.rule == Rule::summand) n.conclusion = P("yy");
  }
  CHECK(!check_derivation(d, P("xx")).ok());
}

TEST_CASE("an empty derivation proves nothing") {
  const Derivation d{P("x"), {}, {}};
  CHECK(!check_derivation(d, P("x")).ok());
}
