#include <doctest.h>

#include <set>
#include <tuple>

#include "b2sr/rho.hpp"
#include "support.hpp"

using namespace b2sr;
using ts::L;
using ts::P;

namespace {

Position hd(const char* l) { return Position{L(l), Side::head}; }
Position tl(const char* l) { return Position{L(l), Side::tail}; }

}  // namespace

TEST_CASE("positions print and order canonically") {
  CHECK(hd("x").str() == "x:1");
  CHECK(tl("x").str() == "x:2");
  CHECK(hd("x") < tl("x"));
  CHECK(tl("x") < hd("y"));
}

TEST_CASE("partition of a single two letter word") {
  const RhoPartition part = build_rho(P("xy"));
  REQUIRE(part.class_count() == 3);
  CHECK(part.class_members(0) == std::vector<Position>{hd("x")});
  CHECK(part.class_members(1) == std::vector<Position>{tl("x"), hd("y")});
  CHECK(part.class_members(2) == std::vector<Position>{tl("y")});
  CHECK(part.init_class() == 0);
  CHECK(part.term_class() == 2);
  CHECK(part.representative(1) == tl("x"));
  CHECK(part.same_class(tl("x"), hd("y")));
  CHECK(!part.same_class(hd("x"), tl("y")));
  CHECK_THROWS_AS(part.class_of(hd("q")), std::invalid_argument);
}

TEST_CASE("a commuting pair of squares collapses to one class") {
  const RhoPartition part = build_rho(P("xxyy + yyxx"));
  CHECK(part.class_count() == 1);
  CHECK(part.init_class() == 0);
  CHECK(part.term_class() == 0);
}

TEST_CASE("generating pairs list every forced identification") {
  const auto pairs = generating_pairs(P("xy + xz"));
  std::set<std::tuple<std::string, std::string, std::string_view>> got;
  for (const GeneratorPair& gp : pairs) {
    got.insert({gp.a.str(), gp.b.str(), rho_rel_name(gp.rel)});
  }
  const std::set<std::tuple<std::string, std::string, std::string_view>> want{
      {"x:1", "x:1", "rho1"}, {"y:2", "y:2", "rho2"}, {"y:2", "z:2", "rho2"},
      {"z:2", "z:2", "rho2"}, {"x:2", "y:1", "rho3"}, {"x:2", "z:1", "rho3"},
  };
  CHECK(got == want);
  CHECK(pairs.size() == 6);
}

TEST_CASE("relation names") {
  CHECK(rho_rel_name(RhoRel::first_letters) == "rho1");
  CHECK(rho_rel_name(RhoRel::last_letters) == "rho2");
  CHECK(rho_rel_name(RhoRel::adjacency) == "rho3");
}

TEST_CASE("partitions_equal compares the induced equivalences") {
  const RhoPartition a = build_rho(P("xy"));
  CHECK(partitions_equal(a, build_rho(P("xy"))));
  CHECK(!partitions_equal(a, build_rho(P("yx"))));
  CHECK_THROWS_AS(partitions_equal(a, build_rho(P("xz"))),
                  std::invalid_argument);
}

TEST_CASE("connection paths walk the generator graph") {
  const Polynomial p = P("xy + xz");
  const auto path = connection_path(p, hd("y"), hd("z"));
  CHECK(path == std::vector<Position>{hd("y"), tl("x"), hd("z")});

  const auto self = connection_path(p, hd("y"), hd("y"));
  CHECK(self == std::vector<Position>{hd("y")});

  CHECK_THROWS_AS(connection_path(P("xy"), hd("x"), tl("y")),
                  std::invalid_argument);
}

TEST_CASE("edge relations follow the side pattern") {
  CHECK(GeneratorGraph::edge_relation(hd("x"), hd("y")) ==
        RhoRel::first_letters);
  CHECK(GeneratorGraph::edge_relation(tl("x"), tl("y")) ==
        RhoRel::last_letters);
  CHECK(GeneratorGraph::edge_relation(tl("x"), hd("y")) == RhoRel::adjacency);
  CHECK(GeneratorGraph::edge_relation(hd("x"), tl("y")) == RhoRel::adjacency);
}

TEST_CASE("every path edge joins equivalent positions by a named relation") {
  const Polynomial p = P("ac + ad + ca + dx");
  const RhoPartition part = build_rho(p);
  const auto path = connection_path(p, hd("a"), hd("x"));
  CHECK(path == std::vector<Position>{hd("a"), tl("c"), tl("d"), hd("x")});
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    CHECK(part.same_class(path[i], path[i + 1]));
  }
  CHECK(GeneratorGraph::edge_relation(path[1], path[2]) ==
        RhoRel::last_letters);
}

TEST_CASE("partition agrees with a naive closure on random polynomials") {
  std::mt19937 rng(20240817);
  const std::vector<Letter> alpha{L("x"), L("y"), L("z")};
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial p = ts::random_poly(rng, alpha, 3, 4);
    const RhoPartition part = build_rho(p);
    const ts::NaiveRho naive = ts::naive_rho(p);
    REQUIRE(part.class_count() == static_cast<std::size_t>(naive.class_count));
    for (const Position& pos : part.positions()) {
      CHECK(part.class_of(pos) ==
            static_cast<std::size_t>(naive.cls.at(pos)));
    }
    CHECK(part.init_class() == static_cast<std::size_t>(naive.init_cls));
    CHECK(part.term_class() == static_cast<std::size_t>(naive.term_cls));
  }
}

TEST_CASE("positions enumerate letter major with head before tail") {
  const RhoPartition part = build_rho(P("yx + z"));
  const std::vector<Position> want{hd("x"), tl("x"), hd("y"),
                                   tl("y"), hd("z"), tl("z")};
  CHECK(part.positions() == want);
  CHECK(part.letters() == std::vector<Letter>{L("x"), L("y"), L("z")});
}
