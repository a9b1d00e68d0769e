#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "thln/graphs.hpp"

using namespace thln;

namespace {

std::vector<Edge> sorted_edges(const CubeGraph& g) { return g.edge_list(); }

void check_structure(const CubeGraph& g) {
  int n = g.n();
  CHECK(g.vertex_count() == (VertexId{1} << n));
  CHECK(g.edge_count() == std::size_t(n) << (n - 1));
  for (VertexId v = 0; v < g.vertex_count(); v++) CHECK((int)g.neighbors(v).size() == n);
  CHECK_NOTHROW(g.validate());
}

std::set<VertexId> neighbor_set(const CubeGraph& g, const char* label) {
  const auto& row = g.neighbors(parse_label(label, g.n()));
  return {row.begin(), row.end()};
}

}  // namespace

TEST_CASE("base 3-D graph matches the canonical drawing") {
  CubeGraph g = base_thln3();
  CHECK(sorted_edges(g) == fixtures::parse_edges(fixtures::cq3(), 3));
  for (VertexId v = 0; v < 8; v++) CHECK(g.neighbors(v).size() == 3);
  // One edge joins labels two bit flips apart, so this is not the binary cube.
  CHECK(g.has_edge(parse_label("001", 3), parse_label("111", 3)));
}

TEST_CASE("compose joins two halves through a matching") {
  std::vector<VertexId> identity(8);
  for (VertexId i = 0; i < 8; i++) identity[i] = i;

  CubeGraph g = compose(base_thln3(), base_thln3(), identity);
  CHECK(g.n() == 4);
  CHECK(g.vertex_count() == 16);
  CHECK(g.edge_count() == 32);
  check_structure(g);

  SUBCASE("the drawn 4-D matching reproduces the 4-D crossed cube") {
    CubeGraph fig = compose(base_thln3(), base_thln3(), fixtures::fig1b_phi());
    CHECK(same_edge_set(fig, crossed_cube(4)));
  }
  SUBCASE("non-injective phi is rejected") {
    std::vector<VertexId> squash(8, 0);
    CHECK_THROWS_AS(compose(base_thln3(), base_thln3(), squash), Error);
    try {
      compose(base_thln3(), base_thln3(), squash);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::not_a_bijection);
    }
  }
  SUBCASE("dimension mismatch is rejected") {
    try {
      compose(crossed_cube(4), base_thln3(), identity);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::dimension_mismatch);
    }
  }
}

TEST_CASE("crossed cube fixtures") {
  CHECK(sorted_edges(crossed_cube(3)) == fixtures::parse_edges(fixtures::cq3(), 3));
  CHECK(sorted_edges(crossed_cube(4)) == fixtures::parse_edges(fixtures::cq4(), 4));

  CubeGraph g5 = crossed_cube(5);
  CHECK(g5.vertex_count() == 32);
  CHECK(g5.edge_count() == 80);
  check_structure(g5);

  CubeGraph g4 = crossed_cube(4);
  CHECK(cross_neighbor(g4, parse_label("0010", 4)) == parse_label("1010", 4));
  CHECK(cross_neighbor(g4, parse_label("0011", 4)) == parse_label("1001", 4));
  CHECK(cross_neighbor(g4, parse_label("0000", 4)) == parse_label("1000", 4));
  CHECK(cross_neighbor(g4, parse_label("0110", 4)) == parse_label("1110", 4));

  try {
    crossed_cube(2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::dimension_too_small);
  }
}

TEST_CASE("locally twisted cube fixtures") {
  CubeGraph g3 = locally_twisted_cube(3);
  CHECK(sorted_edges(g3) == fixtures::parse_edges(fixtures::ltq3(), 3));
  CHECK(neighbor_set(g3, "000") == std::set<VertexId>{parse_label("001", 3), parse_label("010", 3),
                                                      parse_label("100", 3)});
  CHECK(g3.has_edge(parse_label("110", 3), parse_label("111", 3)));

  CubeGraph g4 = locally_twisted_cube(4);
  CHECK(sorted_edges(g4) == fixtures::parse_edges(fixtures::ltq4(), 4));
  check_structure(g4);
}

TEST_CASE("mobius cube fixtures") {
  CubeGraph m03 = mobius_cube(3, 0);
  CHECK(sorted_edges(m03) == fixtures::parse_edges(fixtures::mq0_3(), 3));
  CHECK(neighbor_set(m03, "000") == std::set<VertexId>{parse_label("001", 3), parse_label("010", 3),
                                                       parse_label("100", 3)});
  CHECK(m03.has_edge(parse_label("001", 3), parse_label("101", 3)));

  CHECK(sorted_edges(mobius_cube(3, 1)) == fixtures::parse_edges(fixtures::mq1_3(), 3));
  CHECK(sorted_edges(mobius_cube(4, 0)) == fixtures::parse_edges(fixtures::mq0_4(), 4));
  CHECK(sorted_edges(mobius_cube(4, 1)) == fixtures::parse_edges(fixtures::mq1_4(), 4));
  CHECK_FALSE(same_edge_set(mobius_cube(4, 0), mobius_cube(4, 1)));
}

TEST_CASE("twisted cube fixtures") {
  CubeGraph g3 = twisted_cube(3);
  CHECK(sorted_edges(g3) == fixtures::parse_edges(fixtures::tq3(), 3));
  CHECK(g3.has_edge(parse_label("101", 3), parse_label("100", 3)));
  CHECK(g3.has_edge(parse_label("010", 3), parse_label("110", 3)));

  CubeGraph g5 = twisted_cube(5);
  CHECK(sorted_edges(g5) == fixtures::parse_edges(fixtures::tq5(), 5));
  CHECK(g5.vertex_count() == 32);
  check_structure(g5);

  try {
    twisted_cube(4);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::even_dimension);
  }
  try {
    twisted_cube(1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::dimension_too_small);
  }
}

TEST_CASE("split exposes the two halves") {
  CubeGraph g = crossed_cube(4);
  auto [left, right] = split(g);

  for (VertexId v = 0; v < 8; v++) {
    CHECK(left.to_parent(v) == v);           // prefix 0
    CHECK(right.to_parent(v) == v + 8);      // prefix 1
  }
  CHECK(sorted_edges(left.graph()) == sorted_edges(crossed_cube(3)));
  for (VertexId v = 0; v < 8; v++) CHECK(g.side_of(left.cross_neighbor(v)) == 1);

  SUBCASE("cross neighbor is an involution") {
    for (int n = 4; n <= 6; n++) {
      CubeGraph h = crossed_cube(n);
      for (VertexId v = 0; v < h.vertex_count(); v++)
        CHECK(cross_neighbor(h, cross_neighbor(h, v)) == v);
    }
    CubeGraph t = twisted_cube(5);
    for (VertexId v = 0; v < t.vertex_count(); v++)
      CHECK(cross_neighbor(t, cross_neighbor(t, v)) == v);
  }
  SUBCASE("3-D graphs cannot split") {
    try {
      split(base_thln3());
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::dimension_too_small);
    }
  }
  SUBCASE("recompose reproduces the parent") {
    for (const CubeGraph& h :
         {crossed_cube(5), locally_twisted_cube(5), mobius_cube(5, 1), twisted_cube(5)}) {
      CubeGraph again =
          compose_at(h.half(0), h.half(1), h.phi_local(), h.split_axis(), h.variant());
      CHECK(same_edge_set(again, h));
    }
  }
}

TEST_CASE("structural invariants across variants and sizes") {
  for (int n = 3; n <= 8; n++) {
    check_structure(crossed_cube(n));
    check_structure(locally_twisted_cube(n));
    check_structure(mobius_cube(n, 0));
    check_structure(mobius_cube(n, 1));
    if (n % 2 == 1) check_structure(twisted_cube(n));
  }
  check_structure(random_generic_thln(6, 7));
  check_structure(random_generic_thln(5, 1234567));
}

TEST_CASE("cross edges form a perfect matching") {
  for (const CubeGraph& g : {crossed_cube(6), locally_twisted_cube(5), mobius_cube(5, 1),
                             twisted_cube(5), random_generic_thln(5, 99)}) {
    auto cross = g.cross_edges();
    CHECK(cross.size() == g.vertex_count() / 2);
    std::set<VertexId> touched;
    for (const Edge& e : cross) {
      CHECK(g.side_of(e.a) != g.side_of(e.b));
      touched.insert(e.a);
      touched.insert(e.b);
    }
    CHECK(touched.size() == g.vertex_count());
  }
}

TEST_CASE("all six 3-D variants are the same graph up to relabeling") {
  std::vector<CubeGraph> graphs;
  graphs.push_back(base_thln3());
  graphs.push_back(crossed_cube(3));
  graphs.push_back(locally_twisted_cube(3));
  graphs.push_back(mobius_cube(3, 0));
  graphs.push_back(mobius_cube(3, 1));
  graphs.push_back(twisted_cube(3));
  for (std::size_t i = 0; i < graphs.size(); i++)
    for (std::size_t j = i + 1; j < graphs.size(); j++) CHECK(brute_isomorphic(graphs[i], graphs[j]));
}

TEST_CASE("edge-list import rebuilds the decomposition") {
  for (const CubeGraph& g :
       {crossed_cube(5), twisted_cube(5), random_generic_thln(5, 42)}) {
    CubeGraph back = graph_from_edges(g.n(), g.variant(), g.edge_list());
    CHECK(same_edge_set(back, g));
    CHECK_NOTHROW(back.validate());
  }
  // A graph that is no THLN at all: the 4-bit binary cube has no leaf
  // isomorphic to the twisted 3-D graph.
  std::vector<Edge> q4;
  for (VertexId v = 0; v < 16; v++)
    for (int b = 0; b < 4; b++)
      if (v < (v ^ (1u << b))) q4.emplace_back(v, v ^ (1u << b));
  CHECK_THROWS_AS(graph_from_edges(4, Variant::generic_thln, q4), Error);
}
