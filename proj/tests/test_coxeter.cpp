#include <artin/coxeter.hpp>

#include "catch_amalgamated.hpp"
#include "generators.hpp"

#include <map>
#include <random>
#include <set>

using namespace artin;
using testing::make_graph;

namespace {

CoxeterGraph a3() { return make_graph(3, {{0, 1}, {1, 2}}); }

CoxeterGraph b3() {
  CoxeterGraph g({"1", "2", "3"});
  g.set_label(0, 1, Label(4));
  g.set_label(1, 2, Label(3));
  return g;
}

// Connected components of the label-3 edges among `vs`.
std::vector<std::vector<Vertex>> label3_components(CoxeterGraph const& g,
                                                   std::vector<Vertex> const& vs) {
  std::vector<std::vector<Vertex>> out;
  std::set<Vertex>                 seen;
  for (Vertex root : vs) {
    if (seen.count(root)) {
      continue;
    }
    std::vector<Vertex> comp{root};
    seen.insert(root);
    for (std::size_t k = 0; k < comp.size(); ++k) {
      for (Vertex u : vs) {
        if (!seen.count(u) && g.label(comp[k], u) == 3) {
          seen.insert(u);
          comp.push_back(u);
        }
      }
    }
    out.push_back(comp);
  }
  return out;
}

// A simple path: connected, |edges| = |vertices| - 1, every degree <= 2.
bool is_path(CoxeterGraph const& g, std::vector<Vertex> const& comp) {
  std::size_t edges = 0;
  for (Vertex s : comp) {
    std::size_t degree = 0;
    for (Vertex t : comp) {
      if (s != t && g.label(s, t) == 3) {
        ++degree;
      }
    }
    if (degree > 2) {
      return false;
    }
    edges += degree;
  }
  return edges / 2 + 1 == comp.size();
}

// Every structural requirement on a folding of g.
void check_fold_invariants(CoxeterGraph const& g, FoldedGraph const& f) {
  REQUIRE(is_small_type(f.graph));
  REQUIRE(f.blocks.size() == g.size());
  std::size_t n = 1;
  for (Vertex s = 0; s < g.size(); ++s) {
    for (Vertex t = s + 1; t < g.size(); ++t) {
      n = std::lcm(n, static_cast<std::size_t>(g.label(s, t).value() - 1));
    }
  }
  REQUIRE(f.n_value == n);
  std::vector<int> owner(f.graph.size(), -1);
  for (Vertex s = 0; s < g.size(); ++s) {
    REQUIRE(f.blocks[s].size() == n);
    for (Vertex v : f.blocks[s]) {
      REQUIRE(owner[v] == -1);
      owner[v] = static_cast<int>(s);
    }
    for (Vertex u : f.blocks[s]) {
      for (Vertex v : f.blocks[s]) {
        if (u != v) {
          REQUIRE(f.graph.label(u, v) == 2);
        }
      }
    }
  }
  REQUIRE(std::count(owner.begin(), owner.end(), -1) == 0);
  for (Vertex s = 0; s < g.size(); ++s) {
    for (Vertex t = s + 1; t < g.size(); ++t) {
      std::uint32_t m = g.label(s, t).value();
      std::vector<Vertex> both = f.blocks[s];
      both.insert(both.end(), f.blocks[t].begin(), f.blocks[t].end());
      auto comps = label3_components(f.graph, both);
      if (m == 2) {
        REQUIRE(comps.size() == 2 * n);
        continue;
      }
      // (N/(m-1)) copies of Γ(m) = 2N/(m-1) alternating paths of m-1 vertices
      REQUIRE(comps.size() == 2 * n / (m - 1));
      for (auto const& c : comps) {
        REQUIRE(c.size() == m - 1);
        REQUIRE(is_path(f.graph, c));
        for (Vertex u : c) {
          for (Vertex v : c) {
            if (f.graph.label(u, v) == 3) {
              REQUIRE(owner[u] != owner[v]);
            }
          }
        }
      }
    }
  }
}

}  // namespace

TEST_CASE("star lists the label-3 neighbours and the vertex itself", "[coxeter]") {
  auto g = a3();
  CHECK(star(g, 1) == std::vector<Vertex>{0, 1, 2});
  CHECK(star(g, 0) == std::vector<Vertex>{0, 1});
  CHECK(star(CoxeterGraph({"a"}), 0) == std::vector<Vertex>{0});
  CHECK_THROWS_AS(star(g, 3), ContractError);
}

TEST_CASE("relative position within a star", "[coxeter]") {
  auto g = a3();
  CHECK(relative_position(g, 2, 1) == 1);
  CHECK(relative_position(g, 0, 1) == -1);
  for (Vertex s = 0; s < 3; ++s) {
    CHECK(relative_position(g, s, s) == 0);
  }
  CHECK_THROWS_AS(relative_position(g, 2, 0), ContractError);
}

TEST_CASE("star and relative position round trip", "[coxeter][property]") {
  for (auto const& g : testing::connected_catalogue(5)) {
    for (Vertex s = 0; s < g.size(); ++s) {
      auto st   = star(g, s);
      auto self = std::find(st.begin(), st.end(), s) - st.begin();
      for (Vertex t : st) {
        REQUIRE(st[self + relative_position(g, t, s)] == t);
      }
    }
  }
}

TEST_CASE("small type", "[coxeter]") {
  CHECK(is_small_type(a3()));
  CHECK_FALSE(is_small_type(b3()));
  CHECK(is_small_type(CoxeterGraph({"a", "b", "c"})));
  CoxeterGraph g({"a", "b"});
  g.set_label(0, 1, Label::infinity());
  CHECK_FALSE(is_small_type(g));
}

TEST_CASE("components", "[coxeter]") {
  CHECK(components(a3()).size() == 1);
  auto two = components(CoxeterGraph({"a", "b"}));
  REQUIRE(two.size() == 2);
  CHECK(two[0].names() == std::vector<std::string>{"a"});
  CHECK(two[1].names() == std::vector<std::string>{"b"});
  auto gm = components(gamma_m(3).graph);
  REQUIRE(gm.size() == 2);
  CHECK(gm[0].size() == 2);
  CHECK(gm[1].size() == 2);
}

TEST_CASE("components partition the vertices and keep labels",
          "[coxeter][property]") {
  std::mt19937_64 rng(7);
  Label const     choices[] = {Label(2), Label(2), Label(3), Label(4),
                               Label::infinity()};
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t  n = testing::uniform(rng, 1, 6);
    CoxeterGraph g(testing::default_names(n));
    for (Vertex s = 0; s < n; ++s) {
      for (Vertex t = s + 1; t < n; ++t) {
        g.set_label(s, t, choices[testing::uniform(rng, 0, 4)]);
      }
    }
    auto sets  = component_vertex_sets(g);
    auto parts = components(g);
    REQUIRE(sets.size() == parts.size());
    std::vector<int> which(n, -1);
    for (std::size_t c = 0; c < sets.size(); ++c) {
      REQUIRE(is_connected(parts[c]));
      for (std::size_t i = 0; i < sets[c].size(); ++i) {
        REQUIRE(which[sets[c][i]] == -1);
        which[sets[c][i]] = static_cast<int>(c);
        REQUIRE(parts[c].name(i) == g.name(sets[c][i]));
      }
    }
    // Re-glue: every label is either inside one component or equal to 2.
    for (Vertex s = 0; s < n; ++s) {
      for (Vertex t = s + 1; t < n; ++t) {
        if (which[s] != which[t]) {
          REQUIRE(g.label(s, t) == 2);
        } else {
          auto const& vs = sets[which[s]];
          auto i = std::find(vs.begin(), vs.end(), s) - vs.begin();
          auto j = std::find(vs.begin(), vs.end(), t) - vs.begin();
          REQUIRE(parts[which[s]].label(i, j) == g.label(s, t));
        }
      }
    }
  }
}

TEST_CASE("hat relabels infinity as 3 and nothing else", "[coxeter]") {
  CoxeterGraph g({"a", "b", "c"});
  g.set_label(0, 1, Label::infinity());
  g.set_label(1, 2, Label(5));
  auto h = hat(g);
  CHECK(h.label(0, 1) == 3);
  CHECK(h.label(1, 2) == 5);
  CHECK(h.label(0, 2) == 2);
  CHECK(h.names() == g.names());
  CHECK(hat(h) == h);
  CHECK(hat(a3()) == a3());
}

TEST_CASE("gamma_m(3) is two disjoint A_2", "[coxeter]") {
  auto gm = gamma_m(3);
  auto const& g = gm.graph;
  REQUIRE(g.size() == 4);
  CHECK(g.names() == std::vector<std::string>{"i1", "i2", "j1", "j2"});
  std::set<std::pair<std::string, std::string>> edges;
  for (Vertex s = 0; s < 4; ++s) {
    for (Vertex t = s + 1; t < 4; ++t) {
      if (g.label(s, t) == 3) {
        edges.emplace(g.name(s), g.name(t));
      }
    }
  }
  CHECK(edges == std::set<std::pair<std::string, std::string>>{
                     {"i1", "j1"}, {"i2", "j2"}});
  auto comps = component_vertex_sets(g);
  REQUIRE(comps.size() == 2);
  for (auto const& c : comps) {
    CHECK(c.size() == 2);
    CHECK(is_path(g, c));
  }
}

TEST_CASE("gamma_m(4) is two disjoint A_3", "[coxeter]") {
  auto const& g = gamma_m(4).graph;
  REQUIRE(g.size() == 6);
  auto e = [&](char const* s, char const* t) {
    return g.label(g.vertex(s), g.vertex(t)) == 3;
  };
  CHECK(e("i1", "j1"));
  CHECK(e("j1", "i2"));
  CHECK(e("j2", "i3"));
  CHECK(e("i3", "j3"));
  std::size_t count = 0;
  for (Vertex s = 0; s < 6; ++s) {
    for (Vertex t = s + 1; t < 6; ++t) {
      count += g.label(s, t) == 3;
    }
  }
  CHECK(count == 4);
  auto comps = component_vertex_sets(g);
  REQUIRE(comps.size() == 2);
  for (auto const& c : comps) {
    CHECK(c.size() == 3);
    CHECK(is_path(g, c));
  }
}

TEST_CASE("gamma_m is small type, bipartite, with 2(m-2) edges",
          "[coxeter][property]") {
  for (std::uint32_t m = 3; m <= 9; ++m) {
    auto gm = gamma_m(m);
    REQUIRE(is_small_type(gm.graph));
    REQUIRE(gm.i_side.size() == m - 1);
    REQUIRE(gm.j_side.size() == m - 1);
    std::size_t edges = 0;
    for (Vertex s = 0; s < gm.graph.size(); ++s) {
      for (Vertex t = s + 1; t < gm.graph.size(); ++t) {
        if (gm.graph.label(s, t) == 3) {
          ++edges;
          bool si = std::count(gm.i_side.begin(), gm.i_side.end(), s) > 0;
          bool ti = std::count(gm.i_side.begin(), gm.i_side.end(), t) > 0;
          REQUIRE(si != ti);
        }
      }
    }
    REQUIRE(edges == 2 * (m - 2));
    auto comps = component_vertex_sets(gm.graph);
    REQUIRE(comps.size() == 2);
    for (auto const& c : comps) {
      REQUIRE(c.size() == m - 1);
      REQUIRE(is_path(gm.graph, c));
    }
  }
  CHECK_THROWS_AS(gamma_m(2), ContractError);
}

TEST_CASE("fold of B_3", "[coxeter]") {
  auto f = fold(b3());
  CHECK(f.n_value == 6);
  CHECK(f.graph.size() == 18);
  check_fold_invariants(b3(), f);
  CHECK(f.graph.name(f.blocks[1][0]) == "2.1");
}

TEST_CASE("fold of A_2 is Γ(3)", "[coxeter]") {
  auto g = make_graph(2, {{0, 1}});
  auto f = fold(g);
  CHECK(f.n_value == 2);
  REQUIRE(f.graph.size() == 4);
  check_fold_invariants(g, f);
  auto comps = component_vertex_sets(f.graph);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].size() == 2);
  CHECK(comps[1].size() == 2);
}

TEST_CASE("fold invariants on random graphs", "[coxeter][property]") {
  std::mt19937_64 rng(11);
  int             folded = 0;
  while (folded < 60) {
    std::size_t  n = testing::uniform(rng, 2, 4);
    CoxeterGraph g(testing::default_names(n));
    for (Vertex s = 0; s < n; ++s) {
      for (Vertex t = s + 1; t < n; ++t) {
        g.set_label(s, t, Label(static_cast<std::uint32_t>(
                              testing::uniform(rng, 2, 5))));
      }
    }
    if (!is_connected(g)) {
      continue;
    }
    ++folded;
    auto f = fold(g);
    check_fold_invariants(g, f);
    for (Vertex s = 0; s < n; ++s) {
      for (Vertex t = s + 1; t < n; ++t) {
        if (g.label(s, t) == 3) {
          std::vector<Vertex> both = f.blocks[s];
          both.insert(both.end(), f.blocks[t].begin(), f.blocks[t].end());
          REQUIRE(label3_components(f.graph, both).size() == f.n_value);
        }
      }
    }
  }
}

TEST_CASE("fold rejects bad input", "[coxeter]") {
  CHECK_THROWS_AS(fold(CoxeterGraph({"a"})), ContractError);
  CHECK_THROWS_AS(fold(CoxeterGraph({"a", "b"})), ContractError);
  CoxeterGraph g({"a", "b"});
  g.set_label(0, 1, Label::infinity());
  CHECK_THROWS_AS(fold(g), ContractError);
}

TEST_CASE("graph construction rejects invalid data", "[coxeter]") {
  CHECK_THROWS_AS(CoxeterGraph({"a", "a"}), ContractError);
  CHECK_THROWS_AS(CoxeterGraph({"a b"}), ContractError);
  CHECK_THROWS_AS(CoxeterGraph({"x^2"}), ContractError);
  CoxeterGraph g({"a", "b"});
  CHECK_THROWS_AS(g.set_label(0, 0, Label(3)), ContractError);
  CHECK_THROWS_AS(g.set_label(0, 1, Label(1)), ContractError);
  CHECK_THROWS_AS(Label(0), ContractError);
}

TEST_CASE("graph text format", "[coxeter][format]") {
  auto g = parse_graph("# B3\n\nvertices: 1 2 3\n1 2 4   # long edge\n3 2 3\n");
  CHECK(g == b3());
  CHECK(format_graph(g) == "vertices: 1 2 3\n1 2 4\n2 3 3\n");
  auto inf = parse_graph("vertices: x y\nx y inf\n");
  CHECK(inf.label(0, 1).is_infinite());
  CHECK(parse_graph(format_graph(inf)) == inf);
}

TEST_CASE("graph text format round trips", "[coxeter][format][property]") {
  std::mt19937_64 rng(3);
  Label const     choices[] = {Label(2), Label(3), Label(7), Label::infinity()};
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t  n = testing::uniform(rng, 1, 6);
    CoxeterGraph g(testing::default_names(n));
    for (Vertex s = 0; s < n; ++s) {
      for (Vertex t = s + 1; t < n; ++t) {
        g.set_label(s, t, choices[testing::uniform(rng, 0, 3)]);
      }
    }
    REQUIRE(parse_graph(format_graph(g)) == g);
  }
}

TEST_CASE("graph parse errors carry positions", "[coxeter][format]") {
  auto where = [](std::string const& text) {
    try {
      parse_graph(text);
    } catch (ParseError const& e) {
      return std::make_pair(e.line(), e.column());
    }
    FAIL("expected a parse error");
    return std::make_pair(std::size_t{0}, std::size_t{0});
  };
  CHECK(where("") == std::make_pair(std::size_t{1}, std::size_t{1}));
  CHECK(where("verts: a b\n") == std::make_pair(std::size_t{1}, std::size_t{1}));
  CHECK(where("vertices: a b\na c 3\n") == std::make_pair(std::size_t{2}, std::size_t{3}));
  CHECK(where("vertices: a b\na b 1\n") == std::make_pair(std::size_t{2}, std::size_t{5}));
  CHECK(where("vertices: a b\na b x\n") == std::make_pair(std::size_t{2}, std::size_t{5}));
  CHECK(where("vertices: a b\na b 3\nb a 4\n").first == 3);
  CHECK(where("vertices: a a\n") == std::make_pair(std::size_t{1}, std::size_t{13}));
  CHECK(where("vertices: a b\na a 3\n").first == 2);
  CHECK(where("vertices: a b\na b 3 9\n").first == 2);
  CHECK(where("vertices:\n").first == 1);
}
