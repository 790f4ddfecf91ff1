#include <gtest/gtest.h>

#include "circstab/autoeng.hpp"
#include "circstab/circulant.hpp"
#include "test_support.hpp"

using namespace circstab;

TEST(Parse, AcceptsCanonicalLiteral) {
  const ConnectionSet s = ConnectionSet::parse("10:1,2,8,9");
  EXPECT_EQ(s.order(), 10);
  EXPECT_EQ(s.members().values(), (std::vector<int>{1, 2, 8, 9}));
  EXPECT_EQ(s.to_literal(), "10:1,2,8,9");
  EXPECT_EQ(ConnectionSet::parse("7:").size(), 0);
  EXPECT_EQ(ConnectionSet::parse("1:").order(), 1);
}

TEST(Parse, RejectsMalformedInput) {
  for (const char* bad : {"10:0,1,9", "10:1,10", "10:2,1,8,9", "10:1,2", "10", "x:1", "10:1,,9",
                          "10:1,9,", "10:1,1,9", "-4:", "0:"}) {
    EXPECT_THROW(ConnectionSet::parse(bad), ParseError) << bad;
  }
  EXPECT_THROW(ConnectionSet::parse("65:1,64"), CapExceeded);
}

TEST(ConnectionSetType, ValidatesInvariants) {
  EXPECT_THROW(ConnectionSet(8, {0, 1, 7}), DomainError);
  EXPECT_THROW(ConnectionSet(8, {1, 2, 7}), DomainError);
  const ConnectionSet s(16, {1, 3, 5, 7, 9, 11, 13, 15, 2, 14});
  EXPECT_EQ(s.even_part().values(), (std::vector<int>{2, 14}));
  EXPECT_EQ(s.odd_part().size(), 8);
}

TEST(Connected, Examples) {
  EXPECT_FALSE(is_connected(circulant(8, {2, 6})));
  EXPECT_TRUE(is_connected(circulant(5, {1, 4})));
  EXPECT_TRUE(is_connected(circulant(10, {1, 2, 8, 9})));
  EXPECT_TRUE(is_connected(circulant(1, {})));
  EXPECT_FALSE(is_connected(circulant(3, {})));
}

TEST(Bipartite, Examples) {
  EXPECT_TRUE(is_bipartite(circulant(6, {1, 5})));
  EXPECT_FALSE(is_bipartite(circulant(5, {1, 4})));
  EXPECT_FALSE(is_bipartite(circulant(10, {1, 2, 8, 9})));
}

TEST(TwinFree, Examples) {
  EXPECT_FALSE(is_twin_free(circulant(4, {1, 3})));
  EXPECT_TRUE(is_twin_free(circulant(10, {1, 2, 8, 9})));
  EXPECT_TRUE(is_twin_free(circulant(8, {1, 2, 6, 7})));
}

TEST(Predicates, AgreeWithDefinitionsOnAllSmallCirculants) {
  for (int n = 1; n <= 16; ++n) {
    testing_support::for_each_symmetric_set(n, [&](const ConnectionSet& s) {
      const CirculantGraph x{s};
      EXPECT_EQ(is_connected(x), is_connected_bfs(x)) << s.to_literal();
      EXPECT_EQ(is_twin_free(x), is_twin_free_by_neighborhoods(x)) << s.to_literal();
      if (is_connected(x) && n % 2 == 0) {
        EXPECT_EQ(is_bipartite(x), s.even_part().empty()) << s.to_literal();
      }
      if (is_connected(x) && n > 1) {
        const ColoredGraph bx = double_cover(x);
        // BX is disconnected exactly when X is bipartite.
        int components = 0;
        std::vector<int> seen(2 * n, 0);
        for (int v = 0; v < 2 * n; ++v) {
          if (seen[v]) continue;
          ++components;
          std::vector<int> stack{v};
          seen[v] = 1;
          while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            bx.neighbors(u).for_each([&](int w) {
              if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
              }
            });
          }
        }
        EXPECT_EQ(components == 2, is_bipartite(x)) << s.to_literal();
      }
    });
  }
}

TEST(DoubleCover, Shape) {
  const ColoredGraph c6 = double_cover(circulant(3, {1, 2}));
  EXPECT_EQ(c6.vertex_count(), 6);
  EXPECT_EQ(c6.edge_count(), 6u);
  for (int v = 0; v < 6; ++v) EXPECT_EQ(c6.neighbors(v).count(), 2);
  const ColoredGraph b10 = double_cover(circulant(10, {1, 2, 8, 9}));
  EXPECT_EQ(b10.vertex_count(), 20);
  EXPECT_EQ(b10.edge_count(), 40u);
  EXPECT_TRUE(b10.adjacent(cover_vertex(0, 0, 10), cover_vertex(1, 1, 10)));
  EXPECT_FALSE(b10.adjacent(cover_vertex(0, 0, 10), cover_vertex(1, 0, 10)));
  const ColoredGraph layered = double_cover(circulant(10, {1, 2, 8, 9}), CoverLayout::layered);
  EXPECT_EQ(layered.color(3), 0);
  EXPECT_EQ(layered.color(13), 1);
}

TEST(DoubleCover, CommutesWithMultipliers) {
  for (int n : {8, 10, 12, 15}) {
    testing_support::for_each_symmetric_set(n, [&](const ConnectionSet& s) {
      const ColoredGraph bx = double_cover(CirculantGraph{s});
      units(n).for_each([&](int m) {
        const ConnectionSet ms(scale_set(s.members(), m));
        std::vector<int> img(2 * n);
        for (int v = 0; v < n; ++v) {
          for (int i = 0; i < 2; ++i) img[cover_vertex(v, i, n)] = cover_vertex(v * m % n, i, n);
        }
        EXPECT_EQ(bx.relabeled(Permutation(img)), double_cover(CirculantGraph{ms}));
      });
    });
  }
}

TEST(Aux2SPrime, Examples) {
  const Aux2SPrime a = aux_2sprime_graph(circulant(10, {1, 2, 8, 9}));
  EXPECT_EQ(a.s_prime.values(), (std::vector<int>{1, 2, 8, 9}));
  EXPECT_EQ(a.two_s_prime.values(), (std::vector<int>{2, 4, 6, 8}));
  EXPECT_FALSE(a.has_loops);

  const Aux2SPrime b = aux_2sprime_graph(circulant(8, {1, 2, 6, 7}));
  EXPECT_EQ(b.s_prime.values(), (std::vector<int>{1, 7}));
  EXPECT_EQ(b.two_s_prime.values(), (std::vector<int>{2, 6}));

  const Aux2SPrime c = aux_2sprime_graph(circulant(8, {1, 3, 5, 7}));
  EXPECT_TRUE(c.s_prime.empty());
  EXPECT_EQ(c.graph.edge_count(), 0u);

  const Aux2SPrime d = aux_2sprime_graph(circulant(6, {1, 3, 5}));
  EXPECT_TRUE(d.has_loops);
  EXPECT_EQ(d.graph.color(0), 1);

  EXPECT_THROW(aux_2sprime_graph(circulant(5, {1, 4})), DomainError);
}

TEST(EvenSubgraph, Examples) {
  EXPECT_EQ(even_subgraph(circulant(10, {1, 2, 8, 9})).connection, ConnectionSet(5, {1, 4}));
  EXPECT_EQ(even_subgraph(circulant(10, {1, 3, 7, 9})).connection.size(), 0);
  EXPECT_EQ(even_subgraph(circulant(16, {1, 3, 5, 7, 9, 11, 13, 15, 2, 14})).connection,
            ConnectionSet(8, {1, 7}));
  EXPECT_THROW(even_subgraph(circulant(5, {1, 4})), DomainError);
}

TEST(Spectrum, IsomorphicCirculantsShareSpectrum) {
  const auto a = circulant_spectrum(ConnectionSet(10, {1, 2, 8, 9}));
  const auto b = circulant_spectrum(ConnectionSet(10, {3, 4, 6, 7}));
  EXPECT_TRUE(spectra_match(a, b));
  const auto c = circulant_spectrum(ConnectionSet(10, {1, 3, 7, 9}));
  EXPECT_FALSE(spectra_match(a, c));
  // K_5: eigenvalues 4 and -1 (x4).
  const auto k5 = circulant_spectrum(ConnectionSet(5, {1, 2, 3, 4}));
  EXPECT_NEAR(k5.front(), -1.0, 1e-9);
  EXPECT_NEAR(k5.back(), 4.0, 1e-9);
}
