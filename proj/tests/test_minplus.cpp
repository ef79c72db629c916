#include <gtest/gtest.h>

#include <sstream>

#include "ssrp/minplus.hpp"
#include "test_util.hpp"

using namespace ssrp;
using namespace ssrp::testing;

namespace {

FixedRational fr(const char* s) { return FixedRational::parse(s); }

RationalMatrix rmat(std::initializer_list<std::initializer_list<const char*>> rows) {
  RationalMatrix m(rows.size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (const char* v : row) m(i, j++) = fr(v);
    ++i;
  }
  return m;
}

IntMatrix imat(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  IntMatrix m(rows.size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (std::int64_t v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

/// Entries from {1, 1.25, 1.5, 1.75, inf}.
RationalMatrix quarter_matrix(std::size_t n, Rng& rng) {
  static const char* kValues[] = {"1", "1.25", "1.5", "1.75", "inf"};
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = fr(kValues[uniform_below(rng, 5)]);
  return m;
}

RationalMatrix unit_matrix(std::size_t n, Rng& rng) {
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = FixedRational::from_raw(FixedRational::kOne + static_cast<std::int64_t>(uniform_below(rng, FixedRational::kOne)));
  return m;
}

IntMatrix random_digraph_weights(std::size_t n, Rng& rng, int density_percent = 30) {
  IntMatrix w(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i == j)
        w(i, j) = 0;
      else if (static_cast<int>(uniform_below(rng, 100)) < density_percent)
        w(i, j) = 1 + static_cast<std::int64_t>(uniform_below(rng, 10));
  return w;
}

}  // namespace

TEST(FixedRational, ParseAndPrint) {
  EXPECT_EQ(fr("1.75").raw(), 7 * (FixedRational::kOne / 4));
  EXPECT_EQ(fr("3").to_int(), 3);
  EXPECT_TRUE(fr("inf").is_inf());
  EXPECT_EQ(fr("1.25").to_string(), "1.25");
  EXPECT_EQ(FixedRational::from_dyadic(3, 2), fr("0.75"));
  EXPECT_EQ(fr("1.5") + fr("1.25"), fr("2.75"));
  EXPECT_TRUE((fr("inf") + fr("1")).is_inf());
  EXPECT_THROW(fr("0.1"), Error);  // not a multiple of 2^-32
  EXPECT_THROW(fr("abc"), Error);
  EXPECT_THROW(FixedRational::from_int(std::int64_t{1} << 31), Error);
}

TEST(Normalize, ScalarExamples) {
  const auto n3 = normalize_matrices(imat({{3}}), imat({{5}}));
  EXPECT_EQ(n3.scale, 8);  // the larger entry 5 sets M_bar
  const auto n3_alone = normalize_matrices(imat({{3}}), imat({{3}}));
  EXPECT_EQ(n3_alone.scale, 4);
  EXPECT_EQ(n3_alone.a(0, 0), fr("1.75"));
  const auto n1 = normalize_matrices(imat({{1}}), imat({{1}}));
  EXPECT_EQ(n1.scale, 2);
  EXPECT_EQ(n1.a(0, 0), fr("1.5"));
  const auto with_inf = normalize_matrices(imat({{kIntInf}}), imat({{1}}));
  EXPECT_TRUE(with_inf.a(0, 0).is_inf());
  EXPECT_THROW(normalize_matrices(imat({{-1}}), imat({{1}})), Error);
}

TEST(Normalize, ThreeTimesFiveThroughPipeline) {
  EXPECT_EQ(minplus_integer(imat({{3}}), imat({{5}}), MinPlusEngine::kGadget), imat({{8}}));
  EXPECT_EQ(minplus_integer(imat({{3}}), imat({{5}}), MinPlusEngine::kDirect), imat({{8}}));
}

TEST(Normalize, RoundTripMatchesDirectProduct) {
  Rng rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix a(4), b(4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        a(i, j) = uniform_below(rng, 6) ? static_cast<std::int64_t>(uniform_below(rng, 1000)) : kIntInf;
        b(i, j) = uniform_below(rng, 6) ? static_cast<std::int64_t>(uniform_below(rng, 1000)) : kIntInf;
      }
    const auto nm = normalize_matrices(a, b);
    EXPECT_EQ(denormalize(minplus_direct(nm.a, nm.b), nm.scale), minplus_direct(a, b));
  }
}

TEST(Gadget, CalibrationForFourColumns) {
  Rng rng(1);
  const RationalMatrix y = quarter_matrix(4, rng);
  const std::size_t L = gadget_path_count(4);
  ASSERT_EQ(L, 3u);
  const std::vector<std::vector<FixedRational>> block(L - 1, std::vector<FixedRational>(4, FixedRational::inf()));
  const Gadget gd = build_gadget(block, y);
  EXPECT_EQ(gd.calibration(1), 18);
  EXPECT_EQ(gd.calibration(2), 11);
  // Without layer edges the auxiliary paths alone set d(x_1, a_i).
  const auto d = weighted_dijkstra(gd.graph, gd.source());
  for (std::size_t i = 1; i <= L; ++i) EXPECT_EQ(d[gd.a[i - 1]], FixedRational::from_int(gd.calibration(i))) << i;
}

TEST(Gadget, CalibrationHoldsWithTheMatchingSpineEdgeFailed) {
  Rng rng(8);
  for (std::size_t n : {1, 2, 4, 5, 9, 16}) {
    const RationalMatrix x = quarter_matrix(n, rng), y = quarter_matrix(n, rng);
    const std::size_t L = gadget_path_count(n);
    std::vector<std::vector<FixedRational>> block(L - 1, std::vector<FixedRational>(n, FixedRational::inf()));
    for (std::size_t r = 0; r < L - 1 && r < n; ++r)
      for (std::size_t k = 0; k < n; ++k) block[r][k] = x(r, k);
    const Gadget gd = build_gadget(block, y);
    for (std::size_t i = 1; i < L; ++i) {
      const auto d = weighted_ssrp_oracle(gd.graph, gd.source(), std::vector<Edge>{gd.spine_edge(i)})[0];
      EXPECT_EQ(d[gd.a[i - 1]], FixedRational::from_int(gd.calibration(i))) << "n=" << n << " i=" << i;
    }
    EXPECT_EQ(weighted_dijkstra(gd.graph, gd.source())[gd.a[L - 1]], FixedRational::from_int(gd.calibration(L)));
  }
}

TEST(Gadget, Construction) {
  Rng rng(2);
  const RationalMatrix y = quarter_matrix(4, rng);
  std::vector<std::vector<FixedRational>> block(2, std::vector<FixedRational>(4, FixedRational::inf()));
  block[1][2] = fr("1.5");
  const Gadget gd = build_gadget(block, y);
  EXPECT_EQ(gd.graph.neighbors(gd.a[0]).size(), 1u);  // aux path end only
  EXPECT_EQ(gd.graph.neighbors(gd.a[1]).size(), 2u);
  for (std::size_t i = 1; i < gd.L; ++i) EXPECT_TRUE(gd.graph.find_edge(gd.spine[i - 1], gd.spine[i]).has_value());
  block[0][0] = fr("2");
  EXPECT_THROW(build_gadget(block, y), Error);
}

TEST(MinPlus, TwoByTwoExample) {
  const RationalMatrix x = rmat({{"1.5", "1.25"}, {"inf", "1.0"}});
  const RationalMatrix y = rmat({{"1.0", "inf"}, {"1.5", "1.5"}});
  const RationalMatrix z = rmat({{"2.5", "2.75"}, {"2.5", "2.5"}});
  EXPECT_EQ(minplus_direct(x, y), z);
  EXPECT_EQ(minplus_via_ssrp(x, y), z);
}

TEST(MinPlus, InfiniteOperand) {
  const RationalMatrix x(3);
  Rng rng(3);
  const RationalMatrix y = quarter_matrix(3, rng);
  EXPECT_EQ(minplus_via_ssrp(x, y), RationalMatrix(3));
  EXPECT_EQ(minplus_direct(x, y), RationalMatrix(3));
}

TEST(MinPlus, OneByOne) {
  const RationalMatrix x = rmat({{"1.0"}});
  EXPECT_EQ(minplus_direct(x, x), rmat({{"2"}}));
  EXPECT_EQ(minplus_via_ssrp(x, x), rmat({{"2"}}));
}

TEST(MinPlus, QuarterGridMatricesMatchDirect) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Rng rng(seed);
    const RationalMatrix x = quarter_matrix(8, rng), y = quarter_matrix(8, rng);
    EXPECT_EQ(minplus_via_ssrp(x, y), minplus_direct(x, y)) << seed;
  }
}

TEST(MinPlus, FullPrecisionMatricesMatchDirect) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Rng rng(seed);
    const std::size_t n = 1 + seed;
    const RationalMatrix x = unit_matrix(n, rng), y = unit_matrix(n, rng);
    EXPECT_EQ(minplus_via_ssrp(x, y), minplus_direct(x, y)) << seed;
  }
}

TEST(Apsp, ThreeCycle) {
  const IntMatrix w = imat({{0, 1, kIntInf}, {kIntInf, 0, 1}, {1, kIntInf, 0}});
  const IntMatrix d = apsp_via_minplus(w);
  EXPECT_EQ(d, floyd_warshall(w));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) {
        EXPECT_TRUE(d(i, j) == 1 || d(i, j) == 2);
      }
}

TEST(Apsp, DisconnectedPairStaysInfinite) {
  const IntMatrix w = imat({{0, 4}, {kIntInf, 0}});
  EXPECT_EQ(apsp_via_minplus(w)(1, 0), kIntInf);
  EXPECT_EQ(apsp_via_minplus(w)(0, 1), 4);
}

TEST(Apsp, RandomDigraphsMatchFloydWarshall) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Rng rng(seed);
    const IntMatrix w = random_digraph_weights(16, rng);
    EXPECT_EQ(apsp_via_minplus(w, MinPlusEngine::kGadget), floyd_warshall(w)) << seed;
    EXPECT_EQ(apsp_via_minplus(w, MinPlusEngine::kDirect), floyd_warshall(w)) << seed;
  }
}

TEST(Apsp, RejectsInvalidInput) {
  EXPECT_THROW(apsp_via_minplus(imat({{0, -1}, {1, 0}})), Error);
  EXPECT_THROW(apsp_via_minplus(imat({{1, 1}, {1, 0}})), Error);
}

TEST(FloydWarshall, TriangleInequality) {
  Rng rng(6);
  const IntMatrix d = floyd_warshall(random_digraph_weights(12, rng));
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = 0; j < 12; ++j)
      for (std::size_t k = 0; k < 12; ++k)
        if (d(i, k) != kIntInf && d(k, j) != kIntInf) {
          EXPECT_LE(d(i, j), d(i, k) + d(k, j));
        }
  EXPECT_EQ(floyd_warshall(imat({{0, 7}, {kIntInf, 0}})), imat({{0, 7}, {kIntInf, 0}}));
}

TEST(MatrixFile, ParseAndWrite) {
  std::istringstream in("2\n1.5 inf\n# not a comment\n");
  EXPECT_THROW(parse_matrix(in), Error);
  std::istringstream ok("2\n1.5 inf\n3 0.25\n");
  const RationalMatrix m = parse_matrix(ok);
  EXPECT_EQ(m, rmat({{"1.5", "inf"}, {"3", "0.25"}}));
  std::ostringstream out;
  write_matrix(out, m);
  EXPECT_EQ(out.str(), "2\n1.5 inf\n3 0.25\n");
  std::istringstream short_in("3\n1 2 3\n");
  EXPECT_THROW(parse_matrix(short_in), Error);
  std::istringstream trailing("1\n1 2\n");
  EXPECT_THROW(parse_matrix(trailing), Error);
}
