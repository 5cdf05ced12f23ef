#include <gtest/gtest.h>

#include <bit>

#include "spindiscord/error.hpp"
#include "spindiscord/sector_basis.hpp"

using namespace spindiscord;

TEST(SectorBasis, FourSitesTwoUp) {
  const SectorBasis b = build_sector(4, 2);
  const std::vector<Config> expected = {0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100};
  ASSERT_EQ(b.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(b.state(i), expected[i]);
    EXPECT_EQ(b.index_of(expected[i]), i);
  }
}

TEST(SectorBasis, Sizes) {
  EXPECT_EQ(build_sector(12, 6).size(), 924u);
  EXPECT_EQ(build_sector(22, 11).size(), 705432u);
  EXPECT_EQ(build_sector(8, 0).size(), 1u);
  EXPECT_EQ(build_sector(8, 8).size(), 1u);
}

TEST(SectorBasis, OrderedAndIndexRoundTrips) {
  for (int n : {4, 6, 10, 16}) {
    for (int up = 0; up <= n; up += (n > 10 ? n / 4 : 1)) {
      const SectorBasis b(n, up);
      EXPECT_EQ(b.size(), binomial(n, up));
      for (std::size_t i = 0; i < b.size(); ++i) {
        EXPECT_EQ(std::popcount(b.state(i)), up);
        EXPECT_TRUE(b.contains(b.state(i)));
        EXPECT_EQ(b.index_of(b.state(i)), i);
        if (i > 0) EXPECT_LT(b.state(i - 1), b.state(i));
      }
    }
  }
}

TEST(SectorBasis, LargestSectorIndexRoundTrips) {
  const SectorBasis b(22, 11);
  for (std::size_t i = 0; i < b.size(); i += 997) EXPECT_EQ(b.index_of(b.state(i)), i);
  EXPECT_EQ(b.index_of(b.state(b.size() - 1)), b.size() - 1);
}

TEST(SectorBasis, ContainsRejectsOtherSectors) {
  const SectorBasis b(6, 3);
  EXPECT_FALSE(b.contains(0b000011));
  EXPECT_FALSE(b.contains(Config{0b111} << 6));
}

TEST(SectorBasis, RejectsUnsupportedRings) {
  EXPECT_THROW(SectorBasis(5, 2), UnsupportedError);
  EXPECT_THROW(SectorBasis(2, 1), UnsupportedError);
  EXPECT_THROW(SectorBasis(kMaxSites + 2, 4), UnsupportedError);
  EXPECT_THROW(SectorBasis(6, 7), DomainError);
  EXPECT_THROW(SectorBasis(6, -1), DomainError);
}

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(22, 11), 705432u);
  EXPECT_EQ(binomial(26, 13), 10400600u);
  EXPECT_EQ(binomial(5, 7), 0u);
}
