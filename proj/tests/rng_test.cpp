#include <gtest/gtest.h>

#include <array>
#include <set>

#include "recwalk/rng.hpp"

using namespace recwalk;

// Known-answer vectors published with the Random123 library.
TEST(Philox, KnownAnswers) {
  using A4 = std::array<std::uint32_t, 4>;
  using A2 = std::array<std::uint32_t, 2>;
  EXPECT_EQ(detail::philox4x32_10(A4{0, 0, 0, 0}, A2{0, 0}),
            (A4{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
  EXPECT_EQ(detail::philox4x32_10(A4{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff},
                                  A2{0xffffffff, 0xffffffff}),
            (A4{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
  EXPECT_EQ(detail::philox4x32_10(A4{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
                                  A2{0xa4093822, 0x299f31d0}),
            (A4{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(Stream, SameAddressSameSequence) {
  Stream a(42, 7, 1), b(42, 7, 1);
  for (int i = 0; i < 1000; ++i)
    ASSERT_EQ(a(), b());
}

TEST(Stream, DistinctAddressesDiffer) {
  std::set<std::uint64_t> firsts;
  for (std::uint64_t idx = 0; idx < 50; ++idx)
    for (std::uint16_t sub = 0; sub < 3; ++sub)
      firsts.insert(Stream(1, idx, sub)());
  firsts.insert(Stream(2, 0, 0)());
  EXPECT_EQ(firsts.size(), 151u);
}

TEST(Stream, UniformIsOpenUnitInterval) {
  Stream s(3, 0);
  double sum = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = s.uniform();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / n, 0.5, 4 * std::sqrt(1.0 / 12 / n));
}

TEST(Stream, NormalMoments) {
  Stream s(5, 0);
  const int n = 400000;
  double m1 = 0, m2 = 0;
  for (int i = 0; i < n; ++i) {
    const double z = s.normal();
    m1 += z;
    m2 += z * z;
  }
  EXPECT_NEAR(m1 / n, 0.0, 4 / std::sqrt(double(n)));
  EXPECT_NEAR(m2 / n, 1.0, 4 * std::sqrt(2.0 / n));
}
