#include <gtest/gtest.h>

#include "grid.hpp"

namespace cppforge::grid {
namespace {

std::vector<std::vector<std::int64_t>> values(const std::vector<Point>& pts, const std::vector<std::string>& names) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& pt : pts) {
    std::vector<std::int64_t> row;
    for (const auto& n : names) row.push_back(pt.at(n));
    out.push_back(row);
  }
  return out;
}

TEST(Grid, SetsRangesAndDivisors) {
  const auto pts = expand("p in {3,5,7}, k=1, n | p-1");
  const std::vector<std::vector<std::int64_t>> want = {
      {3, 1, 1}, {3, 1, 2}, {5, 1, 1}, {5, 1, 2}, {5, 1, 4}, {7, 1, 1}, {7, 1, 2}, {7, 1, 3}, {7, 1, 6}};
  EXPECT_EQ(values(pts, {"p", "k", "n"}), want);
  EXPECT_EQ(expand("m in 1..4").size(), 4u);
  EXPECT_EQ(expand("").size(), 1u);
}

TEST(Grid, Filters) {
  const auto pts = expand("p in {3,5,7}, m in 1..4, p^m <= 2401, n | p-1, n >= 2");
  for (const auto& pt : pts) {
    EXPECT_LE(pt.at("p") * pt.at("p"), 2401 * pt.at("p"));
    EXPECT_EQ((pt.at("p") - 1) % pt.at("n"), 0);
    EXPECT_GE(pt.at("n"), 2);
  }
  EXPECT_EQ(expand("p in 2..20, prime(p)").size(), 8u);
  EXPECT_EQ(expand("a in 1..12, gcd(a, 12) == 1").size(), 4u);
  EXPECT_EQ(expand("p = 7, k = 1, 3 | p - 1").size(), 1u);
  EXPECT_EQ(expand("p = 7, p = 5").size(), 0u);
}

TEST(Grid, FieldElements) {
  const auto pts = expand("p=3, b in GF(p^1)*");
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[0].at("b"), 1);
  EXPECT_EQ(pts[1].fields.at("b"), 3u);
  EXPECT_THROW(expand("b in GF(6)*"), GridError);
}

TEST(Grid, Arithmetic) {
  const auto pts = expand("x = (2 + 3) * 4 - 10 / 3 % 2, y = -2^3, z = 2^3^2");
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_EQ(pts[0].at("x"), 19);
  EXPECT_EQ(pts[0].at("y"), -8);
  EXPECT_EQ(pts[0].at("z"), 512);
}

TEST(Grid, Errors) {
  EXPECT_THROW(expand("p in {3,5"), GridError);
  EXPECT_THROW(expand("n | q"), GridError);
  EXPECT_THROW(expand("x = 1 / 0"), GridError);
  EXPECT_THROW(expand("x = 10^30"), GridError);
  EXPECT_THROW(expand("x = foo(1)"), GridError);
  EXPECT_THROW(expand("p $ 3"), GridError);
  EXPECT_THROW(expand("a in 1..100, b in 1..100, c in 1..100", 1000), GridError);
}

}  // namespace
}  // namespace cppforge::grid
