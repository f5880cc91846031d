#include <doctest.h>

#include <symprod/partition.hpp>

#include <vector>

using namespace symprod;

namespace {

// Independent partition-count oracle: Euler's pentagonal-number recurrence
// p(n) = sum_{k>=1} (-1)^{k-1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)].
std::vector<long long> partition_counts(int max_n) {
  std::vector<long long> p(max_n + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= max_n; ++n) {
    long long acc = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2;
      int g2 = k * (3 * k + 1) / 2;
      if (g1 > n && g2 > n) break;
      long long term = 0;
      if (g1 <= n) term += p[n - g1];
      if (g2 <= n) term += p[n - g2];
      acc += (k % 2 == 1) ? term : -term;
    }
    p[n] = acc;
  }
  return p;
}

}  // namespace

TEST_SUITE_BEGIN("partitions");

TEST_CASE("constructor validates and normalizes") {
  Partition lambda(std::vector<int>{3, 2, 2});
  CHECK(lambda.n() == 7);
  CHECK(lambda.length() == 3);
  CHECK(Partition().empty());
  CHECK(Partition().n() == 0);
  CHECK_THROWS_AS(Partition(std::vector<int>{2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Partition(std::vector<int>{1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Partition(std::vector<int>{-1}), std::invalid_argument);
}

TEST_CASE("enumeration is reverse-lexicographic") {
  auto parts5 = enumerate_partitions(5);
  REQUIRE(parts5.size() == 7);
  CHECK(parts5.front() == Partition(std::vector<int>{5}));
  CHECK(parts5[1] == Partition(std::vector<int>{4, 1}));
  CHECK(parts5[2] == Partition(std::vector<int>{3, 2}));
  CHECK(parts5[3] == Partition(std::vector<int>{3, 1, 1}));
  CHECK(parts5[4] == Partition(std::vector<int>{2, 2, 1}));
  CHECK(parts5[5] == Partition(std::vector<int>{2, 1, 1, 1}));
  CHECK(parts5.back() == Partition(std::vector<int>{1, 1, 1, 1, 1}));

  auto parts0 = enumerate_partitions(0);
  REQUIRE(parts0.size() == 1);
  CHECK(parts0.front().empty());
}

TEST_CASE("enumeration counts match the pentagonal recurrence") {
  auto expected = partition_counts(28);
  for (int n = 0; n <= 28; ++n)
    CHECK(enumerate_partitions(n).size() == static_cast<std::size_t>(expected[n]));
}

TEST_CASE("centralizer orders z_lambda") {
  CHECK(z_of(Partition()) == Rational(1));
  CHECK(z_of(Partition(std::vector<int>{3})) == Rational(3));
  CHECK(z_of(Partition(std::vector<int>{2, 1})) == Rational(2));
  CHECK(z_of(Partition(std::vector<int>{1, 1, 1})) == Rational(6));
  CHECK(z_of(Partition(std::vector<int>{2, 2, 1})) == Rational(8));

  // Class sizes n!/z_lambda add up to |S_n|, i.e. sum of 1/z is 1.
  for (int n = 1; n <= 9; ++n) {
    Rational acc(0);
    for (const auto& lambda : enumerate_partitions(n)) acc += 1 / z_of(lambda);
    CHECK(acc == Rational(1));
  }
}

TEST_CASE("multiplicity view round-trips") {
  for (const auto& lambda : enumerate_partitions(7)) {
    CHECK(Partition::from_multiplicities(lambda.multiplicities()) == lambda);
    int weight = 0;
    for (const auto& [r, k] : lambda.multiplicities()) weight += r * k;
    CHECK(weight == 7);
  }
}

TEST_CASE("merging concatenates and resorts") {
  Partition a(std::vector<int>{3, 1});
  Partition b(std::vector<int>{2, 1});
  CHECK(a.merged_with(b) == Partition(std::vector<int>{3, 2, 1, 1}));
  CHECK(a.merged_with(Partition()) == a);
  CHECK(Partition().merged_with(b) == b);
}

TEST_CASE("string forms") {
  CHECK(Partition(std::vector<int>{3, 2, 1}).str() == "[3,2,1]");
  CHECK(Partition().str() == "[]");
  CHECK(partition_from_string("[3,2,1]") == Partition(std::vector<int>{3, 2, 1}));
  CHECK(partition_from_string("3,2,1") == Partition(std::vector<int>{3, 2, 1}));
  CHECK(partition_from_string("[]") == Partition());
  CHECK_THROWS_AS(partition_from_string("[1,2]"), std::invalid_argument);
  CHECK_THROWS_AS(partition_from_string("[a]"), std::invalid_argument);
}

TEST_SUITE_END();
