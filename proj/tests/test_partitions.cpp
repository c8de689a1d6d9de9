#include <algorithm>
#include <functional>

#include "doctest.h"
#include "satake/errors.hpp"
#include "satake/partitions.hpp"

using namespace sph;

namespace {

// Every filling of the diagram by 1..n, filtered by the row and column rules.
std::int64_t brute_kostka(const NPartition& lambda, const Composition& d) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < lambda.size(); ++r)
    for (int c = 0; c < lambda[r]; ++c) cells.emplace_back(r, c);
  const int n = d.size();
  std::vector<std::vector<int>> t(static_cast<std::size_t>(lambda.size()));
  for (int r = 0; r < lambda.size(); ++r) t[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(lambda[r]), 0);
  std::int64_t count = 0;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == cells.size()) {
      std::vector<int> content(static_cast<std::size_t>(n), 0);
      for (const auto& row : t)
        for (int x : row) ++content[static_cast<std::size_t>(x - 1)];
      for (int j = 0; j < n; ++j)
        if (content[static_cast<std::size_t>(j)] != d[j]) return;
      ++count;
      return;
    }
    const auto [r, c] = cells[i];
    for (int x = 1; x <= n; ++x) {
      if (c > 0 && t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)] > x) continue;
      if (r > 0 && t[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] >= x) continue;
      t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = x;
      go(i + 1);
    }
  };
  go(0);
  return count;
}

using Poly = std::vector<std::int64_t>;

Poly pmul(const Poly& a, const Poly& b) {
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

Poly qint(int m) { return Poly(static_cast<std::size_t>(m), 1); }

// Exact division by a monic-leading polynomial.
Poly pdiv(Poly a, const Poly& b) {
  Poly q(a.size() - b.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    q[i] = a[i + b.size() - 1] / b.back();
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= q[i] * b[j];
  }
  for (auto x : a) REQUIRE(x == 0);
  return q;
}

// K_{λ,(1^N)}(q) = q^{n(λ')} [N]_q! / Π_{cells} [hook]_q.
Poly fake_degree(const NPartition& lambda) {
  const int N = lambda.weight();
  Poly num{1};
  for (int m = 1; m <= N; ++m) num = pmul(num, qint(m));
  Poly den{1};
  std::vector<int> conj;
  for (int c = 0; c < lambda[0]; ++c) {
    int h = 0;
    for (int r = 0; r < lambda.size(); ++r)
      if (lambda[r] > c) ++h;
    conj.push_back(h);
  }
  for (int r = 0; r < lambda.size(); ++r)
    for (int c = 0; c < lambda[r]; ++c) den = pmul(den, qint(lambda[r] - c + conj[static_cast<std::size_t>(c)] - r - 1));
  Poly quo = pdiv(num, den);
  int shift = 0;
  for (int r = 0; r < lambda.size(); ++r) shift += lambda[r] * (lambda[r] - 1) / 2;
  quo.insert(quo.begin(), static_cast<std::size_t>(shift), 0);
  while (!quo.empty() && quo.back() == 0) quo.pop_back();
  return quo;
}

int n_stat(const NPartition& l) {
  int s = 0;
  for (int i = 0; i < l.size(); ++i) s += i * l[i];
  return s;
}

}  // namespace

TEST_CASE("partitions reject increasing or negative parts") {
  CHECK_THROWS(NPartition({1, 2}));
  CHECK_THROWS(NPartition({1, -1}));
  CHECK_THROWS(Composition({-1}));
  CHECK(NPartition({2, 1, 0}).length() == 2);
  CHECK(NPartition({2, 1, 0}).to_string() == "2,1,0");
}

TEST_CASE("integer list parsing") {
  CHECK(parse_int_list("2, 1,0") == std::vector<int>{2, 1, 0});
  CHECK_THROWS(parse_int_list(""));
  CHECK_THROWS(parse_int_list("1,,2"));
  CHECK_THROWS(parse_int_list("1x"));
}

TEST_CASE("partition and composition generators have the right sizes and order") {
  CHECK(partitions_of(4, 4).size() == 5);
  CHECK(partitions_of(5, 2).size() == 3);
  CHECK(compositions_of(3, 3).size() == 10);
  const auto ps = partitions_of(6, 3);
  CHECK(std::is_sorted(ps.begin(), ps.end(), std::greater<>()));
  CHECK(partitions_of(0, 2).size() == 1);
}

TEST_CASE("dominance order basics") {
  CHECK(dominance_leq(Composition({1, 1, 1}), NPartition({3, 0, 0})));
  CHECK(dominance_leq(Composition({0, 2, 1}), NPartition({2, 1, 0})));
  CHECK_FALSE(dominance_leq(Composition({3, 0, 0}), NPartition({2, 1, 0})));
  CHECK_THROWS_AS(dominance_leq(Composition({1, 1}), NPartition({3, 0})), WeightMismatch);
}

TEST_CASE("pairing with twice the half-sum of positive roots") {
  CHECK(pairing_2delta(Composition({1, 0})) == 1);
  CHECK(pairing_2delta(Composition({0, 1})) == -1);
  CHECK(pairing_2delta(Composition({1, 0, 0})) == 2);
  CHECK(pairing_2delta(Composition({1, 1, 0})) == 2);
  CHECK(pairing_2delta(Composition({2, 1, 0})) == 4);
}

TEST_CASE("Kostka numbers agree with brute-force tableau filling") {
  for (int n = 1; n <= 4; ++n)
    for (int w = 0; w <= 5; ++w)
      for (const auto& lambda : partitions_of(w, n))
        for (const auto& d : compositions_of(w, n)) CHECK(kostka_number(lambda, d) == brute_kostka(lambda, d));
}

TEST_CASE("Kostka numbers are symmetric in the content") {
  for (const auto& lambda : partitions_of(5, 3))
    for (const auto& d : compositions_of(5, 3)) {
      auto sorted = d.sorted_desc();
      CHECK(kostka_number(lambda, d) == kostka_number(lambda, Composition(sorted)));
    }
}

TEST_CASE("charge of small words") {
  CHECK(charge({1, 2}) == 1);
  CHECK(charge({2, 1}) == 0);
  CHECK(charge({1, 2, 3}) == 3);
  CHECK(charge({3, 2, 1}) == 0);
  CHECK(charge({2, 1, 1, 2}) == 1);
  CHECK_THROWS(charge({2, 2}));
}

TEST_CASE("Kostka-Foulkes known values") {
  CHECK(kostka_foulkes(NPartition({2, 1, 0}), NPartition({1, 1, 1})).to_string() == "q + q^2");
  CHECK(kostka_foulkes(NPartition({3, 0, 0}), NPartition({1, 1, 1})).to_string() == "q^3");
  CHECK(kostka_foulkes(NPartition({1, 1, 1}), NPartition({1, 1, 1})).to_string() == "1");
  CHECK(kostka_foulkes(NPartition({2, 0}), NPartition({1, 1})).to_string() == "q");
  CHECK(kostka_foulkes(NPartition({4, 0}), NPartition({2, 2})).to_string() == "q^2");
  CHECK(kostka_foulkes(NPartition({3, 1}), NPartition({2, 2})).to_string() == "q");
  CHECK(kostka_foulkes(NPartition({3, 1, 0}), NPartition({2, 1, 1})).to_string() == "q + q^2");
  CHECK(kostka_foulkes(NPartition({1, 1}), NPartition({2, 0})).is_zero());
}

TEST_CASE("Kostka-Foulkes at standard content matches the fake-degree formula") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& lambda : partitions_of(n, n)) {
      const auto kf = kostka_foulkes(lambda, NPartition(std::vector<int>(static_cast<std::size_t>(n), 1)));
      CHECK(kf.coeffs == fake_degree(lambda));
    }
}

TEST_CASE("Kostka-Foulkes properties: q=1 value, unitriangularity, degree, positivity") {
  for (int n = 2; n <= 4; ++n)
    for (int w = 0; w <= 5; ++w)
      for (const auto& lambda : partitions_of(w, n))
        for (const auto& mu : partitions_of(w, n)) {
          const auto kf = kostka_foulkes(lambda, mu);
          CHECK(kf.eval(1) == kostka_number(lambda, mu.as_composition()));
          CHECK(kf.has_nonneg_coeffs());
          if (lambda == mu) CHECK(kf.to_string() == "1");
          if (!dominance_leq(mu.as_composition(), lambda)) CHECK(kf.is_zero());
          if (!kf.is_zero()) CHECK(static_cast<int>(kf.coeffs.size()) - 1 == n_stat(mu) - n_stat(lambda));
        }
}
