#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "ria/dof.hpp"

using namespace ria;

namespace {

// Independent binomial oracle: Pascal recursion, no shared code with the
// library's GMP-backed binomials.
long long choose_oracle(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<long long> row(n + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j >= 1; --j) row[j] += row[j - 1];
  }
  return row[k];
}

}  // namespace

TEST_CASE("order-2 DoF at small user counts") {
  CHECK(order2_dof(2) == Rational(1));    // empty overhead sum
  CHECK(order2_dof(3) == Rational(6, 5)); // single l=2 term: 1/(1 - (1/2)(1/3))
  CHECK(order2_dof(4) == Rational(72, 53)); // terms 2/3 + 1/8 scaled by 1/3
  CHECK_THROWS_AS(order2_dof(1), std::domain_error);
}

TEST_CASE("order-2 overhead closed sum") {
  CHECK(order2_overhead(2) == Rational(0));
  CHECK(order2_overhead(3) == Rational(1, 6));
  CHECK(order2_overhead(5) == Rational(79, 240)); // (1/4)(1 + 1/4 + 1/15)
  CHECK_THROWS_AS(order2_overhead(0), std::domain_error);
}

TEST_CASE("order-m DoF recursion") {
  for (int k = 2; k <= 12; ++k) CHECK(order_dof(k, k) == Rational(1));
  CHECK(order_dof(3, 2) == Rational(6, 5));
  CHECK(order_dof(4, 2) == Rational(72, 53));
  CHECK(order_dof(4, 3) == Rational(8, 7));
  CHECK_THROWS_AS(order_dof(4, 1), std::domain_error);
  CHECK_THROWS_AS(order_dof(4, 5), std::domain_error);
}

TEST_CASE("closed-form overhead path") {
  CHECK(delivery_overhead(3, 2) == Rational(1, 6));
  CHECK(delivery_overhead(4, 3) == Rational(1, 8));
  // top stage collapses to a single term, 1/(2K)
  for (int k = 3; k <= 12; ++k) CHECK(delivery_overhead(k, k - 1) == Rational(1, 2 * k));
  CHECK(delivery_overhead(5, 4) == Rational(1, 10));
  CHECK_THROWS_AS(delivery_overhead(5, 5), std::domain_error);
}

TEST_CASE("two independent routes agree for every stage up to K = 200") {
  for (int k = 2; k <= 200; ++k) {
    Rational dof(1);
    for (int m = k - 1; m >= 2; --m) {
      Rational denom = Rational(m) + Rational(k - m, m + 1) +
                       Rational(static_cast<long long>(m - 1) * (k - m)) / dof;
      dof = Rational(static_cast<long long>(m) * (k - m + 1)) / denom;
      CHECK(inverse(Rational(1) - delivery_overhead(k, m)) == dof);
    }
  }
}

TEST_CASE("order-2 DoF equals both alternate routes") {
  for (int k = 2; k <= 200; ++k) {
    Rational direct = order2_dof(k);
    CHECK(direct == order_dof(k, 2));
    CHECK(direct == inverse(Rational(1) - order2_overhead(k)));
  }
}

TEST_CASE("sum DoF breakdown at quoted points") {
  DofBreakdown b3 = sum_dof_breakdown(3);
  CHECK(b3.sum_dof == Rational(3, 2));
  CHECK(b3.order2 == Rational(6, 5));
  CHECK(b3.floor2x == 2);
  CHECK(b3.ceil2x == 3);
  CHECK(b3.n_star == 2);  // tie between 2 and 3 resolves to fewer antennas
  CHECK(b3.min_antennas == 2);
  CHECK(b3.order_dof.back() == Rational(1));

  CHECK(sum_dof(4) == Rational(108, 65));
  CHECK(sum_dof_breakdown(4).n_star == 3);
  CHECK(sum_dof(5) == Rational(360, 201));
  CHECK(sum_dof_breakdown(5).n_star == 3);

  DofBreakdown b2 = sum_dof_breakdown(2);
  CHECK(b2.sum_dof == Rational(4, 3));
  CHECK(b2.n_star == 2);
  CHECK(b2.min_antennas == 2);

  CHECK_THROWS_AS(sum_dof_breakdown(1), std::domain_error);
}

TEST_CASE("chosen n beats every feasible transmitter count") {
  for (int k = 2; k <= 200; ++k) {
    DofBreakdown b = sum_dof_breakdown(k);
    CHECK(b.floor2x <= b.ceil2x);
    CHECK(Rational(b.floor2x) <= Rational(2) * b.order2);
    CHECK(Rational(2) * b.order2 <= Rational(b.ceil2x));
    for (int n = 2; n <= k; ++n) {
      CHECK(b.sum_dof >= sum_dof_objective(k, n, b.order2));
    }
  }
}

TEST_CASE("per-round count table") {
  CountTable t33 = phase_counts(3, 3);
  CHECK(t33.fresh_symbols == 9);
  CHECK(t33.fresh_slots == 1);
  CHECK(t33.order2_symbols == 6);

  CountTable t32 = phase_counts(3, 2);
  CHECK(t32.fresh_symbols == 12);
  CHECK(t32.fresh_slots == 3);
  CHECK(t32.order2_symbols == 6);

  const CountTable::Row& r2 = t33.row(2);
  CHECK(r2.delivery_slots == 6);
  CHECK(r2.delivered_symbols == 12);
  CHECK(r2.next_order_generated == 3);
  CHECK(r2.single_user_generated == 3);

  CHECK_THROWS_AS(phase_counts(3, 4), std::domain_error);
  CHECK_THROWS_AS(phase_counts(3, 1), std::domain_error);
}

TEST_CASE("count identities recomputed from an independent binomial") {
  for (int k = 2; k <= 20; ++k) {
    for (int n = 2; n <= k; ++n) {
      CountTable t = phase_counts(k, n);
      long long c = choose_oracle(k, n);
      CHECK(t.fresh_symbols == static_cast<long long>(n) * n * c);
      CHECK(t.fresh_slots == c);
      CHECK(t.order2_symbols == static_cast<long long>(n) * (n - 1) * c);
      for (int m = 2; m <= k; ++m) {
        const CountTable::Row& row = t.row(m);
        CHECK(row.delivery_slots == static_cast<long long>(m) * choose_oracle(k, m));
        CHECK(row.delivered_symbols == static_cast<long long>(k - m + 1) * row.delivery_slots);
        CHECK(row.next_order_generated ==
              static_cast<long long>(m - 1) * (m + 1) * choose_oracle(k, m + 1));
        CHECK(row.single_user_generated == static_cast<long long>(m + 1) * choose_oracle(k, m + 1));
      }
    }
  }
}

TEST_CASE("baseline schemes reproduce the quoted values") {
  CHECK(baseline_dof(3, Baseline::kMatBroadcast) == Rational(18, 11));
  CHECK(baseline_dof(3, Baseline::kTwoPhaseMiso) == Rational(9, 7));
  CHECK(baseline_dof(3, Baseline::kTorrellas) == Rational(3, 2));
  CHECK(baseline_dof(3, Baseline::kAbdoliSisoK3) == Rational(36, 31));
  CHECK(baseline_dof(3, Baseline::kMalekiK3) == Rational(9, 8));
  CHECK(baseline_dof(2, Baseline::kMatBroadcast) == Rational(4, 3));
  CHECK_THROWS_AS(baseline_dof(4, Baseline::kAbdoliSisoK3), std::invalid_argument);
  CHECK_THROWS_AS(baseline_dof(4, Baseline::kMalekiK3), std::invalid_argument);
  CHECK(baseline_from_name("torrellas") == Baseline::kTorrellas);
  CHECK_THROWS_AS(baseline_from_name("unknown"), std::invalid_argument);
}

TEST_CASE("asymptote scan matches direct evaluation and stays below 64/15") {
  std::vector<AsymptotePoint> points = asymptote_scan(200);
  REQUIRE(points.size() == 199);
  CHECK(points[1].users == 3);
  CHECK(points[1].gap == Rational(83, 30));  // 64/15 - 3/2
  for (const AsymptotePoint& p : points) {
    CHECK(p.sum_dof == sum_dof(p.users));  // incremental route == direct route
    CHECK(p.gap == dof_limit() - p.sum_dof);
    CHECK(p.gap > Rational(0));
  }
}
