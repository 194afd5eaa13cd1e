#include "ria/dof.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ria {

namespace {

void require_users(int users) {
  if (users < 2) throw std::domain_error("user count must be at least 2");
}

mpz_class binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

long long to_ll(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("count does not fit in a machine integer");
  return z.get_si();
}

long long binomial_ll(int n, int k) { return to_ll(binomial(n, k)); }

}  // namespace

Rational order2_overhead(int users) {
  require_users(users);
  Rational sum(0);
  for (int l = 2; l <= users - 1; ++l) {
    sum += Rational(users - l, static_cast<long long>(l - 1) * (l + 1));
  }
  return sum / Rational(users - 1);
}

Rational order2_dof(int users) {
  return inverse(Rational(1) - order2_overhead(users));
}

Rational order_dof(int users, int order) {
  require_users(users);
  if (order < 2 || order > users) throw std::domain_error("order must lie in [2, K]");
  // Backward recursion from the order-K base case (one symbol per slot).
  Rational dof(1);
  for (int m = users - 1; m >= order; --m) {
    Rational denom = Rational(m) + Rational(users - m, m + 1) +
                     Rational(static_cast<long long>(m - 1) * (users - m)) / dof;
    dof = Rational(static_cast<long long>(m) * (users - m + 1)) / denom;
  }
  return dof;
}

Rational delivery_overhead(int users, int order) {
  require_users(users);
  if (order < 2 || order > users - 1) throw std::domain_error("order must lie in [2, K-1]");
  // Telescoped form: the recursion's product term vanishes at order K, leaving
  // a single weighted sum over the remaining stages.
  Rational scale(order - 1, users - order + 1);
  Rational sum(0);
  for (int l = order; l <= users - 1; ++l) {
    sum += Rational(users - l, static_cast<long long>(l + 1) * (l - 1));
  }
  return scale * sum;
}

Rational sum_dof_objective(int users, int active, const Rational& order2) {
  return Rational(static_cast<long long>(active) * active) /
         (Rational(1) + Rational(static_cast<long long>(active) * (active - 1)) / order2);
}

DofBreakdown sum_dof_breakdown(int users) {
  require_users(users);
  DofBreakdown b;
  b.users = users;
  b.order2 = order2_dof(users);

  Rational twice = Rational(2) * b.order2;
  b.floor2x = to_ll(twice.floor());
  b.ceil2x = to_ll(twice.ceil());

  // Candidates are clamped to the feasible transmitter counts [2, K];
  // ties go to the smaller n (fewer antennas needed in phase 1).
  std::vector<long long> candidates;
  for (long long c : {b.floor2x, b.ceil2x}) {
    long long clamped = std::clamp<long long>(c, 2, users);
    if (std::find(candidates.begin(), candidates.end(), clamped) == candidates.end()) {
      candidates.push_back(clamped);
    }
  }
  std::sort(candidates.begin(), candidates.end());

  b.n_star = 0;
  for (long long n : candidates) {
    Rational value = sum_dof_objective(users, static_cast<int>(n), b.order2);
    if (b.n_star == 0 || value > b.sum_dof) {
      b.n_star = n;
      b.sum_dof = value;
    }
  }

  b.order_dof.reserve(users - 1);
  for (int m = 2; m <= users; ++m) b.order_dof.push_back(order_dof(users, m));

  b.min_antennas = (users >= 3) ? std::max<long long>(b.n_star, users - 1) : users;
  return b;
}

Rational sum_dof(int users) { return sum_dof_breakdown(users).sum_dof; }

const CountTable::Row& CountTable::row(int order) const {
  if (order < 2 || order > users) throw std::domain_error("order must lie in [2, K]");
  return rows.at(order - 2);
}

CountTable phase_counts(int users, int active) {
  require_users(users);
  if (active < 2 || active > users) throw std::domain_error("active transmitter count must lie in [2, K]");
  CountTable t;
  t.users = users;
  t.active = active;
  mpz_class choose_n = binomial(users, active);
  t.fresh_symbols = to_ll(mpz_class(choose_n * active * active));
  t.fresh_slots = to_ll(choose_n);
  t.order2_symbols = to_ll(mpz_class(choose_n * active * (active - 1)));
  for (int m = 2; m <= users; ++m) {
    CountTable::Row row;
    row.order = m;
    row.delivery_slots = to_ll(mpz_class(binomial(users, m) * m));
    row.delivered_symbols = row.delivery_slots * (users - m + 1);
    row.next_order_generated = to_ll(mpz_class(binomial(users, m + 1) * (m - 1) * (m + 1)));
    row.single_user_generated = to_ll(mpz_class(binomial(users, m + 1) * (m + 1)));
    t.rows.push_back(row);
  }
  return t;
}

ReplicationPlan replication_plan(int users, int active) {
  require_users(users);
  if (active < 2 || active > users) throw std::domain_error("active transmitter count must lie in [2, K]");

  // Solve the per-order balance chain with exact rationals, then scale to the
  // smallest positive integer solution. The solution space is a single ray:
  //   order m stage leaves (m-1) order-(m+1) symbols per group and round,
  //   the order-(m+1) stage consumes (K-m) per group and round.
  std::vector<Rational> rounds(users - 1);  // index m-2 for m = 2..K
  rounds[0] = Rational(1);
  for (int m = 2; m <= users - 1; ++m) {
    rounds[m - 1] = rounds[m - 2] * Rational(m - 1, users - m);
  }
  // Phase 1 supplies order-2 symbols: r1 * n(n-1)*C(K,n) = r2 * (K-1)*2*C(K,2).
  Rational phase1 = rounds[0] *
                    Rational(mpz_class(binomial(users, 2) * 2 * (users - 1)),
                             mpz_class(binomial(users, active) * active * (active - 1)));

  mpz_class scale = phase1.denominator();
  for (const Rational& r : rounds) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), r.denominator().get_mpz_t());

  std::vector<mpz_class> integral;
  integral.push_back(mpz_class(phase1.numerator() * (scale / phase1.denominator())));
  for (const Rational& r : rounds) {
    integral.push_back(mpz_class(r.numerator() * (scale / r.denominator())));
  }
  mpz_class g = integral[0];
  for (const mpz_class& v : integral) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  for (mpz_class& v : integral) v /= g;

  ReplicationPlan plan;
  plan.users = users;
  plan.active = active;
  plan.phase1_rounds = to_ll(integral[0]);
  for (int m = 2; m <= users; ++m) plan.delivery_rounds.push_back(to_ll(integral[m - 1]));

  plan.phase1_slots = plan.phase1_rounds * binomial_ll(users, active);
  plan.total_symbols = plan.phase1_rounds * binomial_ll(users, active) * active * active;
  plan.total_slots = plan.phase1_slots;
  for (int m = 2; m <= users; ++m) {
    long long slots = plan.delivery_round(m) * m * binomial_ll(users, m);
    plan.delivery_slots.push_back(slots);
    plan.total_slots += slots;
  }
  for (int m = 2; m <= users - 1; ++m) {
    // One slot delivers the m+1 order-(1,m) symbols of one group.
    long long slots = plan.delivery_round(m) * binomial_ll(users, m + 1);
    plan.simulcast_slots.push_back(slots);
    plan.total_slots += slots;
  }
  return plan;
}

Rational baseline_dof(int users, Baseline scheme) {
  require_users(users);
  switch (scheme) {
    case Baseline::kMatBroadcast: {
      Rational harmonic(0);
      for (int i = 1; i <= users; ++i) harmonic += Rational(1, i);
      return Rational(users) / harmonic;
    }
    case Baseline::kTwoPhaseMiso:
      return Rational(static_cast<long long>(users) * users,
                      static_cast<long long>(users) * users - users + 1);
    case Baseline::kTorrellas:
      return Rational(2LL * users, users + 1);
    case Baseline::kAbdoliSisoK3:
      if (users != 3) throw std::invalid_argument("scheme is only quoted for K = 3");
      return Rational(36, 31);
    case Baseline::kMalekiK3:
      if (users != 3) throw std::invalid_argument("scheme is only quoted for K = 3");
      return Rational(9, 8);
  }
  throw std::invalid_argument("unknown baseline scheme");
}

std::string baseline_name(Baseline scheme) {
  switch (scheme) {
    case Baseline::kMatBroadcast: return "mat_bc";
    case Baseline::kTwoPhaseMiso: return "two_phase_misoic";
    case Baseline::kTorrellas: return "torrellas";
    case Baseline::kAbdoliSisoK3: return "abdoli_siso_k3";
    case Baseline::kMalekiK3: return "maleki_k3";
  }
  throw std::invalid_argument("unknown baseline scheme");
}

Baseline baseline_from_name(const std::string& name) {
  for (Baseline b : all_baselines()) {
    if (baseline_name(b) == name) return b;
  }
  throw std::invalid_argument("unknown baseline scheme: " + name);
}

std::vector<Baseline> all_baselines() {
  return {Baseline::kMatBroadcast, Baseline::kTwoPhaseMiso, Baseline::kTorrellas,
          Baseline::kAbdoliSisoK3, Baseline::kMalekiK3};
}

Rational dof_limit() { return Rational(64, 15); }

void asymptote_scan(int k_max, const std::function<void(const AsymptotePoint&)>& sink) {
  require_users(k_max);
  // Incremental accumulation: the order-2 overhead at K needs
  //   sum_{l=2}^{K-1} (K - l) / (l^2 - 1)  =  K * S1 - S2,
  // with S1 = sum 1/(l^2-1) and S2 = sum l/(l^2-1), both extendable by one
  // term per step.
  Rational s1(0), s2(0);
  Rational limit = dof_limit();
  for (int k = 2; k <= k_max; ++k) {
    if (k > 2) {
      int l = k - 1;
      Rational den(static_cast<long long>(l) * l - 1);
      s1 += inverse(den);
      s2 += Rational(l) / den;
    }
    Rational overhead = (Rational(k) * s1 - s2) / Rational(k - 1);
    Rational order2 = inverse(Rational(1) - overhead);

    Rational twice = Rational(2) * order2;
    long long floor2x = to_ll(twice.floor());
    long long ceil2x = to_ll(twice.ceil());

    AsymptotePoint p;
    p.users = k;
    bool first = true;
    for (long long c : {floor2x, ceil2x}) {
      int n = static_cast<int>(std::clamp<long long>(c, 2, k));
      Rational value = sum_dof_objective(k, n, order2);
      if (first || value > p.sum_dof) {
        p.sum_dof = value;
        first = false;
      }
    }
    p.gap = limit - p.sum_dof;
    sink(p);
  }
}

std::vector<AsymptotePoint> asymptote_scan(int k_max) {
  std::vector<AsymptotePoint> points;
  points.reserve(k_max - 1);
  asymptote_scan(k_max, [&points](const AsymptotePoint& p) { points.push_back(p); });
  return points;
}

}  // namespace ria
