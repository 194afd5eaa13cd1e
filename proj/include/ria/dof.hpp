#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ria/rational.hpp"

namespace ria {

/// DoF of the order-2 delivery stage for a K-user system: the value the whole
/// K-phase recursion bottoms out to, evaluated in exact arithmetic.
Rational order2_dof(int users);

/// Fraction of the order-2 stage spent forwarding higher-order symbols,
/// as a closed-form sum. order2_dof(k) == 1 / (1 - order2_overhead(k)).
Rational order2_overhead(int users);

/// DoF of delivering order-m symbols, 2 <= m <= K, via the backward recursion
/// that terminates at order-K (one symbol per slot, useful to everyone).
Rational order_dof(int users, int order);

/// Overhead fraction of the order-m stage via the telescoped product/sum
/// closed form. Independent route: 1/(1 - delivery_overhead(k, m)) must equal
/// order_dof(k, m) for all 2 <= m <= k-1.
Rational delivery_overhead(int users, int order);

struct DofBreakdown {
  int users = 0;
  Rational order2;        // DoF of the order-2 stage
  long long floor2x = 0;  // floor(2 * order2)
  long long ceil2x = 0;   // ceil(2 * order2)
  long long n_star = 0;   // optimal number of active transmitters in phase 1
  Rational sum_dof;       // achieved sum DoF at n_star
  std::vector<Rational> order_dof;  // index m-2 holds the order-m value, m = 2..K
  long long min_antennas = 0;
};

/// Sum-DoF objective for a given number of active phase-1 transmitters.
Rational sum_dof_objective(int users, int active, const Rational& order2);

/// Evaluates the achievable sum DoF: picks the best integer transmitter count
/// among floor/ceil of twice the order-2 DoF (clamped to [2, K], ties broken
/// toward fewer antennas) and reports the full breakdown.
DofBreakdown sum_dof_breakdown(int users);

/// Convenience accessor for the achieved sum DoF alone.
Rational sum_dof(int users);

/// Per-phase symbol and slot counts for one scheduling round.
struct CountTable {
  int users = 0;
  int active = 0;             // n
  long long fresh_symbols = 0;   // private symbols sent in phase 1
  long long fresh_slots = 0;     // phase-1 slots
  long long order2_symbols = 0;  // order-2 symbols left behind by phase 1
  struct Row {
    int order = 0;                        // m
    long long delivery_slots = 0;         // slots of the order-m delivery stage
    long long delivered_symbols = 0;      // order-m symbols consumed by it
    long long next_order_generated = 0;   // order-(m+1) symbols it leaves behind
    long long single_user_generated = 0;  // order-(1,m) symbols it leaves behind
  };
  std::vector<Row> rows;  // m = 2..K
  const Row& row(int order) const;
};

CountTable phase_counts(int users, int active);

/// Integer round counts per phase that make every stage's symbol production
/// exactly match downstream consumption, so the fractional DoF accounting is
/// realized by a finite schedule.
struct ReplicationPlan {
  int users = 0;
  int active = 0;
  long long phase1_rounds = 0;
  std::vector<long long> delivery_rounds;   // index m-2: rounds of the order-m stage, m = 2..K
  long long phase1_slots = 0;
  std::vector<long long> delivery_slots;    // index m-2: order-m delivery slots, m = 2..K
  std::vector<long long> simulcast_slots;   // index m-2: order-(1,m) slots, m = 2..K-1 (empty for K=2)
  long long total_symbols = 0;
  long long total_slots = 0;

  long long delivery_round(int order) const { return delivery_rounds.at(order - 2); }
  Rational ratio() const { return Rational(total_symbols, total_slots); }
};

ReplicationPlan replication_plan(int users, int active);

/// Prior-art sum-DoF baselines quoted for comparison.
enum class Baseline {
  kMatBroadcast,    // broadcast channel, K / (1 + 1/2 + ... + 1/K)
  kTwoPhaseMiso,    // two-phase MISO interference channel, K^2 / (K^2 - K + 1)
  kTorrellas,       // two-phase scheme, 2K / (K + 1)
  kAbdoliSisoK3,    // K-phase SISO result, fixed 36/31 at K = 3
  kMalekiK3,        // two-phase SISO result, fixed 9/8 at K = 3
};

Rational baseline_dof(int users, Baseline scheme);
std::string baseline_name(Baseline scheme);
Baseline baseline_from_name(const std::string& name);
std::vector<Baseline> all_baselines();

struct AsymptotePoint {
  int users = 0;
  Rational sum_dof;
  Rational gap;  // 64/15 - sum_dof
};

/// Streams (k, d_s(k), 64/15 - d_s(k)) for k = 2..k_max. The order-2 overhead
/// sum is accumulated incrementally so a sweep to k_max costs O(k_max)
/// big-rational operations instead of O(k_max^2).
void asymptote_scan(int k_max, const std::function<void(const AsymptotePoint&)>& sink);

/// Convenience form collecting all points; intended for modest k_max.
std::vector<AsymptotePoint> asymptote_scan(int k_max);

/// The scheme's limiting sum DoF, 64/15.
Rational dof_limit();

}  // namespace ria
