#pragma once

#include <complex>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ria/channel.hpp"
#include "ria/dof.hpp"
#include "ria/symbols.hpp"

namespace ria {

struct PhaseLabel {
  enum class Part { kFresh, kDelivery, kSimulcast };
  int phase = 0;  // 1..K, using the schedule's own numbering
  Part part = Part::kFresh;

  bool operator==(const PhaseLabel&) const = default;
  std::string to_string() const;
};

struct ActiveTransmission {
  int tx = -1;
  Precoder precoder;
  std::vector<SymbolId> payload;
  Eigen::VectorXcd payload_values;
};

struct SlotRecord {
  int t = -1;
  PhaseLabel phase;
  int round = 0;
  std::vector<int> subset;  // the scheduled receiver set
  std::vector<ActiveTransmission> active;
  std::map<int, Complex> received;       // rx -> scalar, only for listeners
  std::vector<SymbolId> overheard_created;

  const ActiveTransmission& transmission_of(int tx) const;
};

struct PhaseSpan {
  PhaseLabel phase;
  int begin = 0;  // first slot index
  int end = 0;    // one past the last
};

/// Complete record of one protocol execution: every slot, the symbol registry
/// with ground truth, the schedule that produced it, and the transmitter-side
/// channel-access log for auditing.
struct Transcript {
  int users = 0;
  int active = 0;    // phase-1 transmitter count n
  int antennas = 0;
  std::uint64_t seed = 0;
  double noise_stddev = 0.0;
  ReplicationPlan plan;
  std::shared_ptr<ChannelTensor> channel;
  SymbolPool pool{2};
  std::vector<SlotRecord> slots;
  std::vector<PhaseSpan> spans;
  std::vector<CsitQuery> csit_log;

  const PhaseSpan& span(PhaseLabel label) const;
  const SlotRecord& delivery_slot(int origin, const std::vector<int>& set, int round) const;
};

struct GenerationCounts {
  long long higher = 0;       // order-(m+1) symbols created
  long long single_user = 0;  // order-(1,m) symbols created
};

/// Executes the schedule slot by slot. All payload values a transmitter sends
/// are reconstructed on its side of the wall: from its own messages, its own
/// past transmissions, and delayed local channel queries through a CsitView.
/// The engine cross-checks every reconstruction against the registry's ground
/// truth as it goes.
class ProtocolEngine {
 public:
  ProtocolEngine(int users, int active, int antennas, std::uint64_t seed,
                 double noise_stddev = 0.0);

  void run_phase1(int rounds);
  void run_delivery_phase(int order, int rounds);            // phase m-I
  GenerationCounts generate_higher_order(int order, int rounds);
  void run_simulcast_phase(int order);                       // delivers order-(1,m)

  /// Runs the full schedule of replication_plan(users, active).
  void run_all();

  const Transcript& transcript() const { return transcript_; }
  Transcript take_transcript();

 private:
  struct QueueKey {
    int origin;
    std::vector<int> set;
    auto operator<=>(const QueueKey&) const = default;
  };

  void begin_slot(PhaseLabel label, int round, std::vector<int> subset);
  SlotRecord& current_slot() { return transcript_.slots.back(); }
  void finish_phase(PhaseLabel label, int first_slot);

  Complex transmitter_value(int tx, const SymbolId& id);
  Eigen::VectorXcd transmitter_values(int tx, const std::vector<SymbolId>& ids);
  Complex noise();

  Transcript transcript_;
  TrialClock clock_;
  std::vector<CsitView> views_;
  ComplexGaussian proto_rng_;
  ComplexGaussian noise_rng_;

  std::map<QueueKey, std::deque<SymbolId>> delivery_queue_;
  // (origin, target set, round) -> overhearing rx -> side-information id
  std::map<std::tuple<int, std::vector<int>, int>, std::map<int, SymbolId>> generation_inputs_;
  // (set, round) -> origin -> order-(1,m) id
  std::map<std::pair<std::vector<int>, int>, std::map<int, SymbolId>> simulcast_queue_;
  std::vector<std::unordered_map<SymbolId, Complex, SymbolIdHash>> tx_knowledge_;
};

/// Checks protocol feasibility for an antenna count: phase 1 needs n streams,
/// the order-2 stage needs K-1, and only M in {K-1, K} is supported.
void validate_configuration(int users, int active, int antennas);

/// Enumerates all size-r subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int r);

Transcript run_full(int users, int active, int antennas, std::uint64_t seed,
                    double noise_stddev = 0.0);

/// Post-run consistency audit over a transcript.
struct TranscriptAudit {
  long long csit_queries = 0;
  long long csit_violations = 0;   // must be 0: future or non-local accesses
  bool slot_shapes_ok = true;      // per-slot active/payload arity
  bool spans_match_plan = true;    // phase slot spans == replication plan
  bool symbol_counts_ok = true;    // registry counts == CountTable x rounds
  double closure_residual = 0.0;   // worst form-vs-value mismatch
  std::vector<std::string> problems;

  bool clean() const {
    return csit_violations == 0 && slot_shapes_ok && spans_match_plan && symbol_counts_ok &&
           closure_residual < 1e-9;
  }
};

TranscriptAudit audit_transcript(const Transcript& t);

}  // namespace ria
