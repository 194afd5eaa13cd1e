#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ria/rng.hpp"

namespace ria {

/// Numerical rank threshold: smallest singular value of a normalized matrix.
inline constexpr double kRankTolerance = 1e-9;

class CsitViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// One satisfied transmitter-side channel query, kept for post-run audits.
struct CsitQuery {
  int owner = -1;     // transmitter holding the view
  int rx = -1;        // receiver side of the queried link
  int tx = -1;        // transmitter side of the queried link
  int slot = -1;      // queried slot
  int at_slot = -1;   // wall-clock slot when the query was made
};

/// Global channel state: h[rx][tx][t], i.i.d. circularly-symmetric complex
/// Gaussian entries, unit variance, independent across links and slots.
/// Slots are drawn in order and never redrawn. Receivers (and the simulator
/// physics) read it freely; transmitters only ever see it through a CsitView.
class ChannelTensor {
 public:
  ChannelTensor(int users, int antennas, std::uint64_t seed);

  int users() const { return users_; }
  int antennas() const { return antennas_; }
  int slots_generated() const { return static_cast<int>(slots_.size()); }

  void generate_slot(int t);

  const Eigen::VectorXcd& at(int rx, int tx, int slot) const;

 private:
  int users_;
  int antennas_;
  std::vector<std::vector<Eigen::VectorXcd>> slots_;  // slot -> rx * K + tx
  ComplexGaussian gauss_;
};

/// Monotone slot counter a trial shares between the engine and all views.
class TrialClock {
 public:
  int now() const { return now_; }
  void advance_to(int slot) {
    if (slot < now_) throw std::logic_error("clock cannot move backwards");
    now_ = slot;
  }

 private:
  int now_ = 0;
};

/// Delayed local CSIT window of one transmitter: only its own outgoing links,
/// only slots strictly before the current one. Every satisfied query is
/// logged; anything else throws.
class CsitView {
 public:
  CsitView(const ChannelTensor& channel, int owner, const TrialClock& clock,
           std::vector<CsitQuery>* log)
      : channel_(&channel), owner_(owner), clock_(&clock), log_(log) {}

  int owner() const { return owner_; }

  const Eigen::VectorXcd& query(int rx, int tx, int slot) const;

 private:
  const ChannelTensor* channel_;
  int owner_;
  const TrialClock* clock_;
  std::vector<CsitQuery>* log_;
};

struct Precoder {
  Eigen::MatrixXcd matrix;  // antennas x streams, full column rank
  int slot = -1;
  int owner = -1;
};

/// Random full-rank precoder; redrawn until the column-normalized matrix is
/// numerically full rank.
Precoder make_precoder(int antennas, int streams, ComplexGaussian& rng);

/// Smallest singular value after normalizing rows (or columns for tall
/// matrices are handled by the caller passing the right orientation).
double normalized_min_singular(const Eigen::MatrixXcd& m);

}  // namespace ria
