#include "ria/channel.hpp"

#include <string>

namespace ria {

ChannelTensor::ChannelTensor(int users, int antennas, std::uint64_t seed)
    : users_(users), antennas_(antennas), gauss_(seed) {
  if (users < 2) throw std::invalid_argument("need at least 2 users");
  if (antennas != users && antennas != users - 1) {
    throw std::invalid_argument("antenna count must be K or K-1");
  }
  if (antennas < 1) throw std::invalid_argument("need at least one antenna");
}

void ChannelTensor::generate_slot(int t) {
  if (t != slots_generated()) {
    throw std::logic_error("slots must be generated once each, in order; got slot " +
                           std::to_string(t) + " after " + std::to_string(slots_generated()));
  }
  std::vector<Eigen::VectorXcd> slot(users_ * users_);
  for (int rx = 0; rx < users_; ++rx) {
    for (int tx = 0; tx < users_; ++tx) {
      Eigen::VectorXcd h(antennas_);
      for (int a = 0; a < antennas_; ++a) h(a) = gauss_();
      slot[rx * users_ + tx] = std::move(h);
    }
  }
  slots_.push_back(std::move(slot));
}

const Eigen::VectorXcd& ChannelTensor::at(int rx, int tx, int slot) const {
  if (rx < 0 || rx >= users_ || tx < 0 || tx >= users_) {
    throw std::out_of_range("user index out of range");
  }
  if (slot < 0 || slot >= slots_generated()) throw std::out_of_range("slot not generated");
  return slots_[slot][rx * users_ + tx];
}

const Eigen::VectorXcd& CsitView::query(int rx, int tx, int slot) const {
  if (tx != owner_) {
    throw CsitViolation("local-CSIT violation: Tx" + std::to_string(owner_) +
                        " asked for the channel of Tx" + std::to_string(tx));
  }
  if (slot >= clock_->now()) {
    throw CsitViolation("delayed-CSIT violation: Tx" + std::to_string(owner_) + " asked for slot " +
                        std::to_string(slot) + " at slot " + std::to_string(clock_->now()));
  }
  const Eigen::VectorXcd& h = channel_->at(rx, tx, slot);
  if (log_ != nullptr) log_->push_back({owner_, rx, tx, slot, clock_->now()});
  return h;
}

double normalized_min_singular(const Eigen::MatrixXcd& m) {
  Eigen::MatrixXcd scaled = m;
  bool wide = m.rows() <= m.cols();
  if (wide) {
    for (Eigen::Index r = 0; r < scaled.rows(); ++r) {
      double norm = scaled.row(r).norm();
      if (norm == 0.0) return 0.0;
      scaled.row(r) /= norm;
    }
  } else {
    for (Eigen::Index c = 0; c < scaled.cols(); ++c) {
      double norm = scaled.col(c).norm();
      if (norm == 0.0) return 0.0;
      scaled.col(c) /= norm;
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(scaled);
  return svd.singularValues().tail(1)(0);
}

Precoder make_precoder(int antennas, int streams, ComplexGaussian& rng) {
  if (streams < 1 || streams > antennas) {
    throw std::invalid_argument("precoder needs 1 <= streams <= antennas");
  }
  for (int attempt = 0; attempt < 8; ++attempt) {
    Eigen::MatrixXcd w(antennas, streams);
    for (int r = 0; r < antennas; ++r) {
      for (int c = 0; c < streams; ++c) w(r, c) = rng();
    }
    if (normalized_min_singular(w) > kRankTolerance) return {std::move(w), -1, -1};
  }
  throw std::runtime_error("failed to draw a full-rank precoder");
}

}  // namespace ria
