#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ria/rng.hpp"

namespace ria {

using Complex = std::complex<double>;

enum class SymbolKind {
  kPrivate,     // fresh message symbol of one receiver
  kOrder,       // order-m symbol u[i|S_m], m >= 2: desired by S_m, known by none
  kOverheard,   // side information u[i|S_m;j]: what Rx j observed of a slot serving S_m
  kSingleUser,  // order-(1,m) symbol u[i|i;S_m]: wanted by i, reconstructible at S_m
};

/// Identity of every symbol in a run. Sets are kept sorted; replication round
/// and creation slot keep repeated rounds distinct.
struct SymbolId {
  int origin = -1;            // transmitter whose message the symbol is made of
  std::vector<int> desired;   // receivers that want it
  std::vector<int> known;     // receivers that can already reconstruct it
  int round = 0;
  int slot_tag = -1;          // slot of creation (for generated symbols: slot of the
                              // generation boundary)
  int component = 0;          // index within a multi-symbol batch

  SymbolKind kind() const {
    if (known.empty()) return desired.size() == 1 ? SymbolKind::kPrivate : SymbolKind::kOrder;
    return desired.size() == 1 ? SymbolKind::kSingleUser : SymbolKind::kOverheard;
  }
  int order() const { return static_cast<int>(desired.size()); }

  bool operator==(const SymbolId&) const = default;
  std::string to_string() const;
};

struct SymbolIdHash {
  std::size_t operator()(const SymbolId& id) const;
};

/// Exact linear dependence of a symbol on the private symbols of its origin
/// transmitter (every symbol in the protocol is built from one user's message).
class LinearForm {
 public:
  static LinearForm unit(int private_index) {
    LinearForm f;
    f.coef_[private_index] = Complex(1.0, 0.0);
    return f;
  }

  void add_scaled(const LinearForm& other, Complex scale) {
    for (const auto& [idx, c] : other.coef_) coef_[idx] += scale * c;
  }

  Complex evaluate(const std::vector<Complex>& private_values) const {
    Complex acc(0.0, 0.0);
    for (const auto& [idx, c] : coef_) acc += c * private_values.at(idx);
    return acc;
  }

  const std::map<int, Complex>& coefficients() const { return coef_; }

 private:
  std::map<int, Complex> coef_;
};

struct SymbolRecord {
  SymbolId id;
  LinearForm form;
  Complex value{0.0, 0.0};
};

/// One distributed generation step: for a fixed (origin, receiver set, round),
/// the m constituents u[k|S\j';j'] are combined by an m x m full-rank matrix
/// whose first m-1 rows define the higher-order symbols and whose last row
/// defines the order-(1,m) symbol. The matrix is a globally known constant.
struct CombinationGroup {
  int origin = -1;
  std::vector<int> set;  // S, sorted, |S| = m + 1
  int round = 0;
  std::vector<SymbolId> constituents;  // sorted by the overhearing receiver j'
  std::vector<SymbolId> higher;        // m-1 order-(m+1) ids
  SymbolId single_user;                // order-(1,m) id
  Eigen::MatrixXcd coefficients;       // m x m
};

/// Registry of every symbol with its ground-truth linear form and value.
/// Values are maintained incrementally (each derived symbol's value is the
/// same combination of its parents' values the physics applied), and the
/// closure audit re-evaluates every form on the raw private values.
class SymbolPool {
 public:
  explicit SymbolPool(int users);

  int users() const { return users_; }

  std::vector<SymbolId> register_private(int tx, int count, ComplexGaussian& rng, int round,
                                         int slot_tag);

  /// Registers the linear image of a payload through an effective receive row
  /// (channel_row^H * precoder). Used both for the order-2 symbols phase 1
  /// leaves behind and for the side information overheard in later phases.
  const SymbolRecord& derive_overheard(const SymbolId& id, std::span<const SymbolId> parents,
                                       const Eigen::VectorXcd& channel_row,
                                       const Eigen::MatrixXcd& precoder);

  /// Draws a fresh full-rank combination matrix (redrawing at most 8 times)
  /// and registers the m-1 order-(m+1) symbols plus the order-(1,m) symbol
  /// for one (origin, set, round) group.
  const CombinationGroup& make_higher_order(int origin, const std::vector<int>& set,
                                            std::span<const SymbolId> constituents,
                                            ComplexGaussian& rng, int round, int slot_tag);

  bool contains(const SymbolId& id) const { return registry_.count(id) > 0; }
  const SymbolRecord& record(const SymbolId& id) const;
  Complex value(const SymbolId& id) const { return record(id).value; }

  const std::vector<Complex>& private_values(int tx) const { return private_values_.at(tx); }
  int private_index(const SymbolId& id) const;

  const std::vector<CombinationGroup>& groups() const { return groups_; }
  const CombinationGroup* group_of(const SymbolId& id) const;  // null if not generated

  long long count(SymbolKind kind) const;
  long long count_order(int order) const;        // order-m symbols, m >= 2
  long long count_single_user(int order) const;  // order-(1,m) symbols

  /// Largest relative mismatch between stored values and forms re-evaluated
  /// on the private ground truth.
  double max_closure_residual() const;

  std::size_t size() const { return registry_.size(); }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (const auto& [id, rec] : registry_) fn(rec);
  }

 private:
  SymbolRecord& insert(SymbolRecord rec);

  int users_;
  std::unordered_map<SymbolId, SymbolRecord, SymbolIdHash> registry_;
  std::unordered_map<SymbolId, int, SymbolIdHash> private_index_;
  std::vector<std::vector<Complex>> private_values_;
  std::vector<CombinationGroup> groups_;
  std::unordered_map<SymbolId, int, SymbolIdHash> group_index_;
};

}  // namespace ria
