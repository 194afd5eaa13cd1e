#include "ria/symbols.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ria/channel.hpp"

namespace ria {

namespace {

void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

std::string SymbolId::to_string() const {
  std::ostringstream os;
  os << "u[" << origin << "|" << join(desired);
  if (!known.empty()) os << ";" << join(known);
  os << "]@s" << slot_tag << "r" << round << "c" << component;
  return os.str();
}

std::size_t SymbolIdHash::operator()(const SymbolId& id) const {
  std::size_t h = std::hash<int>{}(id.origin);
  for (int d : id.desired) hash_combine(h, std::hash<int>{}(d * 2 + 1));
  hash_combine(h, 0x5e7);
  for (int k : id.known) hash_combine(h, std::hash<int>{}(k * 2));
  hash_combine(h, std::hash<int>{}(id.round));
  hash_combine(h, std::hash<int>{}(id.slot_tag));
  hash_combine(h, std::hash<int>{}(id.component));
  return h;
}

SymbolPool::SymbolPool(int users) : users_(users), private_values_(users) {}

SymbolRecord& SymbolPool::insert(SymbolRecord rec) {
  auto [it, fresh] = registry_.emplace(rec.id, std::move(rec));
  if (!fresh) throw std::logic_error("symbol registered twice: " + it->first.to_string());
  return it->second;
}

std::vector<SymbolId> SymbolPool::register_private(int tx, int count, ComplexGaussian& rng,
                                                   int round, int slot_tag) {
  if (tx < 0 || tx >= users_) throw std::out_of_range("transmitter index out of range");
  if (count < 1) throw std::invalid_argument("private symbol count must be positive");
  std::vector<SymbolId> ids;
  ids.reserve(count);
  for (int c = 0; c < count; ++c) {
    SymbolId id{tx, {tx}, {}, round, slot_tag, c};
    int index = static_cast<int>(private_values_[tx].size());
    Complex v = rng();
    private_values_[tx].push_back(v);
    private_index_.emplace(id, index);
    insert({id, LinearForm::unit(index), v});
    ids.push_back(std::move(id));
  }
  return ids;
}

const SymbolRecord& SymbolPool::derive_overheard(const SymbolId& id,
                                                 std::span<const SymbolId> parents,
                                                 const Eigen::VectorXcd& channel_row,
                                                 const Eigen::MatrixXcd& precoder) {
  if (static_cast<Eigen::Index>(parents.size()) != precoder.cols()) {
    throw std::invalid_argument("payload size does not match precoder columns");
  }
  if (channel_row.size() != precoder.rows()) {
    throw std::invalid_argument("channel vector does not match precoder rows");
  }
  Eigen::RowVectorXcd row = channel_row.adjoint() * precoder;
  SymbolRecord rec;
  rec.id = id;
  for (std::size_t i = 0; i < parents.size(); ++i) {
    const SymbolRecord& parent = record(parents[i]);
    if (parent.id.origin != id.origin) {
      throw std::invalid_argument("combined symbols must share one origin transmitter");
    }
    rec.form.add_scaled(parent.form, row(static_cast<Eigen::Index>(i)));
    rec.value += row(static_cast<Eigen::Index>(i)) * parent.value;
  }
  return insert(std::move(rec));
}

const CombinationGroup& SymbolPool::make_higher_order(int origin, const std::vector<int>& set,
                                                      std::span<const SymbolId> constituents,
                                                      ComplexGaussian& rng, int round,
                                                      int slot_tag) {
  std::vector<int> sorted_set = set;
  std::sort(sorted_set.begin(), sorted_set.end());
  const int m = static_cast<int>(sorted_set.size()) - 1;
  if (m < 2) throw std::invalid_argument("generation needs a receiver set of at least 3");
  if (std::find(sorted_set.begin(), sorted_set.end(), origin) == sorted_set.end()) {
    throw std::invalid_argument("origin must belong to the receiver set");
  }
  if (static_cast<int>(constituents.size()) != m) {
    throw std::invalid_argument("expected exactly one constituent per co-receiver");
  }

  // The constituents must be exactly u[origin | set\j' ; j'] for j' in set\origin.
  std::vector<SymbolId> ordered(constituents.begin(), constituents.end());
  std::sort(ordered.begin(), ordered.end(), [](const SymbolId& a, const SymbolId& b) {
    return a.known.at(0) < b.known.at(0);
  });
  std::size_t pos = 0;
  for (int j : sorted_set) {
    if (j == origin) continue;
    const SymbolId& c = ordered.at(pos++);
    if (!contains(c)) throw std::invalid_argument("constituent not registered: " + c.to_string());
    std::vector<int> expected_desired;
    for (int u : sorted_set) {
      if (u != j) expected_desired.push_back(u);
    }
    if (c.origin != origin || c.known != std::vector<int>{j} || c.desired != expected_desired) {
      throw std::invalid_argument("constituent does not match the group: " + c.to_string());
    }
  }

  Eigen::MatrixXcd lc(m, m);
  bool ok = false;
  for (int attempt = 0; attempt < 8 && !ok; ++attempt) {
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < m; ++c) lc(r, c) = rng();
    }
    ok = normalized_min_singular(lc) > kRankTolerance;
  }
  if (!ok) throw std::runtime_error("failed to draw a full-rank combination matrix");

  CombinationGroup group;
  group.origin = origin;
  group.set = sorted_set;
  group.round = round;
  group.constituents = ordered;
  group.coefficients = lc;

  auto combine = [&](int row, const SymbolId& id) {
    SymbolRecord rec;
    rec.id = id;
    for (int c = 0; c < m; ++c) {
      const SymbolRecord& parent = record(ordered[c]);
      rec.form.add_scaled(parent.form, lc(row, c));
      rec.value += lc(row, c) * parent.value;
    }
    insert(std::move(rec));
  };

  for (int r = 0; r < m - 1; ++r) {
    SymbolId id{origin, sorted_set, {}, round, slot_tag, r};
    combine(r, id);
    group.higher.push_back(std::move(id));
  }
  std::vector<int> known;
  for (int u : sorted_set) {
    if (u != origin) known.push_back(u);
  }
  group.single_user = SymbolId{origin, {origin}, known, round, slot_tag, 0};
  combine(m - 1, group.single_user);

  int index = static_cast<int>(groups_.size());
  groups_.push_back(std::move(group));
  const CombinationGroup& stored = groups_.back();
  for (const SymbolId& id : stored.higher) group_index_.emplace(id, index);
  group_index_.emplace(stored.single_user, index);
  return stored;
}

const SymbolRecord& SymbolPool::record(const SymbolId& id) const {
  auto it = registry_.find(id);
  if (it == registry_.end()) throw std::out_of_range("unknown symbol: " + id.to_string());
  return it->second;
}

int SymbolPool::private_index(const SymbolId& id) const {
  auto it = private_index_.find(id);
  if (it == private_index_.end()) throw std::out_of_range("not a private symbol: " + id.to_string());
  return it->second;
}

const CombinationGroup* SymbolPool::group_of(const SymbolId& id) const {
  auto it = group_index_.find(id);
  return it == group_index_.end() ? nullptr : &groups_[it->second];
}

long long SymbolPool::count(SymbolKind kind) const {
  long long n = 0;
  for (const auto& [id, rec] : registry_) n += (id.kind() == kind) ? 1 : 0;
  return n;
}

long long SymbolPool::count_order(int order) const {
  long long n = 0;
  for (const auto& [id, rec] : registry_) {
    n += (id.kind() == SymbolKind::kOrder && id.order() == order) ? 1 : 0;
  }
  return n;
}

long long SymbolPool::count_single_user(int order) const {
  long long n = 0;
  for (const auto& [id, rec] : registry_) {
    n += (id.kind() == SymbolKind::kSingleUser && static_cast<int>(id.known.size()) == order) ? 1 : 0;
  }
  return n;
}

double SymbolPool::max_closure_residual() const {
  double worst = 0.0;
  for (const auto& [id, rec] : registry_) {
    Complex truth = rec.form.evaluate(private_values_[id.origin]);
    double rel = std::abs(rec.value - truth) / (1.0 + std::abs(truth));
    worst = std::max(worst, rel);
  }
  return worst;
}

}  // namespace ria
