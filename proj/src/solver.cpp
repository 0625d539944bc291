#include "daisy/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

#include "daisy/errors.hpp"

namespace daisy {

SolverConfig SolverConfig::from_environment() {
  SolverConfig cfg;
  if (const char* env = std::getenv("DAISY_NODE_LIMIT"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const auto value = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0' || env[0] == '-')
      throw InvalidInput(std::string("DAISY_NODE_LIMIT must be a non-negative integer, got '") + env + "'");
    cfg.node_limit = value;
  }
  return cfg;
}

namespace {

using Clock = std::chrono::steady_clock;

// Subtrees below this many branching decisions become independent tasks.
constexpr unsigned kSplitDepth = 8;
constexpr std::uint64_t kNodeBatch = 256;

// Incumbent key: value in the high half; the low half ranks owners so that
// the greedy incumbent beats every task and lower task indices beat higher
// ones. A larger key is a better incumbent.
constexpr std::uint64_t kLowMask = 0xFFFFFFFFull;
constexpr std::uint64_t make_key(std::uint64_t value, std::int64_t owner) {
  return (value << 32) | (kLowMask - static_cast<std::uint64_t>(owner + 1));
}
constexpr std::uint64_t key_value(std::uint64_t key) { return key >> 32; }
constexpr std::int64_t key_owner(std::uint64_t key) {
  return static_cast<std::int64_t>(kLowMask - (key & kLowMask)) - 1;
}

/// Greedy packing of live constraints that are pairwise disjoint on their
/// undecided items. `stamp` is scratch indexed by item; `epoch` must be fresh.
template <typename IsLive, typename IsUndecided, typename UndecidedCount>
std::uint64_t greedy_packing(const std::vector<std::vector<Item>>& constraints, IsLive&& is_live,
                             IsUndecided&& is_undecided, UndecidedCount&& undecided_count,
                             std::vector<std::vector<std::uint32_t>>& buckets, std::vector<std::uint32_t>& stamp,
                             std::uint32_t epoch) {
  for (auto& b : buckets) b.clear();
  for (std::uint32_t c = 0; c < constraints.size(); ++c)
    if (is_live(c)) buckets[undecided_count(c)].push_back(c);
  std::uint64_t packed = 0;
  for (const auto& bucket : buckets) {
    for (std::uint32_t c : bucket) {
      bool free = true;
      for (Item y : constraints[c])
        if (is_undecided(y) && stamp[y] == epoch) {
          free = false;
          break;
        }
      if (!free) continue;
      for (Item y : constraints[c])
        if (is_undecided(y)) stamp[y] = epoch;
      ++packed;
    }
  }
  return packed;
}

std::size_t max_constraint_size(const ConstraintSystem& cs) {
  std::size_t out = 0;
  for (const auto& c : cs.constraints()) out = std::max(out, c.size());
  return out;
}

struct Step {
  Item item;
  bool include;
};

struct Task {
  std::vector<Step> root;
  std::vector<Step> branches;
};

struct Shared {
  const ConstraintSystem& cs;
  std::vector<std::vector<Item>> item_constraints;
  std::size_t max_size = 0;
  std::uint64_t node_limit = 0;
  std::atomic<std::uint64_t> best_key{0};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> aborted{false};

  Shared(const ConstraintSystem& system, std::uint64_t limit) : cs(system), node_limit(limit) {
    item_constraints.resize(cs.item_count());
    for (std::uint32_t c = 0; c < cs.constraints().size(); ++c)
      for (Item i : cs.constraints()[c]) item_constraints[i].push_back(c);
    max_size = max_constraint_size(cs);
  }
};

class Search {
 public:
  Search(Shared& shared, std::int64_t task)
      : shared_(shared),
        constraints_(shared.cs.constraints()),
        task_(task),
        state_(shared.cs.item_count(), ItemState::undecided),
        n_in_(constraints_.size(), 0),
        n_out_(constraints_.size(), 0),
        live_deg_(shared.cs.item_count(), 0),
        stamp_(shared.cs.item_count(), 0),
        buckets_(shared.max_size + 1),
        undecided_(shared.cs.item_count()) {
    for (Item i = 0; i < state_.size(); ++i)
      live_deg_[i] = static_cast<std::uint32_t>(shared.item_constraints[i].size());
    for (const auto& c : constraints_)
      if (c.size() == 1 && state_[c[0]] == ItemState::undecided) exclude(c[0]);
  }

  /// Applies a task's decisions. False when the task is infeasible.
  bool replay(const Task& task) {
    for (const Step& s : task.root) {
      if (s.include) {
        if (state_[s.item] != ItemState::undecided) return false;
        include(s.item);
      } else if (state_[s.item] == ItemState::undecided) {
        exclude(s.item);
      }
    }
    for (const Step& s : task.branches) {
      include_free_items();
      if (s.include)
        include(s.item);
      else
        exclude(s.item);
    }
    return true;
  }

  void expand(std::vector<Step>& path, unsigned depth, const std::vector<Step>& root, std::vector<Task>& out) {
    const std::size_t mark = trail_.size();
    include_free_items();
    if (undecided_ == 0 || depth == kSplitDepth) {
      out.push_back(Task{root, path});
      undo_to(mark);
      return;
    }
    const Item x = pick_branch_item();
    const std::size_t after_free = trail_.size();
    include(x);
    path.push_back({x, true});
    expand(path, depth + 1, root, out);
    path.pop_back();
    undo_to(after_free);
    exclude(x);
    path.push_back({x, false});
    expand(path, depth + 1, root, out);
    path.pop_back();
    undo_to(mark);
  }

  void dfs() {
    if (shared_.aborted.load(std::memory_order_relaxed)) return;
    if (++local_nodes_ == kNodeBatch) flush_nodes();
    const std::size_t mark = trail_.size();
    include_free_items();
    if (undecided_ == 0) {
      record();
      undo_to(mark);
      return;
    }
    const std::uint64_t bound = included_ + undecided_ - packing();
    if (make_key(bound, task_) <= shared_.best_key.load(std::memory_order_relaxed)) {
      undo_to(mark);
      return;
    }
    const Item x = pick_branch_item();
    const std::size_t after_free = trail_.size();
    include(x);
    dfs();
    undo_to(after_free);
    exclude(x);
    dfs();
    undo_to(mark);
  }

  void flush_nodes() {
    const auto total = shared_.nodes.fetch_add(local_nodes_, std::memory_order_relaxed) + local_nodes_;
    local_nodes_ = 0;
    if (total >= shared_.node_limit) shared_.aborted.store(true, std::memory_order_relaxed);
  }

  std::vector<Item> witness;

 private:
  void include(Item x) {
    state_[x] = ItemState::included;
    trail_.push_back(x);
    --undecided_;
    ++included_;
    forced_.clear();
    for (std::uint32_t c : shared_.item_constraints[x]) {
      ++n_in_[c];
      if (n_out_[c] == 0 && n_in_[c] + 1 == constraints_[c].size())
        for (Item y : constraints_[c])
          if (state_[y] == ItemState::undecided) {
            forced_.push_back(y);
            break;
          }
    }
    // Exclusions never force anything further.
    for (std::size_t k = 0; k < forced_.size(); ++k)
      if (state_[forced_[k]] == ItemState::undecided) exclude(forced_[k]);
  }

  void exclude(Item x) {
    state_[x] = ItemState::excluded;
    trail_.push_back(x);
    --undecided_;
    for (std::uint32_t c : shared_.item_constraints[x])
      if (n_out_[c]++ == 0)
        for (Item y : constraints_[c]) --live_deg_[y];
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      const Item x = trail_.back();
      trail_.pop_back();
      if (state_[x] == ItemState::included) {
        for (std::uint32_t c : shared_.item_constraints[x]) --n_in_[c];
        --included_;
      } else {
        for (std::uint32_t c : shared_.item_constraints[x])
          if (--n_out_[c] == 0)
            for (Item y : constraints_[c]) ++live_deg_[y];
      }
      state_[x] = ItemState::undecided;
      ++undecided_;
    }
  }

  void include_free_items() {
    for (Item i = 0; i < state_.size(); ++i)
      if (state_[i] == ItemState::undecided && live_deg_[i] == 0) include(i);
  }

  Item pick_branch_item() const {
    Item best = 0;
    std::uint32_t best_deg = 0;
    for (Item i = 0; i < state_.size(); ++i)
      if (state_[i] == ItemState::undecided && live_deg_[i] > best_deg) {
        best = i;
        best_deg = live_deg_[i];
      }
    return best;
  }

  std::uint64_t packing() {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
    return greedy_packing(
        constraints_, [&](std::uint32_t c) { return n_out_[c] == 0; },
        [&](Item y) { return state_[y] == ItemState::undecided; },
        [&](std::uint32_t c) { return constraints_[c].size() - n_in_[c]; }, buckets_, stamp_, epoch_);
  }

  void record() {
    const std::uint64_t key = make_key(included_, task_);
    std::uint64_t current = shared_.best_key.load();
    while (key > current)
      if (shared_.best_key.compare_exchange_weak(current, key)) {
        witness.clear();
        for (Item i = 0; i < state_.size(); ++i)
          if (state_[i] == ItemState::included) witness.push_back(i);
        return;
      }
  }

  Shared& shared_;
  const std::vector<std::vector<Item>>& constraints_;
  std::int64_t task_;
  std::vector<ItemState> state_;
  std::vector<std::uint32_t> n_in_;
  std::vector<std::uint32_t> n_out_;
  std::vector<std::uint32_t> live_deg_;
  std::vector<std::uint32_t> stamp_;
  std::vector<std::vector<std::uint32_t>> buckets_;
  std::vector<Item> trail_;
  std::vector<Item> forced_;
  std::uint64_t undecided_ = 0;
  std::uint64_t included_ = 0;
  std::uint64_t local_nodes_ = 0;
  std::uint32_t epoch_ = 0;
};

/// Greedy transversal (most unhit constraints first, lowest index on ties),
/// then re-admits excluded items that complete no constraint. Returns the
/// avoiding complement.
std::vector<Item> greedy_avoiding_set(const ConstraintSystem& cs, const std::vector<std::vector<Item>>& item_constraints) {
  const auto& constraints = cs.constraints();
  std::vector<bool> hit(constraints.size(), false);
  std::vector<bool> excluded(cs.item_count(), false);
  std::vector<std::uint32_t> unhit_deg(cs.item_count());
  for (Item i = 0; i < cs.item_count(); ++i) unhit_deg[i] = static_cast<std::uint32_t>(item_constraints[i].size());
  std::vector<Item> order;
  for (;;) {
    Item best = 0;
    std::uint32_t best_deg = 0;
    for (Item i = 0; i < cs.item_count(); ++i)
      if (!excluded[i] && unhit_deg[i] > best_deg) {
        best = i;
        best_deg = unhit_deg[i];
      }
    if (best_deg == 0) break;
    excluded[best] = true;
    order.push_back(best);
    for (std::uint32_t c : item_constraints[best]) {
      if (hit[c]) continue;
      hit[c] = true;
      for (Item y : constraints[c]) --unhit_deg[y];
    }
  }
  std::vector<std::uint32_t> excluded_in(constraints.size(), 0);
  for (std::uint32_t c = 0; c < constraints.size(); ++c)
    for (Item y : constraints[c]) excluded_in[c] += excluded[y] ? 1 : 0;
  std::sort(order.begin(), order.end());
  for (Item y : order) {
    const bool blocked = std::any_of(item_constraints[y].begin(), item_constraints[y].end(),
                                     [&](std::uint32_t c) { return excluded_in[c] == 1; });
    if (blocked) continue;
    excluded[y] = false;
    for (std::uint32_t c : item_constraints[y]) --excluded_in[c];
  }
  std::vector<Item> out;
  for (Item i = 0; i < cs.item_count(); ++i)
    if (!excluded[i]) out.push_back(i);
  return out;
}

std::vector<Task> build_tasks(Shared& shared, const SolverConfig& cfg) {
  std::vector<std::vector<Step>> roots;
  const std::vector<Item>* orbit = nullptr;
  if (cfg.symmetry)
    for (const auto& o : shared.cs.item_orbits())
      if (o.size() > 1) {
        orbit = &o;
        break;
      }
  if (orbit != nullptr) {
    // Some optimum contains the representative, or none meets the orbit.
    roots.push_back({Step{orbit->front(), true}});
    std::vector<Step> none;
    for (Item i : *orbit) none.push_back(Step{i, false});
    roots.push_back(std::move(none));
  } else {
    roots.emplace_back();
  }

  std::vector<Task> tasks;
  for (const auto& root : roots) {
    Search probe(shared, -1);
    if (!probe.replay(Task{root, {}})) continue;
    std::vector<Step> path;
    probe.expand(path, 0, root, tasks);
  }
  return tasks;
}

}  // namespace

SearchResult solve_max_avoiding(const ConstraintSystem& cs, const SolverConfig& cfg) {
  const auto start = Clock::now();
  Shared shared(cs, cfg.node_limit);

  const std::vector<Item> greedy = greedy_avoiding_set(cs, shared.item_constraints);
  shared.best_key = make_key(greedy.size(), -1);

  const std::vector<Task> tasks = build_tasks(shared, cfg);
  std::vector<std::vector<Item>> task_witness(tasks.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t j = next++; j < tasks.size(); j = next++) {
      if (shared.aborted.load()) return;
      Search search(shared, static_cast<std::int64_t>(j));
      if (!search.replay(tasks[j])) continue;
      search.dfs();
      search.flush_nodes();
      task_witness[j] = std::move(search.witness);
    }
  };

  const unsigned workers = std::max(1u, cfg.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  const std::uint64_t key = shared.best_key.load();
  const std::int64_t owner = key_owner(key);
  SearchResult result;
  result.objective = key_value(key);
  result.witness = owner < 0 ? greedy : task_witness[static_cast<std::size_t>(owner)];
  result.nodes_explored = shared.nodes.load();
  result.status = shared.aborted.load() ? SearchStatus::lower_bound_only : SearchStatus::exact;
  result.wall_time = std::chrono::duration<double>(Clock::now() - start).count();

  if (result.witness.size() != result.objective || !avoids_all(cs, result.witness))
    throw std::logic_error("solver produced an invalid witness");
  return result;
}

SearchResult solve_min_transversal(const ConstraintSystem& cs, const SolverConfig& cfg) {
  SearchResult result = solve_max_avoiding(cs, cfg);
  std::vector<bool> kept(cs.item_count(), false);
  for (Item i : result.witness) kept[i] = true;
  std::vector<Item> transversal;
  for (Item i = 0; i < cs.item_count(); ++i)
    if (!kept[i]) transversal.push_back(i);
  result.objective = cs.item_count() - result.objective;
  result.witness = std::move(transversal);
  return result;
}

SearchResult brute_force_oracle(const ConstraintSystem& cs) {
  const std::size_t m = cs.item_count();
  if (m > kOracleMaxItems)
    throw ResourceRefusal("brute-force oracle refuses " + std::to_string(m) + " items (limit " +
                          std::to_string(kOracleMaxItems) + ")");
  const auto start = Clock::now();
  std::vector<std::uint32_t> masks;
  for (const auto& c : cs.constraints()) {
    std::uint32_t mask = 0;
    for (Item i : c) mask |= 1u << i;
    masks.push_back(mask);
  }
  int best = -1;
  std::uint32_t best_set = 0;
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t s = 0; s < total; ++s) {
    const auto set = static_cast<std::uint32_t>(s);
    if (std::popcount(set) <= best) continue;
    if (std::any_of(masks.begin(), masks.end(), [&](std::uint32_t c) { return (c & set) == c; })) continue;
    best = std::popcount(set);
    best_set = set;
  }
  SearchResult result;
  result.objective = static_cast<std::uint64_t>(best);
  for (Item i = 0; i < m; ++i)
    if (best_set >> i & 1u) result.witness.push_back(i);
  result.nodes_explored = total;
  result.wall_time = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

std::uint64_t packing_upper_bound(const ConstraintSystem& cs, std::span<const ItemState> state) {
  if (state.size() != cs.item_count()) throw InvalidInput("partial assignment has the wrong length");
  const auto& constraints = cs.constraints();
  std::uint64_t included = 0;
  std::uint64_t undecided = 0;
  for (ItemState s : state) {
    included += s == ItemState::included;
    undecided += s == ItemState::undecided;
  }
  std::vector<std::uint32_t> undecided_in(constraints.size(), 0);
  std::vector<bool> live(constraints.size(), true);
  for (std::uint32_t c = 0; c < constraints.size(); ++c) {
    for (Item y : constraints[c]) {
      if (state[y] == ItemState::excluded) live[c] = false;
      if (state[y] == ItemState::undecided) ++undecided_in[c];
    }
    if (live[c] && undecided_in[c] == 0) return 0;
  }
  std::vector<std::vector<std::uint32_t>> buckets(max_constraint_size(cs) + 1);
  std::vector<std::uint32_t> stamp(cs.item_count(), 0);
  const auto packed = greedy_packing(
      constraints, [&](std::uint32_t c) { return live[c]; },
      [&](Item y) { return state[y] == ItemState::undecided; }, [&](std::uint32_t c) { return undecided_in[c]; },
      buckets, stamp, 1);
  return included + undecided - packed;
}

}  // namespace daisy
