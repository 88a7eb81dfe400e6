#include "egz/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <stdexcept>
#include <thread>

namespace egz {

namespace {

using Clock = std::chrono::steady_clock;

Sequence sequence_from_counts(const Group& g, const std::vector<int>& counts) {
  Sequence s(g);
  for (Elem e = 0; e < g.order(); ++e)
    if (counts[e] > 0) s.add(e, counts[e]);
  return s;
}

long long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

// Shared cross-task controls for one search invocation.
struct Controls {
  std::atomic<bool> abort{false};
  Clock::time_point deadline{};
  bool has_deadline = false;

  explicit Controls(const SearchConfig& cfg) {
    if (cfg.budget_ms > 0) {
      has_deadline = true;
      deadline = Clock::now() + std::chrono::milliseconds(cfg.budget_ms);
    }
  }

  bool expired() {
    if (abort.load(std::memory_order_relaxed)) return true;
    if (has_deadline && Clock::now() >= deadline) {
      abort.store(true, std::memory_order_relaxed);
      return true;
    }
    return false;
  }
};

// DFS over multisets in nondecreasing element order, pruned so that the
// current sequence never has a product-one subsequence of the forbidden
// length. Appending e creates one exactly when inverse(e) is an
// (L-1)-product of the current sequence: a product-one ordering of a new
// length-L subsequence can be rotated to end in the fresh term.
struct ForbiddenLengthDfs {
  const Group& g;
  int forbidden;
  int ceiling;
  bool proof_ceiling;       // ceiling is a proven bound, reaching it loses nothing
  int target;               // -1: maximize length; >= 0: collect at exactly this depth
  ElemMask first_allowed;   // depth-0 branch restriction
  Controls& ctl;

  std::vector<int> counts;
  ProductLayers layers;

  unsigned long long nodes = 0;
  bool truncated = false;
  int best_len = -1;
  std::vector<int> best_counts;
  std::vector<Sequence> collected;

  ForbiddenLengthDfs(const Group& group, int forbidden_length, int ceil, bool proof,
                     int target_len, ElemMask first, Controls& controls)
      : g(group),
        forbidden(forbidden_length),
        ceiling(ceil),
        proof_ceiling(proof),
        target(target_len),
        first_allowed(first),
        ctl(controls),
        counts(group.order(), 0),
        layers(group, forbidden_length - 1) {}

  void seed(const std::vector<Elem>& prefix) {
    for (Elem e : prefix) {
      ++counts[e];
      layers.push(e);
    }
  }

  void run(int depth, Elem min_next) {
    ++nodes;
    if ((nodes & 1023ull) == 0 && ctl.expired()) {
      truncated = true;
      return;
    }
    if (target < 0 && depth > best_len) {
      best_len = depth;
      best_counts = counts;
    }
    if (target >= 0 && depth == target) {
      collected.push_back(sequence_from_counts(g, counts));
      return;
    }
    if (depth >= ceiling) {
      if (!proof_ceiling) truncated = true;
      return;
    }
    ElemMask reach = layers.layer(forbidden - 1);
    for (Elem e = min_next; e < g.order(); ++e) {
      if (depth == 0 && !((first_allowed >> e) & 1)) continue;
      if ((reach >> g.inverse(e)) & 1) continue;
      ++counts[e];
      layers.push(e);
      run(depth + 1, e);
      layers.pop();
      --counts[e];
      if (ctl.abort.load(std::memory_order_relaxed)) {
        truncated = true;
        return;
      }
    }
  }
};

struct FrontierNode {
  std::vector<Elem> prefix;
  Elem min_next;
};

// Collects the subtree roots at the split depth; nodes above it are handled
// directly (including result bookkeeping).
struct FrontierCollector {
  ForbiddenLengthDfs& base;
  int split_depth;
  std::vector<FrontierNode> frontier;
  std::vector<Elem> path;

  void run(int depth, Elem min_next) {
    if (depth == split_depth) {
      frontier.push_back({path, min_next});
      return;
    }
    ++base.nodes;
    if ((base.nodes & 1023ull) == 0 && base.ctl.expired()) {
      base.truncated = true;
      return;
    }
    if (base.target < 0 && depth > base.best_len) {
      base.best_len = depth;
      base.best_counts = base.counts;
    }
    if (base.target >= 0 && depth == base.target) {
      base.collected.push_back(sequence_from_counts(base.g, base.counts));
      return;
    }
    if (depth >= base.ceiling) {
      if (!base.proof_ceiling) base.truncated = true;
      return;
    }
    ElemMask reach = base.layers.layer(base.forbidden - 1);
    for (Elem e = min_next; e < base.g.order(); ++e) {
      if (depth == 0 && !((base.first_allowed >> e) & 1)) continue;
      if ((reach >> base.g.inverse(e)) & 1) continue;
      ++base.counts[e];
      base.layers.push(e);
      path.push_back(e);
      run(depth + 1, e);
      path.pop_back();
      base.layers.pop();
      --base.counts[e];
      if (base.ctl.abort.load(std::memory_order_relaxed)) {
        base.truncated = true;
        return;
      }
    }
  }
};

struct ForbiddenSearchOutcome {
  int best_len = -1;
  std::vector<int> best_counts;
  std::vector<Sequence> collected;
  bool truncated = false;
  unsigned long long nodes = 0;
};

void validate_config(const SearchConfig& cfg) {
  if (cfg.length_ceiling < 1) throw std::invalid_argument("length ceiling must be at least 1");
  if (cfg.parallel_depth < 0) throw std::invalid_argument("parallel depth must be non-negative");
}

ForbiddenSearchOutcome run_forbidden_search(const Group& g, int forbidden, int ceiling,
                                            bool proof_ceiling, int target,
                                            const SearchConfig& cfg, bool allow_symmetry) {
  if (forbidden < 1) throw std::invalid_argument("forbidden length must be positive");
  Controls ctl(cfg);
  ElemMask first = (allow_symmetry && cfg.symmetry_reduction) ? automorphism_orbit_minima(g)
                                                              : g.all_mask();
  ForbiddenSearchOutcome out;

  if (cfg.parallel_depth <= 0) {
    ForbiddenLengthDfs dfs(g, forbidden, ceiling, proof_ceiling, target, first, ctl);
    dfs.run(0, 0);
    out.best_len = dfs.best_len;
    out.best_counts = dfs.best_counts;
    out.collected = std::move(dfs.collected);
    out.truncated = dfs.truncated;
    out.nodes = dfs.nodes;
    return out;
  }

  ForbiddenLengthDfs base(g, forbidden, ceiling, proof_ceiling, target, first, ctl);
  FrontierCollector collector{base, cfg.parallel_depth, {}, {}};
  collector.run(0, 0);
  out.best_len = base.best_len;
  out.best_counts = base.best_counts;
  out.collected = std::move(base.collected);
  out.truncated = base.truncated;
  out.nodes = base.nodes;

  const auto& frontier = collector.frontier;
  std::vector<ForbiddenSearchOutcome> task_results(frontier.size());
  std::atomic<size_t> next{0};
  unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                     static_cast<unsigned>(frontier.size())));
  auto work = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= frontier.size()) break;
      ForbiddenLengthDfs dfs(g, forbidden, ceiling, proof_ceiling, target, first, ctl);
      dfs.seed(frontier[i].prefix);
      dfs.run(cfg.parallel_depth, frontier[i].min_next);
      auto& r = task_results[i];
      r.best_len = dfs.best_len;
      r.best_counts = dfs.best_counts;
      r.collected = std::move(dfs.collected);
      r.truncated = dfs.truncated;
      r.nodes = dfs.nodes;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  for (auto& r : task_results) {
    if (r.best_len > out.best_len) {
      out.best_len = r.best_len;
      out.best_counts = r.best_counts;
    }
    out.collected.insert(out.collected.end(), r.collected.begin(), r.collected.end());
    out.truncated |= r.truncated;
    out.nodes += r.nodes;
  }
  return out;
}

// When every element order divides L, a sequence of length |G|(L-1)+1 has
// some element L times and that power is product-one, so |G|(L-1) bounds
// every witness.
std::pair<int, bool> effective_ceiling(const Group& g, int forbidden, const SearchConfig& cfg) {
  if (forbidden % g.exponent() == 0) {
    int proof = g.order() * (forbidden - 1);
    if (proof <= cfg.length_ceiling) return {proof, true};
  }
  return {cfg.length_ceiling, false};
}

ConstantReport constant_from_witness(const std::string& name, WitnessReport&& report) {
  int value = report.witness_length + 1;
  bool exhaustive = report.exhaustive;
  return ConstantReport{name, value, exhaustive, std::move(report)};
}

}  // namespace

WitnessReport max_witness_length(const Group& g, int forbidden_length, const SearchConfig& cfg) {
  validate_config(cfg);
  auto start = Clock::now();
  auto [ceiling, proof] = effective_ceiling(g, forbidden_length, cfg);
  auto out = run_forbidden_search(g, forbidden_length, ceiling, proof, -1, cfg, true);
  Sequence witness = sequence_from_counts(g, out.best_counts.empty()
                                                 ? std::vector<int>(g.order(), 0)
                                                 : out.best_counts);
  return WitnessReport{g.descriptor(), forbidden_length, std::move(witness),
                       out.best_len < 0 ? 0 : out.best_len, !out.truncated,
                       ms_since(start), out.nodes};
}

ConstantReport s_constant(const Group& g, const SearchConfig& cfg) {
  return constant_from_witness("s", max_witness_length(g, g.exponent(), cfg));
}

ConstantReport e_constant(const Group& g, const SearchConfig& cfg) {
  return constant_from_witness("E", max_witness_length(g, g.order(), cfg));
}

ConstantReport s_prime_lower_bound(const Group& g, const SearchConfig& cfg) {
  return constant_from_witness("sprime", max_witness_length(g, g.max_element_order(), cfg));
}

WitnessEnumeration enumerate_witnesses(const Group& g, int length, int forbidden_length,
                                       const SearchConfig& cfg) {
  validate_config(cfg);
  if (length < 0) throw std::invalid_argument("witness length must be non-negative");
  auto start = Clock::now();
  SearchConfig literal = cfg;
  literal.symmetry_reduction = false;
  auto out = run_forbidden_search(g, forbidden_length, length, true, length, literal, false);
  return WitnessEnumeration{std::move(out.collected), !out.truncated, ms_since(start), out.nodes};
}

DavenportReport small_davenport(const Group& g, const SearchConfig& cfg) {
  validate_config(cfg);
  auto start = Clock::now();
  Controls ctl(cfg);
  // Prefix products along a product-one-free sequence are pairwise distinct
  // and avoid the identity, so |G| - 1 bounds the length.
  int proof = g.order() - 1;
  int ceiling = std::min(cfg.length_ceiling, proof);
  bool proof_ceiling = ceiling == proof;
  ElemMask first = cfg.symmetry_reduction ? automorphism_orbit_minima(g) : g.all_mask();

  struct Dfs {
    const Group& g;
    int ceiling;
    bool proof_ceiling;
    ElemMask first_allowed;
    Controls& ctl;
    std::vector<int> counts;
    ProductLayers layers;
    std::vector<ElemMask> any_stack{0};  // union of layers 1..len per depth
    unsigned long long nodes = 0;
    bool truncated = false;
    int best_len = -1;
    std::vector<int> best_counts;

    Dfs(const Group& group, int ceil, bool proof, ElemMask first, Controls& controls)
        : g(group), ceiling(ceil), proof_ceiling(proof), first_allowed(first), ctl(controls),
          counts(group.order(), 0), layers(group, std::max(0, ceil)) {}

    void run(int depth, Elem min_next) {
      ++nodes;
      if ((nodes & 1023ull) == 0 && ctl.expired()) {
        truncated = true;
        return;
      }
      if (depth > best_len) {
        best_len = depth;
        best_counts = counts;
      }
      if (depth >= ceiling) {
        if (!proof_ceiling) truncated = true;
        return;
      }
      ElemMask reach = any_stack.back() | 1ull;  // appending e closes a product iff
      for (Elem e = min_next; e < g.order(); ++e) {
        if (depth == 0 && !((first_allowed >> e) & 1)) continue;
        if ((reach >> g.inverse(e)) & 1) continue;  // inverse(e) is already reachable (or e = 1)
        ++counts[e];
        layers.push(e);
        ElemMask any = 0;
        for (int k = 1; k <= depth + 1; ++k) any |= layers.layer(k);
        any_stack.push_back(any);
        run(depth + 1, e);
        any_stack.pop_back();
        layers.pop();
        --counts[e];
        if (ctl.abort.load(std::memory_order_relaxed)) {
          truncated = true;
          return;
        }
      }
    }
  };

  Dfs dfs(g, ceiling, proof_ceiling, first, ctl);
  dfs.run(0, 0);
  return DavenportReport{"d", dfs.best_len, !dfs.truncated,
                         sequence_from_counts(g, dfs.best_counts), ms_since(start), dfs.nodes};
}

DavenportReport large_davenport(const Group& g, const SearchConfig& cfg) {
  validate_config(cfg);
  auto start = Clock::now();
  Controls ctl(cfg);
  // Prefix products along a product-one ordering of a minimal sequence are
  // pairwise distinct, so |G| bounds the length.
  int proof = g.order();
  int ceiling = std::min(cfg.length_ceiling, proof);
  bool proof_ceiling = ceiling == proof;
  ElemMask first = cfg.symmetry_reduction ? automorphism_orbit_minima(g) : g.all_mask();

  struct Dfs {
    const Group& g;
    int ceiling;
    bool proof_ceiling;
    ElemMask first_allowed;
    Controls& ctl;
    std::vector<int> counts;
    unsigned long long nodes = 0;
    bool truncated = false;
    int best_len = -1;
    std::vector<int> best_counts;

    void run(int depth, Elem min_next) {
      ++nodes;
      if ((nodes & 255ull) == 0 && ctl.expired()) {
        truncated = true;
        return;
      }
      if (depth > best_len && depth >= 1) {
        Sequence s = sequence_from_counts(g, counts);
        if (is_minimal_product_one(s)) {
          best_len = depth;
          best_counts = counts;
        }
      }
      if (depth >= ceiling) {
        if (!proof_ceiling) truncated = true;
        return;
      }
      for (Elem e = min_next; e < g.order(); ++e) {
        if (depth == 0 && !((first_allowed >> e) & 1)) continue;
        ++counts[e];
        run(depth + 1, e);
        --counts[e];
        if (ctl.abort.load(std::memory_order_relaxed)) {
          truncated = true;
          return;
        }
      }
    }
  };

  Dfs dfs{g, ceiling, proof_ceiling, first, ctl, std::vector<int>(g.order(), 0),
          0,  false,    -1,            {}};
  // The identity alone is minimal; deeper minimal sequences never contain it.
  dfs.best_len = 1;
  dfs.best_counts = std::vector<int>(g.order(), 0);
  dfs.best_counts[g.identity()] = 1;
  dfs.run(0, 1);
  return DavenportReport{"D", dfs.best_len, !dfs.truncated,
                         sequence_from_counts(g, dfs.best_counts), ms_since(start), dfs.nodes};
}

}  // namespace egz
