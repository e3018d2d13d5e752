#pragma once
// Exact saturation numbers (minimum maximal matchings) by branch and bound,
// plus the closed-form and independence-based lower bounds.
//
// Branching: take the lowest-indexed undominated edge e; every maximal
// matching must contain one of the <= 5 edges that dominate e, so branch on
// those in canonical order, forbidding tried candidates on the way out.
// Budgets are node counts, never wall clock, so runs are reproducible.

#include <cstdint>
#include <stdexcept>

#include "saturnum/graph.hpp"

namespace saturnum {

struct SolveOptions {
  std::uint64_t node_budget = 0;  // 0 = unlimited
  // Apply ceil((n-6)/3) at the root. Only valid when g is a fullerene;
  // subproblems are never fullerenes, so it is never used below the root.
  bool fullerene_root_bound = false;
  int greedy_probes = 8;  // seeds 0..k-1 initialize the incumbent
};

struct SaturationResult {
  int s = -1;
  Matching witness;
  bool optimal = false;
  std::uint64_t nodes_explored = 0;
  int lower_bound_used = 0;
};

// ceil((n-6)/3); every maximal matching of a fullerene is at least this big.
int lower_bound_fullerene(int n);

SaturationResult saturation_exact(const Graph& g, const SolveOptions& opts = {});

struct SizeCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int max_independent_set_size(const Graph& g);
// ceil((n - alpha)/2) with alpha computed exactly; throws SizeCapExceeded
// for graphs above the cap.
int independence_lb(const Graph& g, int size_cap = 70);

}  // namespace saturnum
