#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bnfix/signed_digraph.hpp"

namespace bnfix {

inline constexpr std::size_t default_cycle_cap = 1'000'000;

/// Simple cycle: vertices[i] -> vertices[i+1] via arc sign arc_signs[i],
/// closing from the last vertex back to the first. Starts at its smallest vertex.
struct SignedCycle {
  std::vector<std::size_t> vertices;
  std::vector<Sign> arc_signs;
  Sign sign = Sign::Positive;

  bool operator==(const SignedCycle&) const = default;
};

/// All simple cycles, one entry per choice of sign on parallel arcs.
/// Throws ResourceError once more than `cap` cycles would be produced.
std::vector<SignedCycle> enumerate_cycles(const SignedDigraph& g, std::size_t cap = default_cycle_cap);

/// True iff g minus `removed` has no cycle (loops count).
bool is_acyclic(const SignedDigraph& g, std::span<const std::size_t> removed);
bool is_acyclic(const SignedDigraph& g, const std::vector<bool>& removed);

inline bool is_fvs(const SignedDigraph& g, std::span<const std::size_t> f) { return is_acyclic(g, f); }

/// True iff g minus `removed` contains a simple cycle of sign `sign`.
/// Exact subset search up to 20 surviving vertices on a non-trivial strong
/// component; larger instances fall back to capped cycle enumeration.
bool has_cycle_of_sign(const SignedDigraph& g, const std::vector<bool>& removed, Sign sign,
                       std::size_t cap = default_cycle_cap);

/// No positive simple cycle survives removal of `p`.
bool is_pfvs(const SignedDigraph& g, std::span<const std::size_t> p, std::size_t cap = default_cycle_cap);

/// `f` is an FVS and no single vertex can be dropped from it.
bool is_minimal_fvs(const SignedDigraph& g, std::span<const std::size_t> f);

struct Transversal {
  std::size_t size = 0;
  std::vector<std::size_t> witness;
};

inline constexpr std::size_t brute_transversal_max_n = 20;

/// Minimum FVS by subsets of increasing size. Throws ResourceError above
/// brute_transversal_max_n vertices.
Transversal brute_tau(const SignedDigraph& g);

/// Minimum PFVS by subsets of increasing size.
Transversal brute_tau_plus(const SignedDigraph& g);

} // namespace bnfix
