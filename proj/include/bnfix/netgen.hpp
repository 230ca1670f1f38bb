#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bnfix/network.hpp"
#include "bnfix/signed_digraph.hpp"

namespace bnfix {

struct GenSpec {
  std::size_t n = 10;
  std::size_t tau = 2;
  std::size_t tau_plus = 1;
  std::size_t max_fanin = 3;
  std::uint64_t seed = 0;
};

struct GeneratedNetwork {
  BooleanNetwork net;
  std::vector<std::size_t> fvs;  ///< planted minimum FVS, sorted
  std::vector<std::size_t> pfvs; ///< planted minimum PFVS, sorted
};

/// Random network whose interaction graph has exactly `tau` vertex-disjoint
/// cycles, `tau_plus` of them positive, each closed by one planted vertex.
/// Every other vertex sits on an acyclic backbone feeding the cycles or
/// downstream of them. Local functions are read-once And/Or formulas, so
/// every wired input is a semantic regulator with the wired sign.
/// Throws InvalidSetError when tau_plus > tau, 2 * tau > n or max_fanin = 0.
GeneratedNetwork generate(const GenSpec& spec);

/// Each ordered pair (loops included) gets an arc with probability
/// `density`; its sign is uniform, and with probability `both` it carries
/// both signs.
SignedDigraph random_digraph(std::size_t n, double density, double both, std::uint64_t seed);

/// Unconstrained random network: each component reads up to `max_fanin`
/// random inputs through a random formula that may repeat variables, so
/// syntactic and semantic supports can differ.
BooleanNetwork random_network(std::size_t n, std::size_t max_fanin, std::uint64_t seed);

/// Names x1..xn.
std::vector<std::string> default_names(std::size_t n);

} // namespace bnfix
