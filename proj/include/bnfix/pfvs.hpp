#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "bnfix/schedule.hpp"
#include "bnfix/signed_digraph.hpp"

namespace bnfix {

/// Vertices ordered by (degree, in-degree, index), all ascending.
std::vector<std::size_t> min_order(const SignedDigraph& g);

/// Uniform shuffle of [0, n).
std::vector<std::size_t> random_order(std::size_t n, std::mt19937_64& rng);

struct SignedVertex {
  std::size_t vertex = 0;
  Sign sign = Sign::Positive;

  auto operator<=>(const SignedVertex&) const = default;
};

enum class PfvsEventKind : std::uint8_t {
  Selected, ///< moved from U into R (and into O when `into_o`)
  ToY,      ///< closes only negative circuits with R
  ToP,      ///< closes a positive circuit with R
};

struct PfvsEvent {
  PfvsEventKind kind = PfvsEventKind::Selected;
  std::size_t vertex = 0;
  std::size_t phase = 0;
  /// The vertex whose entry into R triggered the classification.
  std::size_t trigger = 0;
  bool into_o = false;

  bool operator==(const PfvsEvent&) const = default;
};

struct PfvsOutput {
  std::vector<std::size_t> pfvs; ///< P, sorted
  std::vector<std::size_t> o;    ///< O, sorted
  std::vector<std::size_t> rest; ///< R (includes O), sorted
  std::vector<std::size_t> fvs;  ///< F = P ∪ O, sorted
  std::size_t phases = 0;
  std::vector<std::size_t> order_used;
  std::vector<PfvsEvent> trace;
};

/// State of one PFVS-Algorithm run. Vertices move U -> {R, Y, P}; Y returns
/// to U at each phase boundary. Anc/Dec are sets of signed vertices kept for
/// the whole run; Bef/Aft are rebuilt by every force step.
class PfvsRun {
public:
  enum class Status : std::uint8_t { U, Y, R, P };

  /// Seeds P with the positive-loop vertices and strips negative loops.
  PfvsRun(const SignedDigraph& g, std::vector<std::size_t> order);

  bool finished() const;

  /// Resets U to every vertex outside P ∪ R and empties Y.
  void begin_phase();

  /// Moves the first U vertex in input order into R (and O when required)
  /// and runs the force step for it. Returns false once U is empty.
  bool select_next();

  struct ForceResult {
    std::vector<SignedVertex> before; ///< Bef(u)
    std::vector<SignedVertex> after;  ///< Aft(u)
    std::vector<std::size_t> to_p;
    std::vector<std::size_t> to_y;
  };

  /// Classifies every U ∪ Y vertex that now closes a circuit through R,
  /// using only the signed ancestor/descendant bookkeeping. `u` must have
  /// just entered R.
  ForceResult force_step(std::size_t u);

  Status status(std::size_t v) const { return status_[v]; }
  bool in_o(std::size_t v) const { return in_o_[v]; }
  std::size_t phase() const noexcept { return phase_; }
  std::vector<SignedVertex> ancestors(std::size_t v) const { return expand(anc_, v); }
  std::vector<SignedVertex> descendants(std::size_t v) const { return expand(dec_, v); }
  const std::vector<PfvsEvent>& trace() const noexcept { return trace_; }

  PfvsOutput output() const;

private:
  bool open(std::size_t v) const { return status_[v] == Status::U || status_[v] == Status::Y; }
  std::vector<SignedVertex> expand(const std::vector<SignMask>& rel, std::size_t v) const;
  SignMask& anc(std::size_t v, std::size_t b) { return anc_[v * n_ + b]; }
  SignMask& dec(std::size_t b, std::size_t a) { return dec_[b * n_ + a]; }

  std::size_t n_;
  SignedDigraph stripped_; // G': negative loops removed
  std::vector<std::size_t> order_;
  std::vector<Status> status_;
  std::vector<bool> in_o_;
  std::vector<bool> negative_loop_;
  std::vector<SignMask> anc_; // anc_[v*n + b]: signs of all-R paths b ~> v
  std::vector<SignMask> dec_; // dec_[b*n + a]: signs of all-R paths b ~> a
  std::size_t phase_ = 0;
  std::size_t cursor_ = 0;
  std::vector<PfvsEvent> trace_;
};

/// Runs phases until P ∪ R covers every vertex. `order` must be a
/// permutation of the vertices; ties in "lowest index" follow it.
PfvsOutput pfvs_algorithm(const SignedDigraph& g, std::span<const std::size_t> order);

/// Runs the algorithm on `count` seeded shuffles and keeps the smallest P
/// (first one on ties).
PfvsOutput pfvs_best_of_random(const SignedDigraph& g, std::size_t count, std::uint64_t seed);

/// P ascending, then G - F in topological order (smallest index first among
/// ready vertices), then F \ P ascending. Throws InvalidSetError if P is not
/// contained in F or G - F has a cycle.
Schedule compatible_order(const SignedDigraph& g, std::span<const std::size_t> f,
                          std::span<const std::size_t> p);

/// A uniformly shuffled variant: random order inside P, random topological
/// order of G - F, random order inside F \ P.
Schedule random_compatible_order(const SignedDigraph& g, std::span<const std::size_t> f,
                                 std::span<const std::size_t> p, std::mt19937_64& rng);

/// P precedes everything else, F \ P follows everything else, and arcs
/// between vertices outside F point forward.
bool is_compatible(const SignedDigraph& g, std::span<const std::size_t> f,
                   std::span<const std::size_t> p, const Schedule& pi);

/// Smallest-by-pruning FVS containing `p`: starts from every vertex and drops
/// non-P vertices in index order while the rest stays an FVS.
std::vector<std::size_t> complete_fvs(const SignedDigraph& g, std::span<const std::size_t> p);

} // namespace bnfix
