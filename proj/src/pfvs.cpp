#include "bnfix/pfvs.hpp"

#include <algorithm>
#include <numeric>

#include "bnfix/error.hpp"

namespace bnfix {

std::vector<std::size_t> min_order(const SignedDigraph& g) {
  const auto deg = degrees(g);
  std::vector<std::size_t> order(g.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&deg](std::size_t a, std::size_t b) {
    if (deg[a].total != deg[b].total)
      return deg[a].total < deg[b].total;
    return deg[a].in < deg[b].in;
  });
  return order;
}

std::vector<std::size_t> random_order(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

namespace {

SignedDigraph strip_negative_loops(const SignedDigraph& g) {
  std::vector<Arc> arcs;
  for (const auto& a : g.arcs())
    if (!(a.source == a.target && a.sign == Sign::Negative))
      arcs.push_back(a);
  return SignedDigraph(g.size(), std::move(arcs));
}

void check_order(std::size_t n, std::span<const std::size_t> order) {
  std::vector<bool> seen(n, false);
  if (order.size() != n)
    throw InvalidScheduleError("vertex order must list every vertex exactly once");
  for (auto v : order) {
    if (v >= n || seen[v])
      throw InvalidScheduleError("vertex order must list every vertex exactly once");
    seen[v] = true;
  }
}

} // namespace

PfvsRun::PfvsRun(const SignedDigraph& g, std::vector<std::size_t> order)
    : n_(g.size()), stripped_(strip_negative_loops(g)), order_(std::move(order)),
      status_(n_, Status::U), in_o_(n_, false), negative_loop_(n_, false), anc_(n_ * n_, 0),
      dec_(n_ * n_, 0) {
  check_order(n_, order_);
  for (std::size_t v = 0; v < n_; ++v) {
    negative_loop_[v] = g.has_arc(v, v, Sign::Negative);
    if (g.has_arc(v, v, Sign::Positive))
      status_[v] = Status::P;
  }
}

bool PfvsRun::finished() const {
  return std::all_of(status_.begin(), status_.end(),
                     [](Status s) { return s == Status::P || s == Status::R; });
}

void PfvsRun::begin_phase() {
  ++phase_;
  cursor_ = 0;
  for (auto& s : status_)
    if (s == Status::Y)
      s = Status::U;
}

bool PfvsRun::select_next() {
  while (cursor_ < order_.size() && status_[order_[cursor_]] != Status::U)
    ++cursor_;
  if (cursor_ == order_.size())
    return false;
  const std::size_t u = order_[cursor_++];
  status_[u] = Status::R;
  in_o_[u] = phase_ > 1 || negative_loop_[u];
  trace_.push_back({PfvsEventKind::Selected, u, phase_, u, in_o_[u]});
  force_step(u);
  return true;
}

PfvsRun::ForceResult PfvsRun::force_step(std::size_t u) {
  ForceResult result;

  // Bef(u): u itself plus every R vertex with a known all-R path into u.
  std::vector<std::pair<std::size_t, SignMask>> before;
  before.emplace_back(u, kPositiveBit);
  for (std::size_t b = 0; b < n_; ++b)
    if (b != u && anc(u, b) != 0)
      before.emplace_back(b, anc(u, b));

  // Aft(u): open vertices reachable from u, directly or through R.
  std::vector<SignMask> after(n_, 0);
  for (auto v : stripped_.out_neighbors(u)) {
    const SignMask arc = stripped_.signs(u, v);
    if (open(v)) {
      after[v] |= arc;
    } else if (status_[v] == Status::R) {
      for (std::size_t a = 0; a < n_; ++a)
        if (dec(v, a) != 0 && open(a))
          after[a] |= times(dec(v, a), arc);
    }
  }

  for (const auto& [b, signs] : before)
    for (Sign s : {Sign::Positive, Sign::Negative})
      if (signs & sign_bit(s))
        result.before.push_back({b, s});

  for (std::size_t a = 0; a < n_; ++a) {
    if (after[a] == 0)
      continue;
    for (Sign s : {Sign::Positive, Sign::Negative})
      if (after[a] & sign_bit(s))
        result.after.push_back({a, s});

    bool closed = false;
    bool positive = false;
    for (const auto& [b, signs] : before) {
      const SignMask closing = stripped_.signs(a, b);
      if (closing == 0)
        continue;
      closed = true;
      if (times(times(after[a], signs), closing) & kPositiveBit)
        positive = true;
    }

    if (positive) {
      status_[a] = Status::P;
      result.to_p.push_back(a);
      trace_.push_back({PfvsEventKind::ToP, a, phase_, u, false});
      continue;
    }
    if (closed) {
      if (status_[a] != Status::Y)
        trace_.push_back({PfvsEventKind::ToY, a, phase_, u, false});
      status_[a] = Status::Y;
      result.to_y.push_back(a);
    }
    for (const auto& [b, signs] : before) {
      const SignMask path = times(after[a], signs);
      dec(b, a) |= path;
      anc(a, b) |= path;
    }
  }
  return result;
}

std::vector<SignedVertex> PfvsRun::expand(const std::vector<SignMask>& rel, std::size_t v) const {
  std::vector<SignedVertex> out;
  for (std::size_t w = 0; w < n_; ++w) {
    const SignMask m = rel[v * n_ + w];
    if (m & kPositiveBit)
      out.push_back({w, Sign::Positive});
    if (m & kNegativeBit)
      out.push_back({w, Sign::Negative});
  }
  return out;
}

PfvsOutput PfvsRun::output() const {
  PfvsOutput out;
  for (std::size_t v = 0; v < n_; ++v) {
    if (status_[v] == Status::P)
      out.pfvs.push_back(v);
    if (status_[v] == Status::R)
      out.rest.push_back(v);
    if (status_[v] == Status::R && in_o_[v])
      out.o.push_back(v);
  }
  std::merge(out.pfvs.begin(), out.pfvs.end(), out.o.begin(), out.o.end(), std::back_inserter(out.fvs));
  out.phases = phase_;
  out.order_used = order_;
  out.trace = trace_;
  return out;
}

PfvsOutput pfvs_algorithm(const SignedDigraph& g, std::span<const std::size_t> order) {
  PfvsRun run(g, std::vector<std::size_t>(order.begin(), order.end()));
  while (!run.finished()) {
    run.begin_phase();
    while (run.select_next()) {
    }
  }
  return run.output();
}

PfvsOutput pfvs_best_of_random(const SignedDigraph& g, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PfvsOutput best = pfvs_algorithm(g, random_order(g.size(), rng));
  for (std::size_t i = 1; i < count; ++i) {
    auto candidate = pfvs_algorithm(g, random_order(g.size(), rng));
    if (candidate.pfvs.size() < best.pfvs.size())
      best = std::move(candidate);
  }
  return best;
}

} // namespace bnfix
