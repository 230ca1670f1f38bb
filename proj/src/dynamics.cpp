#include "bnfix/dynamics.hpp"

#include <numeric>

#include "bnfix/error.hpp"

namespace bnfix {

Schedule::Schedule(std::vector<std::size_t> order) : order_(std::move(order)) {
  std::vector<bool> seen(order_.size(), false);
  for (auto v : order_) {
    if (v >= order_.size() || seen[v])
      throw InvalidScheduleError("schedule is not a permutation of [0, " +
                                 std::to_string(order_.size()) + ")");
    seen[v] = true;
  }
}

Schedule Schedule::identity(std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return Schedule(std::move(order));
}

namespace {

void require_size(const BooleanNetwork& net, const State& x) {
  if (x.size() != net.size())
    throw InvalidSetError("state has " + std::to_string(x.size()) + " components, network has " +
                          std::to_string(net.size()));
}

} // namespace

bool eval_local(const BooleanNetwork& net, std::size_t v, const State& x) {
  require_size(net, x);
  if (v >= net.size())
    throw InvalidSetError("component index " + std::to_string(v) + " out of range");
  return net.eval(v, x);
}

State apply(const BooleanNetwork& net, const State& x) {
  require_size(net, x);
  State out(x.size());
  for (std::size_t v = 0; v < net.size(); ++v)
    out.set(v, net.eval(v, x));
  return out;
}

State apply_partial(const BooleanNetwork& net, std::size_t u, const State& x) {
  State out = x;
  out.set(u, eval_local(net, u, x));
  return out;
}

State apply_schedule(const BooleanNetwork& net, const Schedule& pi, const State& x) {
  require_size(net, x);
  if (pi.size() != net.size())
    throw InvalidScheduleError("schedule length differs from network size");
  State out = x;
  for (auto u : pi)
    out.set(u, net.eval(u, out));
  return out;
}

State iterate(const BooleanNetwork& net, std::size_t k, const State& x) {
  require_size(net, x);
  State cur = x;
  State next(x.size());
  for (std::size_t t = 0; t < k; ++t) {
    for (std::size_t v = 0; v < net.size(); ++v)
      next.set(v, net.eval(v, cur));
    std::swap(cur, next);
  }
  return cur;
}

bool is_fixed_point(const BooleanNetwork& net, const State& x) {
  require_size(net, x);
  for (std::size_t v = 0; v < net.size(); ++v)
    if (net.eval(v, x) != x[v])
      return false;
  return true;
}

BooleanNetwork restrict(const BooleanNetwork& net, const Assignment& a) {
  std::vector<std::string> names(net.names().begin(), net.names().end());
  std::vector<Expr> functions(net.functions().begin(), net.functions().end());
  for (const auto& [v, bit] : a) {
    if (v >= net.size())
      throw InvalidSetError("clamped component " + std::to_string(v) + " out of range");
    functions[v] = Expr::constant(bit);
  }
  return BooleanNetwork(std::move(names), std::move(functions), net.indegree_cap());
}

ClampedDynamics::ClampedDynamics(const BooleanNetwork& net) : net_(&net), clamp_(net.size(), -1) {}

void ClampedDynamics::release_all() {
  for (auto& c : clamp_)
    c = -1;
}

void ClampedDynamics::step(const State& x, State& out) const {
  for (std::size_t v = 0; v < clamp_.size(); ++v)
    out.set(v, eval(v, x));
}

bool ClampedDynamics::sweep(const Schedule& pi, State& x) const {
  bool changed = false;
  for (auto u : pi) {
    const bool value = eval(u, x);
    if (value != x[u]) {
      x.set(u, value);
      changed = true;
    }
  }
  return changed;
}

bool ClampedDynamics::is_fixed(const State& x) const {
  for (std::size_t v = 0; v < clamp_.size(); ++v)
    if (eval(v, x) != x[v])
      return false;
  return true;
}

} // namespace bnfix
