#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "bnfix/network.hpp"
#include "bnfix/pfvs.hpp"
#include "bnfix/signed_digraph.hpp"
#include "bnfix/solver.hpp"

namespace bnfix {

/// One `name = expr` definition per line, `#` comments, forward references
/// allowed. Precedence: ! over & over |. Throws SyntaxError,
/// UndefinedIdentifierError or DuplicateDefinitionError.
BooleanNetwork parse_network(std::string_view text,
                             std::size_t indegree_cap = BooleanNetwork::default_indegree_cap);

/// Throws Error if the file cannot be read.
BooleanNetwork load_network(const std::filesystem::path& path,
                            std::size_t indegree_cap = BooleanNetwork::default_indegree_cap);

/// Inverse of parse_network up to whitespace and redundant parentheses.
std::string format_network(const BooleanNetwork& net);

/// One `source target sign` line per arc, in arc order.
std::string format_arcs(const BooleanNetwork& net, const SignedDigraph& g);

std::vector<std::string> vertex_names(const BooleanNetwork& net, std::span<const std::size_t> vs);

/// Keys in a fixed order; timings only when `timings` is set, so the
/// document is byte-identical across runs otherwise.
nlohmann::ordered_json report_json(const BooleanNetwork& net, const FixedPointReport& report,
                                   std::string_view network_name, bool timings);
std::string report_text(const BooleanNetwork& net, const FixedPointReport& report,
                        std::string_view network_name);

nlohmann::ordered_json pfvs_json(const BooleanNetwork& net, const PfvsOutput& out, bool trace);
std::string pfvs_text(const BooleanNetwork& net, const PfvsOutput& out, bool trace);

} // namespace bnfix
