#include "bnfix/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "bnfix/error.hpp"

namespace bnfix {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Line {
  std::size_t number = 0;
  std::string text; // comment stripped
};

class ExprParser {
public:
  ExprParser(const Line& line, std::size_t pos, const std::map<std::string, std::size_t, std::less<>>& index)
      : line_(line), pos_(pos), index_(index) {}

  Expr parse() {
    Expr e = expr();
    skip();
    if (pos_ < line_.text.size())
      fail("unexpected '" + std::string(1, line_.text[pos_]) + "'");
    return e;
  }

private:
  const Line& line_;
  std::size_t pos_;
  const std::map<std::string, std::size_t, std::less<>>& index_;

  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError("line " + std::to_string(line_.number) + ":" + std::to_string(pos_ + 1) + ": " + what,
                      line_.number, pos_ + 1);
  }

  void skip() {
    while (pos_ < line_.text.size() && std::isspace(static_cast<unsigned char>(line_.text[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < line_.text.size() && line_.text[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr expr() {
    std::vector<Expr> parts{term()};
    while (accept('|'))
      parts.push_back(term());
    return Expr::any_of(std::move(parts));
  }

  Expr term() {
    std::vector<Expr> parts{factor()};
    while (accept('&'))
      parts.push_back(factor());
    return Expr::all_of(std::move(parts));
  }

  Expr factor() {
    skip();
    if (pos_ >= line_.text.size())
      fail("unexpected end of expression");
    const char c = line_.text[pos_];
    if (c == '!') {
      ++pos_;
      return Expr::negate(factor());
    }
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      if (!accept(')'))
        fail("expected ')'");
      return e;
    }
    if (c == '0' || c == '1') {
      ++pos_;
      return Expr::constant(c == '1');
    }
    if (ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < line_.text.size() && ident_char(line_.text[pos_]))
        ++pos_;
      const std::string name = line_.text.substr(start, pos_ - start);
      const auto it = index_.find(name);
      if (it == index_.end())
        throw UndefinedIdentifierError(name, line_.number, start + 1);
      return Expr::var(it->second);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0)
      out += sep;
    out += items[i];
  }
  return out;
}

} // namespace

BooleanNetwork parse_network(std::string_view text, std::size_t indegree_cap) {
  std::vector<Line> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  for (std::size_t number = 1; std::getline(in, raw); ++number) {
    if (!raw.empty() && raw.back() == '\r')
      raw.pop_back();
    if (const auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    if (raw.find_first_not_of(" \t") != std::string::npos)
      lines.push_back({number, raw});
  }
  if (lines.empty())
    throw SyntaxError("no definitions found", 1, 1);

  std::map<std::string, std::size_t, std::less<>> index;
  std::vector<std::string> names;
  std::vector<std::size_t> defined_on;
  std::vector<std::size_t> body;
  for (const auto& line : lines) {
    const auto& s = line.text;
    std::size_t pos = s.find_first_not_of(" \t");
    if (!ident_start(s[pos]))
      throw SyntaxError("line " + std::to_string(line.number) + ":" + std::to_string(pos + 1) +
                            ": expected a component name",
                        line.number, pos + 1);
    const std::size_t start = pos;
    while (pos < s.size() && ident_char(s[pos]))
      ++pos;
    std::string name = s.substr(start, pos - start);
    pos = s.find_first_not_of(" \t", pos);
    if (pos == std::string::npos || s[pos] != '=') {
      const std::size_t col = pos == std::string::npos ? s.size() + 1 : pos + 1;
      throw SyntaxError("line " + std::to_string(line.number) + ":" + std::to_string(col) + ": expected '='",
                        line.number, col);
    }
    if (const auto it = index.find(name); it != index.end())
      throw DuplicateDefinitionError(name, line.number, defined_on[it->second]);
    index.emplace(name, names.size());
    names.push_back(std::move(name));
    defined_on.push_back(line.number);
    body.push_back(pos + 1);
  }

  std::vector<Expr> functions;
  functions.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i)
    functions.push_back(ExprParser(lines[i], body[i], index).parse());
  return BooleanNetwork(std::move(names), std::move(functions), indegree_cap);
}

BooleanNetwork load_network(const std::filesystem::path& path, std::size_t indegree_cap) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_network(buf.str(), indegree_cap);
}

std::string format_network(const BooleanNetwork& net) {
  std::string out;
  for (std::size_t v = 0; v < net.size(); ++v)
    out += net.name(v) + " = " + to_string(net.function(v), net.names()) + "\n";
  return out;
}

std::string format_arcs(const BooleanNetwork& net, const SignedDigraph& g) {
  std::string out;
  for (const auto& a : g.arcs()) {
    out += net.name(a.source) + " " + net.name(a.target) + " ";
    out += sign_char(a.sign);
    out += "\n";
  }
  return out;
}

std::vector<std::string> vertex_names(const BooleanNetwork& net, std::span<const std::size_t> vs) {
  std::vector<std::string> out;
  out.reserve(vs.size());
  for (auto v : vs)
    out.push_back(net.name(v));
  return out;
}

nlohmann::ordered_json report_json(const BooleanNetwork& net, const FixedPointReport& report,
                                   std::string_view network_name, bool timings) {
  nlohmann::ordered_json doc;
  doc["network"] = network_name;
  doc["n"] = net.size();
  doc["strategy"] = to_string(report.strategy);
  doc["pfvs"] = vertex_names(net, report.pfvs);
  doc["fvs"] = vertex_names(net, report.fvs);
  doc["schedule"] = vertex_names(net, report.schedule.order());
  doc["candidates_tested"] = report.candidates_tested;
  doc["iterations_per_candidate"] = report.iterations_per_candidate;
  auto fps = nlohmann::ordered_json::array();
  for (const auto& x : report.fixed_points)
    fps.push_back(x.to_string());
  doc["fixed_points"] = std::move(fps);
  if (!report.candidates.empty()) {
    auto cands = nlohmann::ordered_json::array();
    for (const auto& c : report.candidates) {
      std::string a;
      for (std::size_t i = 0; i < report.pfvs.size(); ++i)
        a += ((c.assignment >> i) & 1U) != 0 ? '1' : '0';
      cands.push_back({{"assignment", a},
                       {"state", c.state.to_string()},
                       {"accepted", c.accepted},
                       {"rejection", to_string(c.rejection)},
                       {"settled_pass", c.settled_pass}});
    }
    doc["candidates"] = std::move(cands);
  }
  if (timings)
    doc["timings_ms"] = {{"selection", report.selection_ms}, {"total", report.elapsed_ms}};
  return doc;
}

std::string report_text(const BooleanNetwork& net, const FixedPointReport& report,
                        std::string_view network_name) {
  std::ostringstream out;
  out << "network: " << network_name << " (n=" << net.size() << ")\n";
  out << "strategy: " << to_string(report.strategy) << "\n";
  out << "P: " << join(vertex_names(net, report.pfvs), " ") << "\n";
  out << "F: " << join(vertex_names(net, report.fvs), " ") << "\n";
  if (report.schedule.size() > 0)
    out << "schedule: " << join(vertex_names(net, report.schedule.order()), " ") << "\n";
  out << "candidates: " << report.candidates_tested << " (" << report.iterations_per_candidate
      << " passes each)\n";
  for (const auto& c : report.candidates)
    out << "  a=" << c.assignment << " -> " << c.state.to_string() << " "
        << (c.accepted ? "accepted" : to_string(c.rejection)) << "\n";
  out << "fixed points: " << report.fixed_points.size() << "\n";
  for (const auto& x : report.fixed_points)
    out << "  " << x.to_string() << "\n";
  out << "time: " << report.elapsed_ms << " ms\n";
  return out.str();
}

namespace {

const char* event_name(PfvsEventKind k) {
  switch (k) {
  case PfvsEventKind::Selected:
    return "selected";
  case PfvsEventKind::ToY:
    return "to-y";
  case PfvsEventKind::ToP:
    return "to-p";
  }
  return "?";
}

} // namespace

nlohmann::ordered_json pfvs_json(const BooleanNetwork& net, const PfvsOutput& out, bool trace) {
  nlohmann::ordered_json doc;
  doc["pfvs"] = vertex_names(net, out.pfvs);
  doc["o"] = vertex_names(net, out.o);
  doc["fvs"] = vertex_names(net, out.fvs);
  doc["phases"] = out.phases;
  doc["order"] = vertex_names(net, out.order_used);
  if (trace) {
    auto events = nlohmann::ordered_json::array();
    for (const auto& e : out.trace)
      events.push_back({{"phase", e.phase},
                        {"event", event_name(e.kind)},
                        {"vertex", net.name(e.vertex)},
                        {"trigger", net.name(e.trigger)},
                        {"into_o", e.into_o}});
    doc["trace"] = std::move(events);
  }
  return doc;
}

std::string pfvs_text(const BooleanNetwork& net, const PfvsOutput& out, bool trace) {
  std::ostringstream s;
  s << "P: " << join(vertex_names(net, out.pfvs), " ") << "\n";
  s << "O: " << join(vertex_names(net, out.o), " ") << "\n";
  s << "F: " << join(vertex_names(net, out.fvs), " ") << "\n";
  s << "phases: " << out.phases << "\n";
  s << "order: " << join(vertex_names(net, out.order_used), " ") << "\n";
  if (trace)
    for (const auto& e : out.trace) {
      s << "  phase " << e.phase << ": " << event_name(e.kind) << " " << net.name(e.vertex);
      if (e.kind != PfvsEventKind::Selected)
        s << " (after " << net.name(e.trigger) << ")";
      else if (e.into_o)
        s << " (into O)";
      s << "\n";
    }
  return s.str();
}

} // namespace bnfix
