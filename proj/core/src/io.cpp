#include "dicograph/io.hpp"

#include <charconv>
#include <istream>
#include <optional>
#include <iterator>
#include <sstream>
#include <vector>

namespace dicograph {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int to_int(std::string_view tok, int line) {
  int value = 0;
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError("line " + std::to_string(line) + ": expected integer, got '" +
                         std::string(tok) + "'",
                     line, 0);
  }
  return value;
}

}  // namespace

Digraph parse_edge_list(std::string_view text) {
  std::optional<Digraph> g;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto toks = tokens(line);
    if (toks.empty()) {
      if (end == text.size()) break;
      continue;
    }
    auto fail = [&](const std::string& msg) -> ParseError {
      return ParseError("line " + std::to_string(line_no) + ": " + msg, line_no, 0);
    };
    if (!g) {
      if (toks.size() != 2 || toks[0] != "n") throw fail("expected header 'n <count>'");
      const int n = to_int(toks[1], line_no);
      if (n < 1 || n > kMaxVertices) {
        throw fail("vertex count must be in 1.." + std::to_string(kMaxVertices));
      }
      g.emplace(n);
    } else {
      if (toks.size() != 2) throw fail("expected an arc 'u v'");
      const int u = to_int(toks[0], line_no);
      const int v = to_int(toks[1], line_no);
      if (u < 0 || v < 0 || u >= g->order() || v >= g->order()) {
        throw fail("vertex out of range");
      }
      if (u == v) throw fail("loop at vertex " + std::to_string(u));
      if (g->has_arc(u, v)) throw fail("duplicate arc " + std::to_string(u) + " " + std::to_string(v));
      g->add_arc(u, v);
    }
    if (end == text.size()) break;
  }
  if (!g) throw ParseError("missing header 'n <count>'", line_no, 0);
  return *g;
}

Digraph read_edge_list(std::istream& in) {
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_edge_list(text);
}

std::string to_edge_list(const Digraph& g) {
  std::ostringstream os;
  os << "n " << g.order() << '\n';
  for (const auto& [u, v] : g.arcs()) os << u << ' ' << v << '\n';
  return os.str();
}

std::string to_dot(const Digraph& g, std::string_view name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v) os << "  " << v << " [label=\"" << v << "\"];\n";
  for (const auto& [u, v] : g.arcs()) os << "  " << u << " -> " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace dicograph
