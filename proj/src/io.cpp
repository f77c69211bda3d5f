#include "epa/io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "epa/error.hpp"

namespace epa {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

long parse_index(std::string_view tok, std::size_t line, const char* what) {
  long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) throw ParseError(line, std::string("bad ") + what + " '" + std::string(tok) + "'");
  return v;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

bool parse_rational(std::string_view s, Rational& out) {
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) return false;
  const mpz_class p{std::string(num)}, q{std::string(den)};
  if (q == 0) return false;
  out = Rational(p, q);
  out.canonicalize();
  return true;
}

Instance parse_instance(std::string_view text) {
  long n = -1, m = -1;
  std::vector<Rational> w;
  std::vector<bool> weighted;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    const auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") {
      if (end == text.size()) break;
      continue;
    }
    if (tok[0] == "p") {
      if (n >= 0) throw ParseError(line_no, "second problem line");
      if (tok.size() != 4 || tok[1] != "epa") throw ParseError(line_no, "expected 'p epa <n> <m>'");
      n = parse_index(tok[2], line_no, "vertex count");
      m = parse_index(tok[3], line_no, "edge count");
      if (n < 0 || m < 0) throw ParseError(line_no, "negative count");
      w.assign(static_cast<std::size_t>(n), Rational(1));
      weighted.assign(static_cast<std::size_t>(n), false);
    } else if (tok[0] == "v" || tok[0] == "e") {
      if (n < 0) throw ParseError(line_no, "record before problem line");
      if (tok.size() != 3) throw ParseError(line_no, "expected 3 fields");
      const long a = parse_index(tok[1], line_no, "vertex");
      if (a < 1 || a > n) throw ParseError(line_no, "vertex " + std::string(tok[1]) + " out of range");
      if (tok[0] == "v") {
        if (!tok[2].empty() && tok[2][0] == '-') throw ParseError(line_no, "negative weight");
        Rational q;
        if (!parse_rational(tok[2], q)) throw ParseError(line_no, "bad weight '" + std::string(tok[2]) + "'");
        if (weighted[static_cast<std::size_t>(a - 1)]) throw ParseError(line_no, "duplicate weight for vertex " + std::string(tok[1]));
        weighted[static_cast<std::size_t>(a - 1)] = true;
        w[static_cast<std::size_t>(a - 1)] = q;
      } else {
        const long b = parse_index(tok[2], line_no, "vertex");
        if (b < 1 || b > n) throw ParseError(line_no, "vertex " + std::string(tok[2]) + " out of range");
        if (a == b) throw ParseError(line_no, "self-loop");
        const Edge e{static_cast<Vertex>(std::min(a, b) - 1), static_cast<Vertex>(std::max(a, b) - 1)};
        if (!seen.insert(e).second) throw ParseError(line_no, "duplicate edge");
        edges.push_back(e);
      }
    } else {
      throw ParseError(line_no, "unknown record '" + std::string(tok[0]) + "'");
    }
    if (end == text.size()) break;
  }
  if (n < 0) throw ParseError(0, "missing problem line");
  if (static_cast<long>(edges.size()) != m)
    throw ParseError(0, "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  return {Graph(static_cast<int>(n), edges), WeightFn(std::move(w))};
}

std::string serialize_instance(const Instance& inst, const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const auto& c : comments) out << "c " << c << '\n';
  out << "p epa " << inst.graph.order() << ' ' << inst.graph.edge_count() << '\n';
  for (Vertex v = 0; v < inst.weights.size(); ++v)
    if (inst.weights[v] != 1) out << "v " << v + 1 << ' ' << to_string(inst.weights[v]) << '\n';
  for (const Edge& e : inst.graph.edges()) out << "e " << e.first + 1 << ' ' << e.second + 1 << '\n';
  return out.str();
}

}  // namespace epa
