#include "shk/io.hpp"

#include <fstream>
#include <sstream>

#include "shk/errors.hpp"

namespace shk {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

[[noreturn]] void fail_at(int line_no, const std::string& msg) {
  throw input_error("line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

SimplicialComplex parse_complex(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<std::vector<std::string>> ambient;
  std::vector<std::vector<std::string>> facets;
  int line_no = 0;
  bool saw_facet = false;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = tokens_of(strip_comment(line));
    if (toks.empty()) continue;
    if (toks[0] == "@vertices") {
      if (ambient || saw_facet) fail_at(line_no, "@vertices must be the first directive");
      ambient = std::vector<std::string>(toks.begin() + 1, toks.end());
      continue;
    }
    saw_facet = true;
    if (toks.size() == 1 && toks[0] == "()") {
      facets.push_back({});
      continue;
    }
    for (const auto& t : toks)
      if (t == "()") fail_at(line_no, "'()' must stand alone as the empty facet");
    facets.push_back(toks);
  }
  try {
    return SimplicialComplex::build(facets, ambient);
  } catch (const input_error& e) {
    throw input_error(std::string("complex input: ") + e.what());
  }
}

std::string write_complex(const SimplicialComplex& c) {
  std::string out = "@vertices";
  for (const auto& l : c.vertices().labels()) out += " " + l;
  out += "\n";
  for (Face f : c.facets()) {
    if (f == 0) {
      out += "()\n";
      continue;
    }
    std::string line;
    for (const auto& l : c.vertices().labels_of(f)) {
      if (!line.empty()) line += " ";
      line += l;
    }
    out += line + "\n";
  }
  return out;
}

namespace {

// One factor: token or token^power.
std::pair<std::string, int> parse_factor(const std::string& tok, int line_no) {
  auto caret = tok.find('^');
  if (caret == std::string::npos) return {tok, 1};
  std::string var = tok.substr(0, caret);
  std::string pow = tok.substr(caret + 1);
  if (var.empty() || pow.empty()) fail_at(line_no, "malformed power: " + tok);
  int e = 0;
  try {
    e = std::stoi(pow);
  } catch (...) {
    fail_at(line_no, "malformed exponent: " + tok);
  }
  if (e <= 0) fail_at(line_no, "exponent must be positive: " + tok);
  return {var, e};
}

}  // namespace

MonomialIdeal parse_ideal(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<VertexSet> ring;
  std::vector<Monomial> gens;
  int line_no = 0;
  bool saw_zero = false;
  int generator_lines = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = strip_comment(line);
    for (char& ch : body)
      if (ch == '*') ch = ' ';
    auto toks = tokens_of(body);
    if (toks.empty()) continue;
    if (toks[0] == "@ring") {
      if (ring) fail_at(line_no, "duplicate @ring directive");
      if (generator_lines > 0) fail_at(line_no, "@ring must come before generators");
      ring = VertexSet::from_labels(std::vector<std::string>(toks.begin() + 1, toks.end()));
      continue;
    }
    if (!ring) fail_at(line_no, "generator before @ring directive");
    ++generator_lines;
    if (toks.size() == 1 && toks[0] == "0") {
      saw_zero = true;
      continue;
    }
    if (toks.size() == 1 && toks[0] == "1") {
      gens.push_back(Monomial::one(ring->size()));
      continue;
    }
    std::vector<int> exps(static_cast<std::size_t>(ring->size()), 0);
    for (const auto& tok : toks) {
      auto [var, e] = parse_factor(tok, line_no);
      auto id = ring->try_id(var);
      if (!id) fail_at(line_no, "unknown variable: " + var);
      exps[static_cast<std::size_t>(*id)] += e;
    }
    gens.emplace_back(std::move(exps));
  }
  if (!ring) throw input_error("ideal input: missing @ring directive");
  if (saw_zero && generator_lines > 1)
    throw input_error("ideal input: the literal 0 must be the only generator line");
  if (saw_zero) return MonomialIdeal::zero(*ring);
  return MonomialIdeal::make(*ring, std::move(gens));
}

std::string write_ideal(const MonomialIdeal& ideal) {
  std::string out = "@ring";
  for (const auto& l : ideal.ring().labels()) out += " " + l;
  out += "\n";
  if (ideal.is_zero()) {
    out += "0\n";
    return out;
  }
  for (const Monomial& g : ideal.generators()) out += g.to_string(ideal.ring()) + "\n";
  return out;
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<std::vector<std::string>> labels;
  std::vector<std::pair<std::string, std::string>> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = tokens_of(strip_comment(line));
    if (toks.empty()) continue;
    if (toks[0] == "@vertices") {
      if (labels) fail_at(line_no, "duplicate @vertices directive");
      labels = std::vector<std::string>(toks.begin() + 1, toks.end());
      continue;
    }
    if (!labels) fail_at(line_no, "edge before @vertices directive");
    if (toks.size() != 2) fail_at(line_no, "an edge needs exactly two vertex tokens");
    edges.emplace_back(toks[0], toks[1]);
  }
  if (!labels) throw input_error("graph input: missing @vertices directive");
  return Graph::build(*labels, edges);
}

std::string write_graph(const Graph& g) {
  std::string out = "@vertices";
  for (const auto& l : g.vertices().labels()) out += " " + l;
  out += "\n";
  for (auto [a, b] : g.edges())
    out += g.vertices().label(a) + " " + g.vertices().label(b) + "\n";
  return out;
}

InputKind kind_of_path(const std::string& path) {
  auto dot = path.rfind('.');
  std::string ext = dot == std::string::npos ? "" : path.substr(dot);
  if (ext == ".cx") return InputKind::complex;
  if (ext == ".mi") return InputKind::ideal;
  if (ext == ".g") return InputKind::graph;
  throw input_error("unrecognized input extension (expected .cx, .mi, or .g): " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace shk
