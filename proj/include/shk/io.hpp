#pragma once

#include <string>

#include "shk/complex.hpp"
#include "shk/graph.hpp"
#include "shk/ideal.hpp"

namespace shk {

// .cx — one facet per line, whitespace-separated vertex tokens; optional
//       leading `@vertices ...` directive; `()` denotes the empty facet;
//       `#` starts a comment.
// .mi — `@ring ...` first, then one generator per line with `*` or space
//       separated factors and `^` powers; a lone `0` is the zero ideal, `1`
//       the unit ideal.
// .g  — `@vertices ...` then one edge per line as two tokens.

SimplicialComplex parse_complex(const std::string& text);
std::string write_complex(const SimplicialComplex& c);

MonomialIdeal parse_ideal(const std::string& text);
std::string write_ideal(const MonomialIdeal& ideal);

Graph parse_graph(const std::string& text);
std::string write_graph(const Graph& g);

enum class InputKind { complex, ideal, graph };
InputKind kind_of_path(const std::string& path);  // by extension
std::string read_file(const std::string& path);

}  // namespace shk
