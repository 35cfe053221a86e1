#pragma once

#include "topo/framed_link.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace topo {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(int line_, int column_, const std::string &what_)
        : std::runtime_error("line " + std::to_string(line_) + ", col " +
                             std::to_string(column_) + ": " + what_),
          line(line_), column(column_) {}
};

// Full parse result of the diagram text format. `rot` and `l0` statements are
// carried along for the gamma module; plain links ignore them.
struct ParsedDiagram {
    FramedLink link;
    std::map<std::string, Int> rot;   // per component label
    std::set<std::string> l0;         // surgered 1-handle components
};

// Statements, one per line (';' also separates):
//   comp <label> <framing>
//   lk <label> <label> <int>
//   chain <int> <int> ...
//   rot <label> <int>
//   l0 <label>
// '#' starts a comment. Re-declaring a label, asymmetric lk data (conflicting
// values for the same pair) and references to undeclared labels are errors.
ParsedDiagram parse_diagram(const std::string &text);

FramedLink parse_link(const std::string &text);

// Normalized form: one comp statement per component in order, then nonzero
// lk statements for i < j, then nonzero rot and l0 statements.
std::string serialize_link(const FramedLink &link);
std::string serialize_diagram(const ParsedDiagram &diagram);

}  // namespace topo
