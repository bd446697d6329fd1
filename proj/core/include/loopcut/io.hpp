#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <loopcut/dag.hpp>
#include <loopcut/multigraph.hpp>

namespace loopcut {

/// Raised on malformed input files; line() is 1-based (0 = whole file).
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& message, std::size_t line);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// UGRAPH v1 — undirected weighted multigraph, one directive per line,
/// `#` starts a comment, blank lines ignored:
///     graph <n>                      (first directive; n = number of nodes)
///     node <id> <weight|inf>         (weight: positive real)
///     edge <u> <v> <multiplicity>    (u != v, one line per pair, mult >= 1)
///     selfloop <v> <count>           (one line per vertex, count >= 0)
MultiGraph read_ugraph(std::istream& in);
MultiGraph read_ugraph_file(const std::string& path);
void write_ugraph(std::ostream& out, const MultiGraph& g);

/// BNDAG v1 — directed acyclic graph with per-vertex domain sizes:
///     dag <n>
///     node <id> <domain_size>        (domain_size >= 2)
///     arc <parent> <child>           (no duplicates, graph must be acyclic)
Dag read_bndag(std::istream& in);
Dag read_bndag_file(const std::string& path);
void write_bndag(std::ostream& out, const Dag& d);

/// Canonical textual forms used by every writer: shortest round-trip decimal
/// for doubles, "inf" for the infinite weight.
std::string format_double(double value);
std::string format_weight(Weight w);

}  // namespace loopcut
