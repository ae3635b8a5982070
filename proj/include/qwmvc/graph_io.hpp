#pragma once

#include <iosfwd>
#include <string>

#include "qwmvc/graph.hpp"

namespace qwmvc {

/// Edge-list interchange format: first non-comment line "n m", then m lines
/// "u v" (0-based). Lines starting with '#' are comments. Writing emits the
/// canonical sorted order.
Graph read_edge_list(std::istream& in, const std::string& source_name = "<stream>");
Graph read_edge_list_file(const std::string& path);

void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace qwmvc
