#pragma once

#include "lidcol/colouring.hpp"
#include "lidcol/graph.hpp"

#include <filesystem>
#include <istream>
#include <string>

namespace lidcol {

/// Malformed graph or colouring text.
class ParseError : public InputError {
public:
    using InputError::InputError;
};

/// Graph text: header "n m", then m lines "u v" (0-based). Lines whose
/// first non-blank character is '#' are comments. Any whitespace separates
/// tokens on input; output uses single spaces and sorted edges.
Graph parse_graph(std::istream &in);
std::string serialize_graph(const Graph &g);

/// Colouring text: header "n k", then n lines "v c" with 1 <= c <= k and
/// every vertex listed exactly once. Output lists vertices in order.
Colouring parse_colouring(std::istream &in);
std::string serialize_colouring(const Colouring &c);

/// "-" reads standard input.
Graph read_graph_file(const std::filesystem::path &path);
Colouring read_colouring_file(const std::filesystem::path &path);

} // namespace lidcol
