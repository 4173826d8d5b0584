#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>

#include "cgg/graph.hpp"

namespace cgg {

// Plain text, one "u v" pair per line, 0-based. Lines starting with '#' are
// comments; a "# nodes N" comment fixes the node count (otherwise n is the
// caller's value, or the largest label + 1).
void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list(std::istream& in, std::optional<std::size_t> n = std::nullopt);

// Same format, but arbitrary whitespace-free tokens as labels, mapped to
// 0..k-1 in order of first appearance.
Graph read_edge_list_relabel(std::istream& in);

void save_edge_list(const std::filesystem::path& path, const Graph& g);
Graph load_edge_list(const std::filesystem::path& path, std::optional<std::size_t> n = std::nullopt);

}  // namespace cgg
