#pragma once

#include <string>
#include <string_view>

#include "indturan/graph.hpp"

namespace indturan {

// graph6 encoding; n <= 62 uses the one-byte header, larger n the
// '~'-prefixed 18-bit (n <= 258047) or '~~' 36-bit header.
std::string encode_graph6(const Graph& g);
// Throws Error(MalformedGraph6) on a bad header, wrong length, characters
// outside 63..126, or nonzero padding bits. A trailing newline is accepted.
Graph decode_graph6(std::string_view text);

Graph read_graph6_file(const std::string& path);
void write_graph6_file(const Graph& g, const std::string& path);

}  // namespace indturan
