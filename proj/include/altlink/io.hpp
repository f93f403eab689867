#pragma once

#include <string>
#include <string_view>

#include "altlink/diagram.hpp"

namespace altlink {

/// Text format: "linkdiagram 1", "vertices N", then one "v: d0 d1 d2 d3" line
/// per vertex in counterclockwise order. '#' starts a comment.
Diagram parse_diagram(std::string_view text);
Diagram parse_diagram_file(const std::string& path);
std::string render_diagram(const Diagram& d);
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

std::string to_dot(const Diagram& d);
void export_dot(const Diagram& d, const std::string& path);

}  // namespace altlink
