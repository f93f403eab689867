#include "altlink/io.hpp"

#include <fstream>
#include <sstream>

namespace altlink {

namespace {

[[noreturn]] void syntax(int line, int col, const std::string& what) {
  throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
}

std::string strip_comment(std::string s) {
  if (auto h = s.find('#'); h != std::string::npos) s.erase(h);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.pop_back();
  return s;
}

}  // namespace

Diagram parse_diagram(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  int stage = 0;  // 0 header, 1 count, 2 rows
  int n = 0;
  std::vector<std::vector<Dart>> rows;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip_comment(raw);
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::istringstream ls(line);
    if (stage == 0) {
      std::string word;
      int version = 0;
      if (!(ls >> word >> version) || word != "linkdiagram") syntax(line_no, 1, "expected 'linkdiagram 1'");
      if (version != 1) syntax(line_no, static_cast<int>(line.find_last_of(" ")) + 2, "unsupported version");
      stage = 1;
    } else if (stage == 1) {
      std::string word;
      if (!(ls >> word >> n) || word != "vertices") syntax(line_no, 1, "expected 'vertices N'");
      if (n < 1) syntax(line_no, 10, "vertex count must be positive");
      stage = 2;
    } else {
      const auto colon = line.find(':');
      if (colon == std::string::npos) syntax(line_no, 1, "expected 'v: d0 d1 d2 d3'");
      int v = -1;
      try {
        v = std::stoi(line.substr(0, colon));
      } catch (const std::exception&) {
        syntax(line_no, 1, "bad vertex id");
      }
      if (v != static_cast<int>(rows.size())) syntax(line_no, 1, "vertex ids must be listed in order from 0");
      if (static_cast<int>(rows.size()) >= n) syntax(line_no, 1, "more vertex lines than declared");
      std::istringstream ds(line.substr(colon + 1));
      std::vector<Dart> darts;
      std::string tok;
      while (ds >> tok) {
        try {
          size_t used = 0;
          darts.push_back(std::stoi(tok, &used));
          if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
          syntax(line_no, static_cast<int>(line.find(tok, colon)) + 1, "bad dart '" + tok + "'");
        }
      }
      rows.push_back(std::move(darts));
    }
  }
  if (stage < 2) syntax(line_no + 1, 1, "unexpected end of input (header incomplete)");
  if (static_cast<int>(rows.size()) != n) {
    syntax(line_no + 1, 1, "unexpected end of input: " + std::to_string(rows.size()) + " of " + std::to_string(n) +
                               " vertex lines");
  }
  return Diagram::build(rows);
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::IoError, "cannot write " + path);
  f << content;
  if (!f) throw Error(ErrorCode::IoError, "write failed for " + path);
}

Diagram parse_diagram_file(const std::string& path) { return parse_diagram(read_text_file(path)); }

std::string render_diagram(const Diagram& d) {
  std::string s = "linkdiagram 1\nvertices " + std::to_string(d.num_vertices()) + "\n";
  for (Vertex v = 0; v < d.num_vertices(); ++v) {
    s += std::to_string(v) + ":";
    for (Dart x : d.rotation(v)) s += " " + std::to_string(x);
    s += "\n";
  }
  return s;
}

std::string to_dot(const Diagram& d) {
  std::string s = "graph shadow {\n";
  for (Vertex v = 0; v < d.num_vertices(); ++v) {
    const auto& r = d.rotation(v);
    s += "  v" + std::to_string(v) + ";  // ccw darts " + std::to_string(r[0]) + " " + std::to_string(r[1]) + " " +
         std::to_string(r[2]) + " " + std::to_string(r[3]) + "\n";
  }
  for (Dart x = 0; x < d.num_darts(); x += 2) {
    s += "  v" + std::to_string(d.vertex_of(x)) + " -- v" + std::to_string(d.vertex_of(x + 1)) + " [label=\"e" +
         std::to_string(x / 2) + "\"];\n";
  }
  return s + "}\n";
}

void export_dot(const Diagram& d, const std::string& path) { write_text_file(path, to_dot(d)); }

}  // namespace altlink
