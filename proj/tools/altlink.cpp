// Command-line front end; talks to the library only through the C interface.
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "altlink/altlink.h"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Failure {
  int exit_code;
};

// Reports a failed call and unwinds with the matching exit code. Unreadable
// or malformed inputs count as usage errors.
void check(altlink_status s) {
  if (s == ALTLINK_OK) return;
  std::string name = altlink_status_name(s);
  std::cerr << "error: " << altlink_last_error() << "\n";
  throw Failure{name == "IoError" || name == "SyntaxError" ? kUsage : kFailed};
}

struct Text {
  char* p = nullptr;
  ~Text() { altlink_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

using DiagramPtr = std::unique_ptr<altlink_diagram, decltype(&altlink_diagram_free)>;
using TracePtr = std::unique_ptr<altlink_trace, decltype(&altlink_trace_free)>;
using CatalogPtr = std::unique_ptr<altlink_catalog, decltype(&altlink_catalog_free)>;

DiagramPtr load(const std::string& path) {
  altlink_diagram* d = nullptr;
  check(altlink_diagram_load(path.c_str(), &d));
  return {d, altlink_diagram_free};
}

void write_file(const std::string& path, const std::string& content) {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) {
    std::cerr << "error: IoError: cannot write " << path << "\n";
    throw Failure{kUsage};
  }
  std::fwrite(content.data(), 1, content.size(), f);
  std::fclose(f);
}

void emit_diagram(const altlink_diagram* d, const std::string& out) {
  if (out.empty()) {
    Text t;
    check(altlink_diagram_render(d, &t.p));
    std::cout << t.str();
  } else {
    check(altlink_diagram_save(d, out.c_str()));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shadow rewriting toolkit for prime alternating link diagrams"};
  app.require_subcommand(1);

  std::string file, trace_path, out, op;
  std::vector<int> operands;
  int n = 0, depth_cap = -1;
  bool oracle = false, no_fold = false;

  auto* validate = app.add_subcommand("validate", "Check a diagram is a reduced prime shadow");
  validate->add_option("diagram", file, "Diagram file")->required();

  auto* components = app.add_subcommand("components", "Count link components and classify crossings");
  components->add_option("diagram", file, "Diagram file")->required();

  auto* groups = app.add_subcommand("groups", "List groups with kind, sign and parity");
  groups->add_option("diagram", file, "Diagram file")->required();

  auto* condense = app.add_subcommand("condense", "Collapse 2-groups until none remain");
  condense->add_option("diagram", file, "Diagram file")->required();
  condense->add_option("--out", out, "Write the condensed diagram here");

  auto* apply = app.add_subcommand("apply", "Apply one T (chain) or OTS (triangle) move");
  apply->add_option("diagram", file, "Diagram file")->required();
  apply->add_option("op", op, "T or OTS")->required()->check(CLI::IsMember({"T", "OTS"}));
  apply->add_option("crossings", operands, "Crossings of the chain or triangle")->required();
  apply->add_option("--out", out, "Write the result here instead of stdout");

  auto* reduce = app.add_subcommand("reduce", "Reduce to the torus shadow, recording each move");
  reduce->add_option("diagram", file, "Diagram file")->required();
  reduce->add_option("--trace", trace_path, "Write the move trace (JSON lines) here");
  reduce->add_option("--depth-cap", depth_cap, "Depth cap of the region-emptying search")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Replay a trace against its diagram");
  verify->add_option("diagram", file, "Diagram file")->required();
  verify->add_option("trace", trace_path, "Trace file")->required();

  auto* orbit = app.add_subcommand("orbit", "Enumerate every shadow reachable from the torus shadow");
  orbit->add_option("n", n, "Crossing count")->required()->check(CLI::PositiveNumber);
  orbit->add_option("--depth-cap", depth_cap, "Stop after this many BFS levels")->check(CLI::NonNegativeNumber);
  orbit->add_flag("--oracle", oracle, "Compare with independently generated shadows");
  orbit->add_flag("--no-reflection-fold", no_fold, "Keep mirror images distinct");
  orbit->add_option("--out", out, "Write PREFIX.codes and PREFIX.witness.jsonl");

  auto* canon = app.add_subcommand("canon", "Print the canonical code");
  canon->add_option("diagram", file, "Diagram file")->required();
  canon->add_flag("--no-reflection-fold", no_fold, "Keep mirror images distinct");

  auto* dot = app.add_subcommand("export-dot", "Export the shadow as a DOT multigraph");
  dot->add_option("diagram", file, "Diagram file")->required();
  dot->add_option("--out", out, "Write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (validate->parsed()) {
      auto d = load(file);
      int ok = 0;
      Text r;
      check(altlink_validate(d.get(), &ok, &r.p));
      std::cout << r.str();
      return ok ? kOk : kFailed;
    }
    if (components->parsed()) {
      auto d = load(file);
      Text r;
      check(altlink_components(d.get(), nullptr, &r.p));
      std::cout << r.str();
      return kOk;
    }
    if (groups->parsed()) {
      auto d = load(file);
      Text r;
      check(altlink_groups(d.get(), &r.p));
      std::cout << r.str();
      return kOk;
    }
    if (condense->parsed()) {
      auto d = load(file);
      altlink_diagram* raw = nullptr;
      Text r;
      check(altlink_condense(d.get(), &raw, &r.p));
      DiagramPtr result{raw, altlink_diagram_free};
      std::cout << r.str();
      if (!out.empty()) check(altlink_diagram_save(result.get(), out.c_str()));
      return kOk;
    }
    if (apply->parsed()) {
      auto d = load(file);
      altlink_diagram* raw = nullptr;
      if (op == "T") {
        check(altlink_apply_t(d.get(), operands.data(), operands.size(), &raw));
      } else {
        if (operands.size() != 3) {
          std::cerr << "error: OTS takes exactly three crossings\n";
          return kUsage;
        }
        check(altlink_apply_ots(d.get(), operands.data(), &raw));
      }
      DiagramPtr result{raw, altlink_diagram_free};
      emit_diagram(result.get(), out);
      return kOk;
    }
    if (reduce->parsed()) {
      auto d = load(file);
      altlink_trace* raw = nullptr;
      check(altlink_reduce(d.get(), depth_cap, &raw));
      TracePtr t{raw, altlink_trace_free};
      Text summary;
      check(altlink_trace_summary(t.get(), &summary.p));
      std::cout << summary.str();
      if (!trace_path.empty()) {
        Text jsonl;
        check(altlink_trace_jsonl(t.get(), &jsonl.p));
        write_file(trace_path, jsonl.str());
      }
      return kOk;
    }
    if (verify->parsed()) {
      auto d = load(file);
      altlink_trace* raw = nullptr;
      altlink_status s = altlink_trace_load(trace_path.c_str(), &raw);
      if (s != ALTLINK_OK && std::string(altlink_status_name(s)) == "BadTrace") {
        std::cout << "trace rejected\n  " << altlink_last_error() << "\n";
        return kFailed;
      }
      check(s);
      TracePtr t{raw, altlink_trace_free};
      int ok = 0;
      Text r;
      check(altlink_verify(d.get(), t.get(), &ok, &r.p));
      std::cout << r.str();
      return ok ? kOk : kFailed;
    }
    if (orbit->parsed()) {
      altlink_catalog* raw = nullptr;
      check(altlink_orbit(n, depth_cap, no_fold ? 0 : 1, &raw));
      CatalogPtr c{raw, altlink_catalog_free};
      std::cout << "orbit " << n << ": " << altlink_catalog_size(c.get()) << " shadows"
                << (altlink_catalog_partial(c.get()) ? " (partial: depth cap reached)" : "") << "\n";
      if (!out.empty()) {
        Text codes, witnesses;
        check(altlink_catalog_codes(c.get(), &codes.p));
        check(altlink_catalog_witnesses(c.get(), &witnesses.p));
        write_file(out + ".codes", codes.str());
        write_file(out + ".witness.jsonl", witnesses.str());
      }
      if (oracle) {
        int equal = 0;
        Text r;
        check(altlink_catalog_check_brute_force(c.get(), &equal, &r.p));
        std::cout << r.str();
        return equal ? kOk : kFailed;
      }
      return kOk;
    }
    if (canon->parsed()) {
      auto d = load(file);
      Text r;
      check(altlink_diagram_canon(d.get(), no_fold ? 0 : 1, &r.p));
      std::cout << r.str() << "\n";
      return kOk;
    }
    if (dot->parsed()) {
      auto d = load(file);
      if (out.empty()) {
        Text r;
        check(altlink_diagram_dot(d.get(), &r.p));
        std::cout << r.str();
      } else {
        check(altlink_diagram_export_dot(d.get(), out.c_str()));
      }
      return kOk;
    }
  } catch (const Failure& f) {
    return f.exit_code;
  }
  return kUsage;
}
