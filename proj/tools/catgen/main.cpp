// Emits the catalog of connected cubic graphs of one order, one sorted graph6
// line per isomorphism class. Exit 2 on bad arguments.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "catgen.hpp"
#include "genus/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Generate the connected cubic graph catalog of one order"};
  int order = 0;
  app.add_option("order", order, "number of vertices")->required()->check(CLI::Range(1, 24));
  std::string output;
  app.add_option("-o,--output", output, "write to this file instead of stdout");
  bool count_only = false;
  app.add_flag("--count", count_only, "print only the number of graphs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    std::vector<std::string> lines = catgen::connected_cubic_graph6(order);
    if (count_only) {
      std::printf("%zu\n", lines.size());
      return 0;
    }
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!output.empty()) {
      file.open(output, std::ios::trunc);
      if (!file) {
        std::fprintf(stderr, "error: cannot open %s for writing\n", output.c_str());
        return 2;
      }
      out = &file;
    }
    for (const std::string& line : lines) *out << line << '\n';
    out->flush();
    return out->good() ? 0 : 2;
  } catch (const genus::error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
