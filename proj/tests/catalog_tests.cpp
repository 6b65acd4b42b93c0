#include "doctest.h"

#include <algorithm>
#include <fstream>
#include <string>
#include <vector>

#include "catgen.hpp"
#include "genus/graph6.hpp"
#include "genus/polynomial.hpp"
#include "genus/survey.hpp"

namespace {

std::vector<std::string> fixture_lines(const std::string& name) {
  std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

}  // namespace

TEST_CASE("connected cubic class counts") {
  CHECK(catgen::connected_cubic_graph6(4).size() == 1);
  CHECK(catgen::connected_cubic_graph6(6).size() == 2);
  CHECK(catgen::connected_cubic_graph6(8).size() == 5);
  CHECK(catgen::connected_cubic_graph6(10).size() == 19);
  CHECK(catgen::connected_cubic_graph6(12).size() == 85);
  // No cubic graph has odd order or fewer than 4 vertices.
  CHECK(catgen::connected_cubic_graph6(5).empty());
  CHECK(catgen::connected_cubic_graph6(7).empty());
  CHECK(catgen::connected_cubic_graph6(2).empty());
  CHECK_THROWS(catgen::connected_cubic_graph6(0));
  CHECK_THROWS(catgen::connected_cubic_graph6(26));
}

TEST_CASE("generated catalogs match the shipped fixtures byte for byte") {
  for (int order : {8, 10, 12, 14}) {
    CAPTURE(order);
    auto generated = catgen::connected_cubic_graph6(order);
    auto shipped = fixture_lines("cubic" + std::string(order < 10 ? "0" : "") +
                                 std::to_string(order) + ".g6");
    CHECK(generated == shipped);
  }
}

TEST_CASE("every generated graph is connected cubic and canonical-unique") {
  auto lines = catgen::connected_cubic_graph6(10);
  REQUIRE(lines.size() == 19);
  for (const std::string& l : lines) {
    genus::Graph g = genus::parse_graph6(l);
    CHECK(g.vertex_count() == 10);
    CHECK(g.is_regular(3));
    CHECK(g.is_simple());
    // parse/write round trip keeps the canonical line.
    CHECK(genus::write_graph6(g) == l);
  }
  // Sorted and duplicate-free.
  auto sorted = lines;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  CHECK(sorted == lines);
  // The Petersen graph is one of the 19.
  CHECK(std::find(lines.begin(), lines.end(), "IsP@PGXD_") != lines.end());
}

TEST_CASE("order-8 catalog: every genus polynomial is real-rooted") {
  for (const std::string& l : catgen::connected_cubic_graph6(8)) {
    genus::Graph g = genus::parse_graph6(l);
    genus::GenusDistribution d = genus::genus_distribution(g);
    CHECK(genus::is_real_rooted(genus::Polynomial::from_coeffs(d.counts)));
  }
}

TEST_CASE("fixture content hashes pin the catalogs") {
  // FNV-1a over the exact file bytes; regenerating must reproduce these.
  CHECK(genus::fnv1a64_file(std::string(FIXTURE_DIR) + "/cubic08.g6") ==
        genus::fnv1a64("GsXPGs\nGsXP_[\nG{O_ww\nG{S_g[\nG}GOW[\n"));
  auto lines12 = catgen::connected_cubic_graph6(12);
  std::string joined;
  for (const auto& l : lines12) joined += l + "\n";
  CHECK(genus::fnv1a64(joined) ==
        genus::fnv1a64_file(std::string(FIXTURE_DIR) + "/cubic12.g6"));
}
