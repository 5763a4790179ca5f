#include <doctest.h>

#include <fstream>
#include <sstream>

#include "bracelab/group.hpp"

using namespace bracelab;

TEST_CASE("cayley table round trip") {
  auto g = build_group("D:4");
  std::stringstream ss;
  save_cayley_table(*g, ss);
  auto loaded = load_cayley_table(ss, "file:mem");
  CHECK(loaded->order() == g->order());
  CHECK(loaded->table() == g->table());
  CHECK(loaded->name(0) == "1");
  CHECK(loaded->name(5) == "r_s");  // spaces sanitized on save
  CHECK(find_isomorphism(loaded, g).has_value());
}

TEST_CASE("loader verifies the invariants") {
  SUBCASE("identity not at index 0") {
    std::stringstream ss("2\na b\n1 0\n0 1\n");
    CHECK_THROWS_AS(load_cayley_table(ss, "t"), invariant_error);
  }
  SUBCASE("not a Latin square") {
    std::stringstream ss("2\na b\n0 0\n0 0\n");
    CHECK_THROWS_AS(load_cayley_table(ss, "t"), invariant_error);
  }
  SUBCASE("not associative") {
    // a Latin square with a two-sided identity that is not a group:
    // (1*1)*2 = 2 but 1*(1*2) = 4
    std::stringstream ss(
        "5\na b c d e\n"
        "0 1 2 3 4\n"
        "1 0 3 4 2\n"
        "2 3 4 0 1\n"
        "3 4 1 2 0\n"
        "4 2 0 1 3\n");
    CHECK_THROWS_AS(load_cayley_table(ss, "t"), invariant_error);
  }
  SUBCASE("entry out of range") {
    std::stringstream ss("2\na b\n0 1\n1 7\n");
    CHECK_THROWS_AS(load_cayley_table(ss, "t"), spec_error);
  }
  SUBCASE("truncated input") {
    std::stringstream ss("3\na b c\n0 1 2\n");
    CHECK_THROWS_AS(load_cayley_table(ss, "t"), spec_error);
  }
}

TEST_CASE("file specs participate in build_group") {
  auto g = build_group("S:3");
  std::string path = "/tmp/bracelab_test_s3.grp";
  {
    std::ofstream f(path);
    save_cayley_table(*g, f);
  }
  auto loaded = build_group("file:" + path);
  CHECK(loaded->order() == 6);
  CHECK(loaded->spec() == "file:" + path);
  auto prod = build_group("file:" + path + " x C:2");
  CHECK(prod->order() == 12);
}

TEST_CASE("missing file is a spec error") {
  CHECK_THROWS_AS(build_group("file:/nonexistent/path.grp"), spec_error);
}
