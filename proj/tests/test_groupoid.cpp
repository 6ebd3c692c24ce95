#include <algorithm>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "catch_amalgamated.hpp"

#include <ghyper/groupoid.hpp>

using namespace ghyper;

namespace {
  std::string sample(std::string const& file) {
    return std::string(GHYPER_SAMPLES_DIR) + "/" + file;
  }

  // Every equation a*x = b and y*a = b has exactly one solution.
  bool latin_by_solving(Groupoid const& g) {
    auto const n = g.size();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t left = 0, right = 0;
        for (std::size_t x = 0; x < n; ++x) {
          left += g(a, x) == b ? 1 : 0;
          right += g(x, a) == b ? 1 : 0;
        }
        if (left != 1 || right != 1) {
          return false;
        }
      }
    }
    return true;
  }
}  // namespace

TEST_CASE("builtin cyclic groups", "[groupoid]") {
  auto const z3 = build_builtin("cyclic", 3);
  CHECK(z3.size() == 3);
  CHECK(z3(1, 2) == 0);
  CHECK(z3(2, 2) == 1);
  CHECK(z3.is_group());
  CHECK(z3.is_commutative());

  auto const z5 = build_builtin("cyclic:5");
  CHECK(z5.is_associative());
  CHECK(z5.is_quasigroup());
  CHECK(z5.identity() == std::size_t{0});
}

TEST_CASE("builtin left-zero is associative but not a quasigroup", "[groupoid]") {
  auto const g = build_builtin("left-zero", 2);
  CHECK(g.is_associative());
  CHECK_FALSE(g.is_quasigroup());
  CHECK_FALSE(g.identity().has_value());
  CHECK(g(1, 0) == 1);
}

TEST_CASE("builtin symmetric-3 and klein-4", "[groupoid]") {
  auto const s3 = build_builtin("symmetric-3");
  CHECK(s3.size() == 6);
  CHECK(s3.is_group());
  CHECK_FALSE(s3.is_commutative());
  CHECK(s3.element_name(0) == "012");

  auto const v4 = build_builtin("klein-4");
  CHECK(v4.is_group());
  CHECK(v4.is_commutative());
  for (std::size_t x = 0; x < 4; ++x) {
    CHECK(v4(x, x) == 0);
  }
}

TEST_CASE("builtin rejects bad names and sizes", "[groupoid][errors]") {
  CHECK_THROWS_AS(build_builtin("dihedral", 4), InputError);
  CHECK_THROWS_AS(build_builtin("cyclic", 0), InputError);
  CHECK_THROWS_AS(build_builtin("klein-4", 5), InputError);
  CHECK_THROWS_AS(build_builtin("cyclic:x"), InputError);
  CHECK_THROWS_AS(build_builtin("cyclic", 17), InputError);
}

TEST_CASE("groupoids larger than the carrier limit are refused", "[groupoid][errors]") {
  std::vector<std::string> names;
  for (int i = 0; i < 17; ++i) {
    names.push_back(std::to_string(i));
  }
  std::vector<std::vector<std::size_t>> table(17, std::vector<std::size_t>(17, 0));
  CHECK_THROWS_AS(Groupoid("big", names, table), SizeLimitError);
}

TEST_CASE("parse Z2 document", "[groupoid][parse]") {
  auto const g = parse_groupoid(
      R"({"name":"Z2","elements":["e","a"],"table":[["e","a"],["a","e"]]})");
  CHECK(g.name() == "Z2");
  CHECK(g.identity() == std::size_t{0});
  CHECK(g.index_of("a") == std::size_t{1});
  CHECK_FALSE(g.index_of("b").has_value());
}

TEST_CASE("a repeated row is not a quasigroup", "[groupoid][parse]") {
  auto const g = parse_groupoid(
      R"({"name":"g","elements":["e","a"],"table":[["e","a"],["e","a"]]})");
  CHECK_FALSE(g.is_quasigroup());
}

TEST_CASE("parse Z3 document", "[groupoid][parse]") {
  auto const g = load_groupoid(sample("z3.json"));
  CHECK(g.size() == 3);
  CHECK(g.is_associative());
  CHECK(g.is_commutative());
  CHECK(g == build_builtin("cyclic", 3));
}

TEST_CASE("parse errors", "[groupoid][parse][errors]") {
  CHECK_THROWS_AS(parse_groupoid("{"), InputError);
  CHECK_THROWS_AS(parse_groupoid("[]"), InputError);
  CHECK_THROWS_AS(parse_groupoid(R"({"elements":["e"],"table":[["e"]]})"), InputError);
  CHECK_THROWS_AS(
      parse_groupoid(R"({"name":"g","elements":["e","a"],"table":[["e","a"]]})"),
      InputError);
  CHECK_THROWS_AS(
      parse_groupoid(R"({"name":"g","elements":["e","a"],"table":[["e","a"],["a"]]})"),
      InputError);
  CHECK_THROWS_AS(
      parse_groupoid(R"({"name":"g","elements":["e","a"],"table":[["e","a"],["a","b"]]})"),
      InputError);
  CHECK_THROWS_AS(
      parse_groupoid(R"({"name":"g","elements":["e","e"],"table":[["e","e"],["e","e"]]})"),
      InputError);
  CHECK_THROWS_AS(parse_groupoid(R"({"name":"g","elements":[],"table":[]})"), InputError);
  CHECK_THROWS_AS(load_groupoid(sample("no-such-file.json")), InputError);
}

TEST_CASE("document round trip", "[groupoid][parse]") {
  for (auto const* spec : {"cyclic:4", "symmetric-3", "left-zero:3", "right-zero:2"}) {
    auto const g    = build_builtin(spec);
    auto const back = parse_groupoid(to_document(g).dump());
    CHECK(back == g);
    CHECK(back.element_names() == g.element_names());
  }
}

TEST_CASE("sample magma is commutative but not associative", "[groupoid]") {
  auto const g = load_groupoid(sample("rock-paper-scissors.json"));
  CHECK(g.is_commutative());
  CHECK_FALSE(g.is_associative());
  CHECK_FALSE(g.is_quasigroup());
}

TEST_CASE("groupoid properties", "[groupoid]") {
  auto const z3 = groupoid_properties(build_builtin("cyclic", 3));
  CHECK(z3.center == SubsetMask::full(3));

  auto const s3 = groupoid_properties(build_builtin("symmetric-3"));
  CHECK(s3.center == SubsetMask::singleton(0));
  CHECK(s3.identity == std::size_t{0});

  auto const lz = groupoid_properties(build_builtin("left-zero", 3));
  CHECK(lz.associative);
  CHECK_FALSE(lz.quasigroup);
  CHECK(lz.center.empty());
}

TEST_CASE("homomorphisms", "[groupoid]") {
  auto const z6 = build_builtin("cyclic", 6);
  auto const z3 = build_builtin("cyclic", 3);
  auto const z2 = build_builtin("cyclic", 2);
  std::vector<std::size_t> mod3 = {0, 1, 2, 0, 1, 2};
  CHECK(is_homomorphism(z6, z3, mod3));
  std::vector<std::size_t> plus1 = {1, 2, 0};
  CHECK_FALSE(is_homomorphism(z3, z3, plus1));
  std::vector<std::size_t> id = {0, 1};
  CHECK(is_homomorphism(z2, z2, id));

  std::vector<std::size_t> short_map = {0, 1};
  CHECK_THROWS_AS(is_homomorphism(z3, z3, short_map), InputError);
  std::vector<std::size_t> out_of_range = {0, 1, 3};
  CHECK_THROWS_AS(is_homomorphism(z3, z3, out_of_range), InputError);
}

TEST_CASE("quasigroup flag agrees with unique solvability on random tables",
          "[groupoid][property]") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 3000; ++trial) {
    std::size_t const                     n = 1 + static_cast<std::size_t>(rng() % 4);
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    if (trial % 3 == 0) {
      // a shuffled Latin square: rows and columns of Z_n permuted
      std::vector<std::size_t> r(n), c(n), s(n);
      for (std::size_t i = 0; i < n; ++i) {
        r[i] = c[i] = s[i] = i;
      }
      std::shuffle(r.begin(), r.end(), rng);
      std::shuffle(c.begin(), c.end(), rng);
      std::shuffle(s.begin(), s.end(), rng);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          table[i][j] = s[(r[i] + c[j]) % n];
        }
      }
    } else {
      for (auto& row : table) {
        for (auto& v : row) {
          v = static_cast<std::size_t>(rng() % n);
        }
      }
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(std::to_string(i));
    }
    Groupoid const g("random", names, table);
    INFO("trial " << trial);
    CHECK(g.is_quasigroup() == latin_by_solving(g));
  }
}

TEST_CASE("renamed keeps the table", "[groupoid]") {
  auto const g = build_builtin("cyclic", 2).renamed("Z2", {"e", "a"});
  CHECK(g == build_builtin("cyclic", 2));
  CHECK(g.element_name(1) == "a");
  CHECK_THROWS_AS(g.renamed("bad", {"e", "e"}), InputError);
  CHECK_THROWS_AS(g.renamed("bad", {"e"}), InputError);
}
