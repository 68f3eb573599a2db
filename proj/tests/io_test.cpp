#include <gtest/gtest.h>

#include <cctype>
#include <filesystem>

#include "uag/uag.hpp"

using namespace uag;

namespace {

std::string data_file(const FiniteAlgebra& a) {
  std::string n = a.name();
  for (auto& c : n) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return std::string(UAG_DATA_DIR) + "/" + n + ".json";
}

bool same_tables(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (!(a.signature() == b.signature()) || a.size() != b.size() || a.neutral() != b.neutral()) return false;
  for (std::size_t s = 0; s < a.signature().size(); ++s) {
    if (a.table(s) != b.table(s)) return false;
  }
  return a.element_names() == b.element_names() && a.name() == b.name();
}

}  // namespace

TEST(AlgebraFiles, ShippedZooMatchesBuiltIns) {
  for (const auto& a : zoo::all()) {
    const auto text = read_file(data_file(a));
    EXPECT_EQ(text, algebra_to_json(a)) << a.name();
    EXPECT_TRUE(same_tables(algebra_from_json(text), a)) << a.name();
  }
}

TEST(AlgebraFiles, LoadSaveIsByteIdentical) {
  const auto dir = std::filesystem::temp_directory_path() / "uag_io_test";
  std::filesystem::create_directories(dir);
  for (const auto& a : zoo::all()) {
    const auto original = read_file(data_file(a));
    const auto path = (dir / "copy.json").string();
    save_algebra(load_algebra(data_file(a)), path);
    EXPECT_EQ(read_file(path), original) << a.name();
  }
  std::filesystem::remove_all(dir);
}

TEST(AlgebraFiles, DerivedAlgebrasRoundTrip) {
  for (const auto& a : {direct_product(zoo::z2_group(), zoo::s3()), direct_power(zoo::l2(), 2),
                        magma_from_term(zoo::m3(), mul(var("y"), var("x")))}) {
    const auto text = algebra_to_json(a);
    const auto back = algebra_from_json(text);
    EXPECT_TRUE(same_tables(back, a)) << a.name();
    EXPECT_EQ(algebra_to_json(back), text);
  }
}

TEST(AlgebraFiles, CustomKind) {
  const std::string text = R"({
  "name": "C",
  "kind": "custom",
  "size": 2,
  "tables": {
    "f": [
      [0, 1],
      [1, 1]
    ],
    "g": [1, 0],
    "k": 1
  }
}
)";
  const auto a = algebra_from_json(text);
  EXPECT_EQ(a.signature().size(), 3u);
  EXPECT_EQ(a.signature()[2].arity, 0);
  EXPECT_EQ(a.apply(a.symbol("k")), 1u);
  EXPECT_EQ(algebra_to_json(a), text);
}

TEST(AlgebraFiles, MalformedInputs) {
  const auto bad = [](const std::string& text) {
    EXPECT_THROW(algebra_from_json(text), MalformedAlgebraError) << text;
  };
  bad("not json");
  bad("[]");
  bad(R"({"name": "x", "kind": "magma", "size": 2})");
  bad(R"({"name": "x", "kind": "magma", "size": 2, "tables": {"*": [[0, 1], [1, 2]]}})");  // out of range
  bad(R"({"name": "x", "kind": "magma", "size": 2, "tables": {"*": [[0, 1]]}})");
  bad(R"({"name": "x", "kind": "magma", "size": 2, "tables": {"*": [[0, 1], [1, -1]]}})");
  bad(R"({"name": "x", "kind": "lattice", "size": 2, "tables": {"*": [[0, 1], [1, 1]]}})");
  bad(R"({"name": "x", "kind": "magma", "size": 0, "tables": {"*": []}})");
  bad(R"({"name": "x", "kind": "magma", "size": 2, "tables": {"*": [[0, 1], [1, 1]], "+": [[0, 1], [1, 1]]}})");
  bad(R"({"name": "x", "kind": "magma", "size": 2, "tables": {"*": [[0, 1], [1, 1]]}, "extra": 1})");
  bad(R"({"name": "x", "kind": "monoid", "size": 2, "tables": {"*": [[0, 1], [1, 1]]}})");  // no neutral
  bad(R"({"name": "x", "kind": "monoid", "size": 2, "tables": {"*": [[0, 1], [1, 1]]}, "neutral": 5})");
  bad(R"({"name": "x", "kind": "magma", "size": 2, "tables": {"*": [[0, 1], [1, 1]]}, "element_names": ["a"]})");
}

TEST(AlgebraFiles, AxiomFailuresAreNotMalformed) {
  // Loads fine; validation reports the problem.
  const auto a = algebra_from_json(
      R"({"name": "x", "kind": "monoid", "size": 2, "tables": {"*": [[0, 0], [1, 1]]}, "neutral": 0})");
  EXPECT_FALSE(validate_algebra(a).ok());
}

TEST(SolutionFiles, GoldenLayout) {
  const auto a = zoo::z4_group();
  const auto s = parse_system("vars x, y; x * y = #1;", a);
  const auto text = solutions_to_json(solve(s, a));
  EXPECT_EQ(text,
            "{\n  \"variables\": [\"x\", \"y\"],\n  \"algebra\": \"Z4\",\n  \"solutions\": [\n    [0, 1],\n"
            "    [1, 0],\n    [2, 3],\n    [3, 2]\n  ]\n}\n");
  EXPECT_EQ(solutions_from_json(text), solve(s, a));
  const auto none = solutions_to_json(SolutionSet({"x"}, "Z4", {}));
  EXPECT_EQ(none, "{\n  \"variables\": [\"x\"],\n  \"algebra\": \"Z4\",\n  \"solutions\": []\n}\n");
  EXPECT_THROW(solutions_from_json("{}"), Error);
}
