#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "lsx/format.hpp"
#include "lsx/gallery.hpp"
#include "lsx/rng.hpp"

using namespace lsx;

namespace {

const char* kG5Text =
    "structure g5\n"
    "elements 3\n"
    "mode table\n"
    "map {} -> {0 1 2}\n"
    "map {0} -> {0 1}\n"
    "map {0 1} -> {0 1}\n"
    "default full\n";

std::string error_message(const std::string& text) {
  try {
    parse_structure_file(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parsing the three-element structure file") {
  const StructureFile file = parse_structure_file(kG5Text);
  CHECK(file.name == "g5");
  CHECK(file.n == 3);
  CHECK(file.table_mode);
  CHECK(file.entries.size() == 3);
  CHECK(file.default_rule == DefaultRule::Full);
  const LogicalStructure s = to_structure(file);
  CHECK(s.table == gallery::g5_structure().table);
}

TEST_CASE("rule mode files") {
  const StructureFile file = parse_structure_file(
      "structure id2\nelements 2\nmode rule\nrule identity\n");
  CHECK(!file.table_mode);
  const LogicalStructure s = to_structure(file);
  CHECK(s.consequences(0b10) == 0b10);
}

TEST_CASE("comments and blank lines are ignored") {
  const StructureFile file = parse_structure_file(
      "# header comment\n\nstructure c\n  elements 2  # trailing\n\nmode rule\nrule full\n");
  CHECK(file.name == "c");
  CHECK(to_structure(file).consequences(0) == 0b11);
}

TEST_CASE("serialization round-trips") {
  // token-level: serializing the parsed file reproduces the original tokens
  const StructureFile g5 = parse_structure_file(kG5Text);
  CHECK(lex_tokens(serialize_structure_file(g5)) == lex_tokens(kG5Text));

  // value-level: parse(serialize(x)) == x over assorted files
  std::vector<StructureFile> files;
  files.push_back(g5);
  files.push_back(parse_structure_file("structure r\nelements 4\nmode rule\nrule identity\n"));
  files.push_back(parse_structure_file(
      "structure d\nelements 3\nmode table\nmap {1} -> {1 2}\ndefault {0 2}\n"));
  SplitMix64 rng(0x60D);
  for (int trial = 0; trial < 30; ++trial) {
    StructureFile f;
    f.name = "t" + std::to_string(trial);
    f.n = 2 + static_cast<int>(rng.below(3));
    f.table_mode = true;
    const Mask full = full_mask(f.n);
    for (Mask g = 0; g <= full; ++g) {
      if (rng.next() & 1u) f.entries.push_back({g, static_cast<Mask>(rng.below(full + 1u))});
    }
    f.default_rule = DefaultRule::Identity;
    files.push_back(std::move(f));
  }
  for (const auto& f : files) {
    CHECK(parse_structure_file(serialize_structure_file(f)) == f);
  }
}

TEST_CASE("parse errors carry positions") {
  CHECK(error_message("structure x\nelements 3\nmode table\nmap {0} -> {1}\nmap {0} -> {2}\n"
                      "default full\n")
            .find("line 5") != std::string::npos);
  CHECK(error_message("structure x\nelements 2\nmode table\nmap {7} -> {0}\ndefault full\n")
            .find("outside carrier") != std::string::npos);
  CHECK(error_message("structure x\nelements 99\nmode rule\nrule identity\n")
            .find("between 1 and 16") != std::string::npos);
  CHECK(error_message("structure x\nelements 2\nmode rule\nrule identity\nwhat now\n")
            .find("unknown directive") != std::string::npos);
  CHECK(error_message("elements 2\nmode rule\nrule identity\n").find("structure") !=
        std::string::npos);
  CHECK(error_message("structure x\nelements 2\nmode table\nmap {0} -> {0}\n")
            .find("default") != std::string::npos);
}

TEST_CASE("the empty rule is rejected at construction") {
  const StructureFile file =
      parse_structure_file("structure e\nelements 2\nmode rule\nrule empty\n");
  try {
    to_structure(file);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptyRelation);
  }
}

TEST_CASE("arrow files") {
  const ArrowTable a = parse_arrow_file("arrow p\nelements 2\nrow 0 -> 0 1\nrow 1 -> 0 1\n");
  CHECK(a.at(1, 0) == 0);
  CHECK(a.at(1, 1) == 1);
  CHECK_THROWS_AS(parse_arrow_file("arrow p\nelements 2\nrow 0 -> 0 1\n"), Error);
  CHECK_THROWS_AS(parse_arrow_file("arrow p\nelements 2\nrow 0 -> 0 5\nrow 1 -> 0 1\n"), Error);
  CHECK_THROWS_AS(
      parse_arrow_file("arrow p\nelements 2\nrow 0 -> 0 1\nrow 0 -> 0 1\nrow 1 -> 0 1\n"),
      Error);
}
