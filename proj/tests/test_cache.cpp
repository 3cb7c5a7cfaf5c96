#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>
#include <unistd.h>

#include "hall/cache.hpp"

using namespace hall;

namespace {

std::filesystem::path fresh_dir(const std::string& tag) {
  auto d = std::filesystem::temp_directory_path() / ("hall_cache_test_" + tag + "_" + std::to_string(getpid()));
  std::filesystem::remove_all(d);
  return d;
}

GradeTables direct_tables(const Engine& e, const DimVector& d) {
  GradeTables t;
  for (const IsoClass& L : e.classes(d)) t[L] = *e.hall_table(L);
  return t;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("serialize and parse round trip") {
  auto c2 = std::make_shared<NilpotentCyclicEngine>(2, 3);
  auto k2 = std::make_shared<BruteForceEngine>(std::make_shared<const Quiver>(Quiver::kronecker()), 2);
  for (const Engine* e : {static_cast<const Engine*>(c2.get()), static_cast<const Engine*>(k2.get())})
    for (const DimVector& d : {DimVector{1, 1}, DimVector{2, 1}, DimVector{2, 2}}) {
      GradeTables t = direct_tables(*e, d);
      std::string text = serialize_tables(*e, d, t);
      auto back = parse_tables(*e, d, text);
      REQUIRE(back.has_value());
      CHECK(*back == t);
    }
}

TEST_CASE("corrupt or foreign records are rejected") {
  NilpotentCyclicEngine c2(2, 2);
  DimVector d{2, 2};
  std::string text = serialize_tables(c2, d, direct_tables(c2, d));
  REQUIRE(parse_tables(c2, d, text));

  std::string flipped = text;
  size_t tab = flipped.find('\t');
  size_t digit = flipped.find('\n', tab) - 1;
  flipped[digit] = flipped[digit] == '1' ? '2' : '1';
  CHECK_FALSE(parse_tables(c2, d, flipped));
  CHECK_FALSE(parse_tables(c2, d, text.substr(0, text.size() / 2)));
  CHECK_FALSE(parse_tables(c2, d, ""));

  std::string old = text;
  old.replace(0, std::string(kHallTableVersion).size(), "hall-tables-0");
  CHECK_FALSE(parse_tables(c2, d, old));
  CHECK_FALSE(parse_tables(c2, {2, 1}, text));
  NilpotentCyclicEngine other_q(2, 3);
  CHECK_FALSE(parse_tables(other_q, d, text));
  NilpotentCyclicEngine other_r(3, 2);
  CHECK_FALSE(parse_tables(other_r, {2, 2, 0}, text));
}

TEST_CASE("engine with a file store agrees with one without") {
  auto dir = fresh_dir("agree");
  auto store = std::make_shared<FileHallStore>(dir);
  auto check_all = [](const Engine& a, const Engine& b, const DimVector& d) {
    for (const IsoClass& L : a.classes(d)) CHECK(*a.hall_table(L) == *b.hall_table(L));
  };
  for (int round = 0; round < 2; ++round) {
    NilpotentCyclicEngine plain(2, 2), stored(2, 2);
    stored.set_store(store);
    check_all(stored, plain, {2, 2});
    check_all(stored, plain, {3, 2});
  }
  CHECK(store->misses() == 2);
  CHECK(store->hits() == 2);

  // damage one file: it is rejected, recomputed and rewritten
  NilpotentCyclicEngine probe(2, 2);
  auto path = store->path_for(probe, {2, 2});
  std::string good = slurp(path);
  {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << good.substr(0, good.size() - 5);
  }
  NilpotentCyclicEngine again(2, 2), plain(2, 2);
  again.set_store(store);
  check_all(again, plain, {2, 2});
  CHECK(store->rejected() == 1);
  CHECK(slurp(path) == good);
  std::filesystem::remove_all(dir);
}

TEST_CASE("unwritable cache directory") {
  auto dir = fresh_dir("file");
  { std::ofstream(dir) << "x"; }
  CHECK_THROWS_AS(FileHallStore(dir / "sub"), std::invalid_argument);
  std::filesystem::remove(dir);
}
