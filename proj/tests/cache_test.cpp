#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "bkpuzzle/cache.hpp"

using namespace bkp;
namespace fs = std::filesystem;

namespace {

class CacheTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("bkp_cache_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path file() const { return dir_ / "sub" / "coefficients.jsonl"; }

  fs::path dir_;
};

std::vector<std::string> lines(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> out;
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_F(CacheTest, PutFindReload) {
  auto key = parse_key("12132", "23112", "32121");
  {
    CoeffCache c(file());
    EXPECT_FALSE(c.find(key));
    EXPECT_EQ(bk_coefficient(key, &c), 1);
    ASSERT_TRUE(c.find(key));
    EXPECT_EQ(c.find(key)->count, 1);
    EXPECT_TRUE(c.find(key)->rigid);
    bk_coefficient(key, &c);  // cached, not written again
    c.put(make_record(key, 1, Provenance::kEnumeration));
  }
  ASSERT_EQ(lines(file()).size(), 1u);
  CoeffCache again(file());
  ASSERT_TRUE(again.find(key));
  EXPECT_EQ(again.find(key)->provenance, Provenance::kEnumeration);
  EXPECT_FALSE(again.find(key, "other-pin"));
  again.put(make_record(key, 1, Provenance::kOracle));
  EXPECT_EQ(lines(file()).size(), 2u);
}

TEST_F(CacheTest, LineFormat) {
  CoeffCache c(file());
  c.put(make_record(parse_key("12", "12", "12"), 1, Provenance::kEnumeration));
  auto l = lines(file());
  ASSERT_EQ(l.size(), 1u);
  auto j = nlohmann::json::parse(l[0]);
  EXPECT_EQ(j["nw"], "12");
  EXPECT_EQ(j["d"], 2);
  EXPECT_EQ(j["count"], "1");
  EXPECT_EQ(j["rigid"], true);
  EXPECT_EQ(j["provenance"], "enumeration");
  EXPECT_EQ(j["pin"], kPinVersion);
}

TEST_F(CacheTest, ConflictsAreRefusedAndAudited) {
  auto key = parse_key("12", "12", "12");
  CoeffCache c(file());
  c.put(make_record(key, 1, Provenance::kEnumeration));
  EXPECT_THROW(c.put(make_record(key, 2, Provenance::kOracle)), CacheConflict);
  EXPECT_TRUE(audit(c).ok());
  EXPECT_EQ(audit(c).checked, 1u);

  // a hand-edited file with a wrong value
  {
    std::ofstream out(file(), std::ios::app);
    auto r = make_record(key, 3, Provenance::kOracle);
    out << r.to_json().dump() << "\n";
  }
  CoeffCache bad(file());
  EXPECT_EQ(bad.conflicts().size(), 1u);
  auto a = audit(bad);
  EXPECT_FALSE(a.ok());
  EXPECT_EQ(a.problems.size(), 2u);  // conflict line and wrong recomputation
}

TEST_F(CacheTest, MalformedLine) {
  fs::create_directories(file().parent_path());
  std::ofstream(file()) << "{\"nw\":\"12\"}\n";
  EXPECT_THROW(CoeffCache{file()}, std::runtime_error);
}

TEST(CachePath, Precedence) {
  EXPECT_EQ(default_cache_path("/x/y.jsonl"), fs::path("/x/y.jsonl"));
  ::setenv("BKP_CACHE", "/env/c.jsonl", 1);
  EXPECT_EQ(default_cache_path(), fs::path("/env/c.jsonl"));
  ::unsetenv("BKP_CACHE");
  ::setenv("HOME", "/home/someone", 1);
  EXPECT_EQ(default_cache_path(), fs::path("/home/someone/.bkpuzzle/coefficients.jsonl"));
}
