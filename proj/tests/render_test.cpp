#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "bkpuzzle/enumerate.hpp"
#include "bkpuzzle/render.hpp"

using namespace bkp;

namespace {

std::string slurp(const char* name) {
  std::ifstream in(std::string(BKP_GOLDEN_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Puzzle example() { return list_puzzles(parse_key("12132", "23112", "32121"))[0]; }

}  // namespace

TEST(Ascii, Monochrome) {
  Puzzle p(2, 1);
  for (const Edge& e : p.edges()) p.set(e, Label::single(1));
  EXPECT_EQ(render_ascii(p),
            "        *\n"
            "      1   1\n"
            "    *   1   *\n"
            "  1   1   1   1\n"
            "*   1   *   1   *\n");
}

TEST(Ascii, Golden) { EXPECT_EQ(render_ascii(example()), slurp("example.txt")); }

TEST(Svg, GoldenAndDeterministic) {
  std::string a = render_svg(example());
  EXPECT_EQ(a, slurp("example.svg"));
  EXPECT_EQ(a, render_svg(example()));
}

TEST(Svg, Geometry) {
  Puzzle p(1, 1);
  p.set({0, 0, Dir::kE}, Label::single(1));
  p.set({0, 0, Dir::kNE}, Label::single(1));
  p.set({1, 0, Dir::kNW}, Label::single(1));
  std::string s = render_svg(p);
  // side 40 plus a margin of 20 on each side
  EXPECT_NE(s.find("width=\"80.00\""), std::string::npos) << s;
  EXPECT_NE(s.find("20.00,54.64 60.00,54.64 40.00,20.00"), std::string::npos) << s;
}

TEST(Svg, Options) {
  std::string full = render_svg(example());
  std::string bare = render_svg(example(), {false, false});
  EXPECT_NE(full.find("marker-end"), std::string::npos);
  EXPECT_EQ(bare.find("marker-end"), std::string::npos);
  EXPECT_EQ(bare.find("<text"), std::string::npos);
  EXPECT_LT(bare.size(), full.size());
}
