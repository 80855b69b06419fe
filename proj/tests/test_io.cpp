#include <gtest/gtest.h>

#include "mockeis/io.hpp"
#include "mockeis/mock_eisenstein.hpp"

using namespace mockeis;

TEST(Json, RoundTripIsExact) {
  const MockFamily f = f_family(5, 8, 30, FamilyRoute::recursionA);
  for (int j = 1; j <= 8; ++j) {
    const LabeledSeries in{"f", 5, j, f.member(j)};
    const std::string text = to_json(in).dump();
    const LabeledSeries out = parse_labeled_series(text);
    EXPECT_EQ(out.series, in.series);
    EXPECT_EQ(out.k, 5);
    EXPECT_EQ(out.j, j);
    EXPECT_EQ(out.kind, "f");
    EXPECT_EQ(to_json(out).dump(), text);
  }
}

TEST(Json, Schema) {
  QSeries s(2);
  s[0] = make_rational(-1, 24);
  s[2] = 3;
  const auto js = to_json(LabeledSeries{"f", 3, 2, s});
  EXPECT_EQ(js.dump(),
            R"({"object":"qseries","kind":"f","k":3,"j":2,"order":2,"coefficients":["-1/24","0/1","3/1"]})");
}

TEST(Json, MalformedInput) {
  EXPECT_THROW(parse_labeled_series("{"), InvalidArgument);
  EXPECT_THROW(parse_labeled_series(R"({"object":"table"})"), InvalidArgument);
  EXPECT_THROW(parse_labeled_series(
                   R"({"object":"qseries","k":3,"j":2,"order":2,"coefficients":["1/1"]})"),
               InvalidArgument);
  EXPECT_THROW(parse_labeled_series(
                   R"({"object":"qseries","k":3,"j":2,"order":0,"coefficients":["1/0"]})"),
               InvalidArgument);
}

TEST(Bfile, IntegralOnly) {
  QSeries s(2);
  s[1] = -4;
  s[2] = 31001;
  EXPECT_EQ(to_bfile(s), "0 0\n1 -4\n2 31001\n");
  s[1] = make_rational(1, 2);
  EXPECT_THROW(to_bfile(s), NonIntegralSeries);
}

TEST(Csv, SeriesAndTable) {
  QSeries s(2);
  s[0] = make_rational(1, 240);
  s[2] = 15;
  EXPECT_EQ(to_csv(s), "n,coefficient\n0,1/240\n1,0\n2,15\n");
  const CountTable t = count_table(3, 1, 2);
  EXPECT_EQ(to_csv(t), "m,n,count\n-1,0,0\n0,0,0\n1,0,0\n-1,1,0\n0,1,0\n1,1,0\n-1,2,0\n0,2,1\n1,2,0\n");
  const auto js = to_json(t);
  EXPECT_EQ(js["object"], "count_table");
  EXPECT_EQ(js["entries"].size(), 9u);
  EXPECT_EQ(js["entries"][7]["count"], 1);
}
