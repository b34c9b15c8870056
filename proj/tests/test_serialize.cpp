#include <cmath>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "gxray/serialize.hpp"

using namespace gxray;

TEST(Json, PiScalarRoundTrip) {
  const PiScalar s = PiScalar(make_rational(-7, 3), 3) + PiScalar(Rational(2), 0) + PiScalar(make_rational(1, 1024), 5);
  const Json j = to_json(s);
  EXPECT_EQ(j["terms"].size(), 3u);
  EXPECT_EQ(pi_scalar_from_json(j), s);
  EXPECT_EQ(pi_scalar_from_json(Json::parse(j.dump())), s);
  EXPECT_EQ(pi_scalar_from_json(to_json(PiScalar())), PiScalar());
}

TEST(Json, BigRationalsSurvive) {
  const Rational big = rational_from_strings("123456789012345678901234567890", "7");
  const PiScalar s(big, 1);
  EXPECT_EQ(pi_scalar_from_json(Json::parse(to_json(s).dump())), s);
}

TEST(Json, MultiPolyRoundTrip) {
  MultiPoly p(3);
  p.add_term(Monomial({2, 0, 1}), CScalar(PiScalar(make_rational(1, 3)), PiScalar(Rational(-2), 1)));
  p.add_term(Monomial({0, 0, 0}), CScalar(PiScalar(Rational(5))));
  const MultiPoly q = multipoly_from_json(Json::parse(to_json(p).dump()));
  EXPECT_EQ(q, p);
  EXPECT_EQ(q.nvars(), 3);
}

TEST(Json, EigenRecordRoundTrip) {
  SweepOptions opts;
  opts.methods = {Method::exact, Method::quad, Method::gegenbauer};
  for (const auto& r : sweep(3, 2, 2, opts)) {
    const Json j = Json::parse(to_json(r).dump());
    const EigenRecord back = eigen_record_from_json(j);
    EXPECT_EQ(back.index, r.index);
    EXPECT_EQ(back.Lambda, r.Lambda);
    EXPECT_EQ(*back.lambda_exact, *r.lambda_exact);
    EXPECT_EQ(back.lambda_quad, r.lambda_quad);
    EXPECT_EQ(back.lambda_gegen, r.lambda_gegen);
    EXPECT_EQ(back.scaled, r.scaled);
    if (r.index.k == 0 && r.index.l == 0) {
      EXPECT_TRUE(j["main_term"].is_null());
      EXPECT_TRUE(std::isnan(back.main_term));
    } else {
      EXPECT_EQ(back.main_term, r.main_term);
      EXPECT_EQ(back.err_scaled, r.err_scaled);
    }
  }
}

TEST(Json, MissingExactIsNull) {
  const auto recs = sweep(3, 0, 1);
  const Json j = to_json(recs[1]);
  EXPECT_TRUE(j["lambda_exact"].is_null());
  EXPECT_FALSE(eigen_record_from_json(j).lambda_exact.has_value());
}

TEST(FormatDouble, Values) {
  EXPECT_EQ(format_double(std::nan("")), "nan");
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_TRUE(double_to_json(std::nan("")).is_null());
  EXPECT_TRUE(std::isnan(double_from_json(Json(nullptr))));
}

TEST(Csv, LayoutAndSummary) {
  const auto recs = sweep(3, 1, 2);
  std::ostringstream os;
  write_csv(os, recs);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, kCsvHeader);
  int rows = 0;
  std::string last;
  while (std::getline(in, line)) {
    if (line.rfind("# ", 0) == 0) {
      last = line;
      break;
    }
    ++rows;
  }
  EXPECT_EQ(rows, 6);
  EXPECT_EQ(last.rfind("# cMin=", 0), 0u);
  EXPECT_NE(last.find(",errSlope="), std::string::npos);
  EXPECT_EQ(os.str().find('\r'), std::string::npos);
  EXPECT_NE(os.str().find("0,0,3,"), std::string::npos);
  EXPECT_NE(os.str().find(",nan,nan\n"), std::string::npos);
}

TEST(Csv, EmptyHasEmptySummary) {
  std::ostringstream os;
  write_csv(os, {});
  EXPECT_EQ(os.str(), std::string(kCsvHeader) + "\n# cMin=,cMax=,ratio=,errSup=,errSlope=\n");
}

TEST(Csv, FloatsRoundTrip) {
  const auto recs = sweep(3, 3, 3);
  std::ostringstream os;
  for (const auto& r : recs) write_csv_row(os, r);
  std::istringstream in(os.str());
  std::string line;
  for (const auto& r : recs) {
    std::getline(in, line);
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string c;
    while (std::getline(ls, c, ',')) cells.push_back(c);
    ASSERT_EQ(cells.size(), 7u);
    EXPECT_EQ(std::stod(cells[3]), r.lambda());
    EXPECT_EQ(std::stod(cells[4]), r.scaled);
  }
}
