#pragma once

// JSON and CSV encodings of exact scalars, polynomials and sweep records.

#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gxray/errors.hpp"
#include "gxray/polyalg.hpp"
#include "gxray/scalars.hpp"
#include "gxray/spectrum.hpp"

namespace gxray {

using Json = nlohmann::ordered_json;

/// 17 significant digits; "nan" for NaN.
inline std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline Json double_to_json(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

inline double double_from_json(const Json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

inline Json to_json(const PiScalar& s) {
  Json terms = Json::array();
  for (const auto& [m, q] : s.terms()) {
    terms.push_back({{"halfPiExp", m}, {"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}});
  }
  return {{"terms", terms}};
}

inline PiScalar pi_scalar_from_json(const Json& j) {
  PiScalar s;
  for (const auto& t : j.at("terms")) {
    s += PiScalar(rational_from_strings(t.at("num").get<std::string>(), t.at("den").get<std::string>()),
                  t.at("halfPiExp").get<int>());
  }
  return s;
}

inline Json to_json(const CScalar& c) { return {{"re", to_json(c.re())}, {"im", to_json(c.im())}}; }

inline CScalar cscalar_from_json(const Json& j) {
  return CScalar(pi_scalar_from_json(j.at("re")), pi_scalar_from_json(j.at("im")));
}

inline Json to_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({{"exponents", m.exponents()}, {"coeff", to_json(c)}});
  return {{"nvars", p.nvars()}, {"terms", terms}};
}

inline MultiPoly multipoly_from_json(const Json& j) {
  MultiPoly p(j.at("nvars").get<int>());
  for (const auto& t : j.at("terms")) {
    p.add_term(Monomial(t.at("exponents").get<std::vector<int>>()), cscalar_from_json(t.at("coeff")));
  }
  return p;
}

inline Json to_json(const EigenRecord& r) {
  Json j;
  j["k"] = r.index.k;
  j["l"] = r.index.l;
  j["d"] = r.index.d;
  j["Lambda"] = r.Lambda;
  if (r.lambda_exact) {
    j["lambda_exact"] = to_json(*r.lambda_exact);
    j["lambda_exact_symbolic"] = r.lambda_exact->to_string();
    j["lambda_exact_float"] = double_to_json(pi_to_float(*r.lambda_exact));
  } else {
    j["lambda_exact"] = nullptr;
  }
  j["lambda_quad"] = double_to_json(r.lambda_quad);
  j["lambda_gegen"] = double_to_json(r.lambda_gegen);
  j["lambda"] = double_to_json(r.lambda());
  j["main_term"] = double_to_json(r.main_term);
  j["scaled"] = double_to_json(r.scaled);
  j["err_scaled"] = double_to_json(r.err_scaled);
  return j;
}

inline EigenRecord eigen_record_from_json(const Json& j) {
  EigenRecord r;
  r.index = {j.at("k").get<int>(), j.at("l").get<int>(), j.at("d").get<int>()};
  r.Lambda = j.at("Lambda").get<long>();
  if (!j.at("lambda_exact").is_null()) r.lambda_exact = pi_scalar_from_json(j.at("lambda_exact"));
  r.lambda_quad = double_from_json(j.at("lambda_quad"));
  r.lambda_gegen = double_from_json(j.at("lambda_gegen"));
  r.main_term = double_from_json(j.at("main_term"));
  r.scaled = double_from_json(j.at("scaled"));
  r.err_scaled = double_from_json(j.at("err_scaled"));
  return r;
}

inline Json to_json(const AsymptoticsReport& a) {
  return {{"cMin", double_to_json(a.cMin)},
          {"cMax", double_to_json(a.cMax)},
          {"ratio", double_to_json(a.ratio)},
          {"errSup", double_to_json(a.errSup)},
          {"errSlope", double_to_json(a.errSlope)}};
}

inline constexpr const char* kCsvHeader = "k,l,Lambda,lambda,scaled,main_term,err_scaled";

inline void write_csv_row(std::ostream& os, const EigenRecord& r) {
  os << r.index.k << ',' << r.index.l << ',' << r.Lambda << ',' << format_double(r.lambda()) << ','
     << format_double(r.scaled) << ',' << format_double(r.main_term) << ',' << format_double(r.err_scaled) << '\n';
}

/// Header, one row per record, then "# cMin=..,cMax=..,ratio=..,errSup=..,errSlope=.." (values empty if no records).
inline void write_csv(std::ostream& os, const std::vector<EigenRecord>& records) {
  os << kCsvHeader << '\n';
  for (const auto& r : records) write_csv_row(os, r);
  std::optional<AsymptoticsReport> rep;
  if (!records.empty()) rep = asymptotics_report(records);
  auto field = [&](const char* name, double AsymptoticsReport::*member) {
    return std::string(name) + "=" + (rep ? format_double((*rep).*member) : std::string());
  };
  os << "# " << field("cMin", &AsymptoticsReport::cMin) << ',' << field("cMax", &AsymptoticsReport::cMax) << ','
     << field("ratio", &AsymptoticsReport::ratio) << ',' << field("errSup", &AsymptoticsReport::errSup) << ','
     << field("errSlope", &AsymptoticsReport::errSlope) << '\n';
}

inline Json records_to_json(const std::vector<EigenRecord>& records) {
  Json arr = Json::array();
  for (const auto& r : records) arr.push_back(to_json(r));
  return arr;
}

}  // namespace gxray
