#include "qpb/serialize.hpp"

#include <stdexcept>

namespace qpb {

Json to_json(const BigInt& v) { return v.get_str(); }

Json to_json(const Rational& v) { return v.get_str(); }

Json to_json(const QPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  return Json{{"var", "q"}, {"min_exp", p.min_exp()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const QRational& r) { return Json{{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

QPoly qpoly_from_json(const Json& j) {
  if (j.at("var").get<std::string>() != "q") throw std::invalid_argument("polynomial variable must be q");
  std::vector<BigInt> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.emplace_back(c.get<std::string>());
  return QPoly(j.at("min_exp").get<int>(), std::move(coeffs));
}

QRational qrational_from_json(const Json& j) {
  if (j.contains("var")) return QRational(qpoly_from_json(j));
  return QRational(qpoly_from_json(j.at("num")), qpoly_from_json(j.at("den")));
}

}  // namespace qpb
