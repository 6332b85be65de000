#pragma once

#include <json.hpp>

#include "qpb/qrational.hpp"

namespace qpb {

using Json = nlohmann::ordered_json;

// Polynomials: {"var":"q","min_exp":e,"coeffs":["c0","c1",...]}, coefficients
// as decimal strings. Rational functions: {"num":<poly>,"den":<poly>}.
// Big integers and rationals serialize as decimal strings ("-3", "2/3").

Json to_json(const BigInt& v);
Json to_json(const Rational& v);
Json to_json(const QPoly& p);
Json to_json(const QRational& r);

QPoly qpoly_from_json(const Json& j);
QRational qrational_from_json(const Json& j);

}  // namespace qpb
