#pragma once

#include "rmtori/classify.hpp"
#include "rmtori/construct.hpp"
#include "rmtori/lattice.hpp"
#include "rmtori/quadfield.hpp"
#include "rmtori/series.hpp"
#include "rmtori/twist.hpp"

#include <json.hpp>

namespace rmtori {

using Json = nlohmann::ordered_json;

// Unbounded integers travel as decimal strings so consumers never lose
// precision; N and M additionally appear as JSON numbers when they fit.

Json to_json(const KVector& v);
Json to_json(const SL2Matrix& g);
Json to_json(const QuadNum& q);
Json to_json(const QPoly& p);
Json to_json(const QRatFun& f);
Json to_json(const BiPoly& p);
Json to_json(const Verdict& v);
Json profile_to_json(const AlgebraProfile& p, std::size_t horizon);
Json orbit_to_json(const TwistOrbit& orbit);
Json ample_items_to_json(const std::vector<AmpleSeqItem>& items, const QuadNum& theta);

KVector kvector_from_json(const Json& j);
SL2Matrix matrix_from_json(const Json& j);
QuadNum quadnum_from_json(const Json& j);

Integer integer_from_string(const std::string& s);
Rational rational_from_string(const std::string& s);

}  // namespace rmtori
