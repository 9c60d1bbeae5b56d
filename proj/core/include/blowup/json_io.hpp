#pragma once

#include "json.hpp"

#include "blowup/betti.hpp"
#include "blowup/laurent.hpp"
#include "blowup/marked.hpp"
#include "blowup/qseries.hpp"

namespace blowup {

// Machine-readable documents. Coefficients are decimal strings so consumers
// never overflow; terms are sorted by exponent vector.
nlohmann::json toJson(const LaurentPoly& p);
LaurentPoly laurentFromJson(const nlohmann::json& j);

nlohmann::json toJson(const QSeries& s);
QSeries qseriesFromJson(const nlohmann::json& j);

nlohmann::json toJson(const MarkedDiagram& d);
nlohmann::json toJson(const FixedPoint& f);

nlohmann::json toJson(const VerifyReport& r);

}  // namespace blowup
