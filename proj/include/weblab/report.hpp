#pragma once

#include <json.hpp>

#include "weblab/rank.hpp"
#include "weblab/web.hpp"

namespace weblab {

using Json = nlohmann::json;

// Canonical series form: {"order": N, "terms": [[i, j, "num", "den"], ...]},
// terms sorted by (total degree, i), rationals in lowest terms with positive
// denominators, zero coefficients omitted.
Json series_to_json(const Series& s);
Series series_from_json(const Json& j, int default_order);

// A polynomial in x, y given as a bare term list (the document format for
// slopes and coefficients).
Series poly_terms_from_json(const Json& j, int order);

Json matrix_to_json(const SeriesMatrix& m);
Json rows_to_json(const std::vector<Series>& rows);

Json validation_to_json(const ValidationReport& rep);
Json certificate_to_json(const RankCertificate& cert);

}  // namespace weblab
