#pragma once

#include <optional>
#include <string>

#include "weblab/report.hpp"

namespace weblab {

// Parsed input document. Series are re-materialized from the raw term lists
// at whatever working order a run needs, so --order can both lower and raise
// the precision of a polynomial-term input.
struct WebDocument {
    int order = 12;
    bool by_slopes = false;
    Json slopes_raw;  // array of term lists / "vertical" markers
    Json coeffs_raw;  // array of d+1 term lists, a_0 first
    std::optional<Rational> chart;
    Json echo;  // canonical echo of the parsed input

    int d() const {
        return static_cast<int>(by_slopes ? slopes_raw.size() : coeffs_raw.size() - 1);
    }
};

WebDocument parse_document(const Json& j);

// Builds the presentation at the given working order; applies the affine
// chart when one is requested or a vertical marker is present.
WebPresentation presentation_from_document(const WebDocument& doc, int order);

struct RunOptions {
    std::optional<int> order_override;
    std::optional<int> recheck_order;
};

// Subcommands: validate | pw | system | connection | curvature |
// trace-check | rank | linearize | full. Returns the report document;
// pipeline failures surface as weblab::Error for the caller to serialize.
Json run(const std::string& subcommand, const WebDocument& doc, const RunOptions& opts);

// Exit code mapping: 0 success, 1 malformed input, 2 singular at origin,
// 3 precision exhausted.
int exit_code_for(ErrorCode code);

}  // namespace weblab
