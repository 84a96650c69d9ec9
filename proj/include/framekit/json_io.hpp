#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "framekit/admissible.hpp"
#include "framekit/frame.hpp"
#include "framekit/paulsen.hpp"
#include "framekit/subspace.hpp"

namespace framekit {

/// Malformed or semantically invalid input file. The message names the
/// offending field.
class InputError : public Error {
 public:
  using Error::Error;
};

/// File cannot be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

using json = nlohmann::json;

/// Parses text, mapping parser failures to InputError (with line/column).
json parse_json(const std::string& text, const std::string& source);
json read_json_file(const std::string& path);

/// {"dim": M, "vectors": [[[re, im], ...M], ...N]}
json frame_to_json(const Frame& f);
Frame frame_from_json(const json& j);

/// {"size": N, "rank": M, "matrix": [[[re, im], ...N], ...N]}
json projection_to_json(const Projection& p);
Projection projection_from_json(const json& j);

struct AdmissibilityQuery {
  AdmissibleSequence sequence;
  std::optional<SpectrumSpec> spectrum;
};

/// {"a": [...], "M": int, "lambda": [...] (optional)}
AdmissibilityQuery admissibility_query_from_json(const json& j);

/// {"admissible": bool, "violated": string | null}
json verdict_to_json(const Verdict& v);

/// Instance report with the fixed field set
/// M, N, eps, distance, iterations, converged, bound_16eM, ratio_chain4,
/// ratio_chain2, seed.
json instance_report_json(const PaulsenInstance& inst, double ratio_chain4,
                          double ratio_chain2);

}  // namespace framekit
