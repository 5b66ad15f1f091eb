#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ladder/errors.hpp"
#include "ladder/invariants.hpp"
#include "ladder/shape.hpp"
#include "ladder/tableaux.hpp"

namespace ladder {

// Unreadable, malformed, or structurally wrong input files (CLI exit 2).
class spec_error : public error {
public:
    using error::error;
};

/// A parsed spec file. Exactly one of `intervals` or `skew` is set:
/// {"intervals": [[u,v], ...], "r": 1, "name": "..."} describes a ladder,
/// {"lambda": [...], "mu": [...], "name": "..."} a raw skew shape.
struct SpecFile {
    std::optional<std::vector<Interval>> intervals;
    int r = 1;
    std::optional<SkewShape> skew;
    std::string name;
};

SpecFile load_spec_file(const std::string& path, bool force_raw_skew = false);
SpecFile parse_spec(const nlohmann::json& j, bool force_raw_skew = false);

/// Report serialization. Big integers travel as decimal strings; the JSON
/// round-trips through report_from_json bit-exactly.
nlohmann::json report_to_json(const InvariantReport& report);
InvariantReport report_from_json(const nlohmann::json& j);

} // namespace ladder
