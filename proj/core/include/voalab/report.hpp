#pragma once

#include <string>

#include "voalab/checks.hpp"

namespace voalab {

// Aligned table, one row per check, followed by a summary line.
std::string report_text(const Report& r);
// {version, config, checks: [{id, status, computed, expected, ms}], summary: {pass, fail, finding}}
std::string report_json(const Report& r);

}  // namespace voalab
