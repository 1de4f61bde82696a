#pragma once

#include <string>

#include <json.hpp>

#include "crossint/bigint.hpp"
#include "crossint/bounds.hpp"
#include "crossint/branching.hpp"
#include "crossint/search.hpp"
#include "crossint/structure.hpp"

namespace crossint::app {

using nlohmann::json;

inline constexpr const char* kToolName = "crossint";
inline constexpr const char* kToolVersion = CROSSINT_VERSION;

/// Report skeleton carrying the tool, version, command and its config.
json report_header(const std::string& command, json config);

json to_json(const BigInt& v);
json to_json(const BigRational& v);  // {"num": "...", "den": "..."}
json to_json(SubsetWord s);          // [1, 2, 4]
json to_json(const Family& f);       // members plus the text format
json to_json(const Basis& b);
json to_json(const IneqReport& r);
json to_json(const BranchReport& r);
json to_json(const SearchResult& r);

/// "# crossint <version> <context>" followed by a CSV header line.
std::string csv_preamble(const std::string& context, const std::string& columns);
std::string csv_row(const IneqReport& r);
std::string params_text(const IneqReport& r);  // "n=10;k=3;i=2"

/// Stable textual form: two-space indented JSON with a trailing newline.
std::string dump(const json& j);

}  // namespace crossint::app
