#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "eqp/errors.hpp"
#include "eqp/pencil.hpp"
#include "eqp/rank.hpp"

namespace eqp {

using Json = nlohmann::ordered_json;

// {nvars, source_dim, target_dim, var_labels, entries: [{var,row,col,num,den}],
//  structure?}; exact values as decimal strings, entries sorted by (var,row,col).
Json pencil_to_json(const Pencil& p);
Pencil pencil_from_json(const Json& j, const std::string& source = "<json>");
std::string write_pencil(const Pencil& p);
Pencil read_pencil(std::string_view text, const std::string& source = "<json>");

Json report_to_json(const RankReport& r);
RankReport report_from_json(const Json& j);

Json spec_to_json(const BuildSpec& s);
BuildSpec spec_from_json(const Json& j);

}  // namespace eqp
