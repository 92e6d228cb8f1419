#pragma once

#include <string>

#include <json.hpp>

#include "proxideal/harness.hpp"
#include "proxideal/instance_io.hpp"

namespace proxideal {

using Json = nlohmann::ordered_json;

inline constexpr char const* kToolVersion = "0.1.0";

// Report documents. Keys keep insertion order, so identical inputs render
// byte-identical output in both the structured and the text form.
Json structure_report(InstanceDocument const& doc);
Json classify_report(InstanceDocument const& doc, std::string const& ideal);
Json radical_report(InstanceDocument const& doc, std::string const& ideal);
Json colon_report(InstanceDocument const& doc, std::string const& ideal, std::string const& element);
Json quotient_report(InstanceDocument const& doc, std::string const& ideal, ZeroTest mode);
Json ideals_report(InstanceDocument const& doc);
Json suite_report(CampaignResult const& result);

/// Indented "key: value" rendering of a report.
std::string render_text(Json const& report);
/// Two-space indented JSON with a trailing newline.
std::string render_machine(Json const& report);

}  // namespace proxideal
