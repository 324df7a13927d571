#pragma once

#include <string>

#include <json.hpp>

#include "galmeasure/rational.hpp"

namespace galmeas {

// FNV-1a 64-bit digest, hex encoded; pins the input a report was produced from.
std::string fnv1a_hex(const std::string& bytes);

std::string rational_str(const Rational& r);
std::string sigma_str(double sigma);  // 6 significant digits

// ReportDocument skeleton: tool version, command, input digest, parameters,
// results. Serialization is key-sorted JSON, so identical inputs produce
// byte-identical documents.
nlohmann::json make_report(const std::string& command, const nlohmann::json& parameters,
                           const std::string& input_digest, nlohmann::json results);

std::string render_report(const nlohmann::json& report, const std::string& format);

}  // namespace galmeas
