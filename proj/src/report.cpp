#include "galmeasure/report.hpp"

#include <algorithm>
#include <cstdio>

#include "galmeasure/errors.hpp"
#include "galmeasure/version.hpp"

namespace galmeas {

using nlohmann::json;

std::string fnv1a_hex(const std::string& bytes) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string rational_str(const Rational& r) { return r.to_string(); }

std::string sigma_str(double sigma) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", sigma);
    return buf;
}

json make_report(const std::string& command, const json& parameters,
                 const std::string& input_digest, json results) {
    json doc;
    doc["tool-version"] = kToolVersion;
    doc["command"] = command;
    doc["input-digest"] = input_digest;
    doc["parameters"] = parameters;
    doc["results"] = std::move(results);
    return doc;
}

namespace {

std::string scalar_str(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void render_value(const json& v, const std::string& label, int indent, std::string& out);

void render_object_table(const json& arr, int indent, std::string& out) {
    // array of flat objects: one aligned table
    std::vector<std::string> cols;
    for (const auto& row : arr)
        for (auto it = row.begin(); it != row.end(); ++it)
            if (std::find(cols.begin(), cols.end(), it.key()) == cols.end())
                cols.push_back(it.key());
    std::sort(cols.begin(), cols.end());
    std::vector<size_t> width(cols.size());
    for (size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : arr) {
        std::vector<std::string> line;
        for (size_t c = 0; c < cols.size(); ++c) {
            std::string cell = row.contains(cols[c]) ? scalar_str(row.at(cols[c])) : "";
            width[c] = std::max(width[c], cell.size());
            line.push_back(std::move(cell));
        }
        cells.push_back(std::move(line));
    }
    std::string pad(static_cast<size_t>(indent), ' ');
    out += pad;
    for (size_t c = 0; c < cols.size(); ++c) {
        out += cols[c] + std::string(width[c] - cols[c].size() + 2, ' ');
    }
    out += "\n";
    for (const auto& line : cells) {
        out += pad;
        for (size_t c = 0; c < cols.size(); ++c)
            out += line[c] + std::string(width[c] - line[c].size() + 2, ' ');
        out += "\n";
    }
}

void render_value(const json& v, const std::string& label, int indent, std::string& out) {
    std::string pad(static_cast<size_t>(indent), ' ');
    if (v.is_object()) {
        if (!label.empty()) out += pad + label + ":\n";
        for (auto it = v.begin(); it != v.end(); ++it)
            render_value(it.value(), it.key(), indent + (label.empty() ? 0 : 2), out);
        return;
    }
    if (v.is_array()) {
        bool objects = !v.empty() && std::all_of(v.begin(), v.end(), [](const json& x) {
            return x.is_object() &&
                   std::all_of(x.begin(), x.end(),
                               [](const json& y) { return !y.is_structured(); });
        });
        if (!label.empty()) out += pad + label + ":\n";
        if (objects) {
            render_object_table(v, indent + 2, out);
        } else {
            for (const auto& x : v) render_value(x, "-", indent + 2, out);
        }
        return;
    }
    out += pad + (label.empty() ? "" : label + ": ") + scalar_str(v) + "\n";
}

}  // namespace

std::string render_report(const json& report, const std::string& format) {
    if (format == "json") return report.dump(2) + "\n";
    if (format != "table") fail("ParseError", "format must be 'json' or 'table'");
    std::string out;
    render_value(report, "", 0, out);
    return out;
}

}  // namespace galmeas
