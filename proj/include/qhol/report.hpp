#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qhol/exact_seq.hpp"
#include "qhol/fg_group.hpp"

namespace qhol {

// insertion-ordered so emitted documents are byte-stable
using Json = nlohmann::ordered_json;

enum class OutputFormat { human, json, csv };

OutputFormat parse_format(const std::string& text);

Json json_int(const Int& value);  // number when it fits in 64 bits, else a decimal string
Json json_group(const FgAbelianGroup& g);
Json json_term(const GroupTerm& t);
Json json_trace(const std::vector<Deduction>& trace);

std::string fnv1a_hex(std::string_view bytes);
std::string file_digest(const std::string& path);  // "fnv1a:<hex>", or "missing"

// One subcommand invocation's output in all three shapes.  The JSON envelope
// carries inputs / results / trace / meta; human and csv are prerendered.
struct Report {
    Json inputs = Json::object();
    Json results = Json::object();
    Json trace = Json::array();
    Json meta = Json::object();
    std::string human;
    std::string csv;
};

std::string emit_report(const Report& report, OutputFormat format);

// Joins rows into an aligned text table; the first row is the header.
std::string render_table(const std::vector<std::vector<std::string>>& rows);
std::string render_csv(const std::vector<std::vector<std::string>>& rows);

}  // namespace qhol
