#include "qhol/report.hpp"

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

namespace qhol {

OutputFormat parse_format(const std::string& text) {
    if (text == "human")
        return OutputFormat::human;
    if (text == "json")
        return OutputFormat::json;
    if (text == "csv")
        return OutputFormat::csv;
    throw std::invalid_argument(
        fmt::format("unknown format '{}': expected human, json or csv", text));
}

Json json_int(const Int& value) {
    static const Int lo = std::numeric_limits<int64_t>::min();
    static const Int hi = std::numeric_limits<int64_t>::max();
    if (value >= lo && value <= hi)
        return static_cast<int64_t>(value);
    return value.str();
}

Json json_group(const FgAbelianGroup& g) {
    Json torsion = Json::array();
    for (const Int& d : g.torsion())
        torsion.push_back(json_int(d));
    return Json{{"free", g.free_rank()}, {"torsion", torsion}, {"text", g.to_string()}};
}

Json json_term(const GroupTerm& t) {
    Json j = Json::object();
    j["label"] = t.label;
    switch (t.kind) {
        case GroupTerm::Kind::known:
            j["status"] = "known";
            j["group"] = json_group(t.value);
            break;
        case GroupTerm::Kind::unknown:
            j["status"] = "unknown";
            break;
        case GroupTerm::Kind::candidates: {
            j["status"] = "candidates";
            Json list = Json::array();
            for (const FgAbelianGroup& c : t.candidates)
                list.push_back(json_group(c));
            j["candidates"] = list;
            break;
        }
    }
    j["text"] = t.to_string();
    return j;
}

Json json_trace(const std::vector<Deduction>& trace) {
    Json out = Json::array();
    for (const Deduction& d : trace)
        out.push_back(Json{{"rule", d.rule}, {"detail", d.detail}});
    return out;
}

std::string fnv1a_hex(std::string_view bytes) {
    uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    return fmt::format("{:016x}", hash);
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return "missing";
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return "fnv1a:" + fnv1a_hex(buffer.str());
}

std::string emit_report(const Report& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::human:
            return report.human;
        case OutputFormat::csv:
            return report.csv;
        case OutputFormat::json: {
            Json envelope = Json::object();
            envelope["inputs"] = report.inputs;
            envelope["results"] = report.results;
            envelope["trace"] = report.trace;
            envelope["meta"] = report.meta;
            return envelope.dump(2) + "\n";
        }
    }
    return {};
}

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty())
        return {};
    std::vector<size_t> widths;
    for (const auto& row : rows) {
        if (widths.size() < row.size())
            widths.resize(row.size(), 0);
        for (size_t i = 0; i < row.size(); ++i)
            widths[i] = std::max(widths[i], row[i].size());
    }
    std::string out;
    for (size_t r = 0; r < rows.size(); ++r) {
        std::string line;
        for (size_t i = 0; i < rows[r].size(); ++i) {
            if (i > 0)
                line += "  ";
            line += fmt::format("{:<{}}", rows[r][i], widths[i]);
        }
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        out += line + "\n";
        if (r == 0) {
            std::string rule;
            for (size_t i = 0; i < rows[0].size(); ++i) {
                if (i > 0)
                    rule += "  ";
                rule += std::string(widths[i], '-');
            }
            out += rule + "\n";
        }
    }
    return out;
}

std::string render_csv(const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (size_t i = 0; i < row.size(); ++i) {
            if (i > 0)
                line += ",";
            const std::string& cell = row[i];
            if (cell.find_first_of(",\"\n") != std::string::npos) {
                std::string quoted = "\"";
                for (char c : cell) {
                    if (c == '"')
                        quoted += '"';
                    quoted += c;
                }
                quoted += "\"";
                line += quoted;
            } else {
                line += cell;
            }
        }
        out += line + "\n";
    }
    return out;
}

}  // namespace qhol
