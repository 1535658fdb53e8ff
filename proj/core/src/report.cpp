#include "wrescalc/report.hpp"

#include <json.hpp>

#include <sstream>

namespace wrescalc {

const char* match_state_name(MatchState m) {
    switch (m) {
        case MatchState::Exact: return "exact";
        case MatchState::Mismatch: return "mismatch";
        case MatchState::NoTarget: return "no-target";
    }
    return "?";
}

bool Report::overall_exact() const {
    for (const auto& item : items)
        if (item.expected && item.match != MatchState::Exact) return false;
    return true;
}

namespace {

std::string render_text(const Report& r) {
    std::ostringstream out;
    out << "target: " << r.target << "\n";
    out << "mode: " << r.mode << "\n";
    out << "seed: " << r.seed << "\n";
    out << "engine: " << r.version << "\n";
    out << "\n";
    for (const auto& item : r.items) {
        out << item.name << ": " << item.computed;
        if (item.expected) {
            out << "\n  expected: " << *item.expected;
            out << "\n  match: " << match_state_name(item.match);
        } else {
            out << "\n  match: " << match_state_name(item.match);
        }
        if (item.note) out << "\n  note: " << *item.note;
        out << "\n";
    }
    out << "\nstatus: " << (r.overall_exact() ? "exact" : "mismatch") << "\n";
    return out.str();
}

std::string render_json(const Report& r) {
    nlohmann::ordered_json doc;
    doc["version"] = r.version;
    doc["target"] = r.target;
    doc["mode"] = r.mode;
    doc["seed"] = r.seed;
    doc["items"] = nlohmann::ordered_json::array();
    for (const auto& item : r.items) {
        nlohmann::ordered_json j;
        j["name"] = item.name;
        j["computed"] = item.computed;
        j["computed_latex"] = item.computed_latex;
        if (item.expected) j["expected"] = *item.expected;
        j["match"] = match_state_name(item.match);
        if (item.note) j["note"] = *item.note;
        doc["items"].push_back(std::move(j));
    }
    doc["status"] = r.overall_exact() ? "exact" : "mismatch";
    return doc.dump(2) + "\n";
}

std::string latex_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '_': case '#': case '%': case '&': case '$':
                out += '\\';
                out += ch;
                break;
            default:
                out += ch;
        }
    }
    return out;
}

std::string render_latex(const Report& r) {
    std::ostringstream out;
    out << "% target: " << r.target << ", mode: " << r.mode
        << ", seed: " << r.seed << ", engine: " << r.version << "\n";
    out << "\\begin{tabular}{lll}\n";
    out << "item & computed & match \\\\\n\\hline\n";
    for (const auto& item : r.items) {
        out << latex_escape(item.name) << " & $" << item.computed_latex << "$ & "
            << match_state_name(item.match) << " \\\\\n";
    }
    out << "\\hline\nstatus & \\multicolumn{2}{l}{"
        << (r.overall_exact() ? "exact" : "mismatch") << "} \\\\\n";
    out << "\\end{tabular}\n";
    return out.str();
}

}  // namespace

std::string Report::render(ReportFormat format) const {
    switch (format) {
        case ReportFormat::Text: return render_text(*this);
        case ReportFormat::Json: return render_json(*this);
        case ReportFormat::Latex: return render_latex(*this);
    }
    return "";
}

}  // namespace wrescalc
