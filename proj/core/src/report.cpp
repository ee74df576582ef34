#include "minkdef/report.hpp"

#include <json.hpp>

#include <sstream>

namespace minkdef {

namespace {

nlohmann::json assignment_json(const Assignment& a) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [var, literal] : a.items) j[var] = literal;
    return j;
}

nlohmann::json verdict_json(const Verdict& v) {
    nlohmann::json j;
    j["id"] = v.id;
    j["status"] = verdict_status_name(v.status);
    j["trials"] = v.trials;
    j["seed"] = v.seed;
    j["notes"] = v.notes;
    if (v.witness_sample) j["witness"] = assignment_json(*v.witness_sample);
    if (v.counterexample) j["counterexample"] = assignment_json(*v.counterexample);
    return j;
}

nlohmann::json matrix_json(const StatusMatrix& m) {
    nlohmann::json j;
    j["regime"] = m.regime;
    j["columns"] = m.columns;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : m.rows) {
        nlohmann::json r;
        r["prefix"] = row.prefix;
        r["cells"] = row.cells;
        rows.push_back(r);
    }
    j["rows"] = rows;
    j["notes"] = m.notes;
    return j;
}

} // namespace

std::string Report::to_json() const {
    nlohmann::json j;
    j["version"] = kToolVersion;
    j["command"] = command;
    j["n"] = n;
    j["field"] = field;
    j["seed"] = seed;
    j["trials"] = trials;
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : verdicts) vs.push_back(verdict_json(v));
    j["verdicts"] = vs;
    j["matrix"] = matrix ? matrix_json(*matrix) : nlohmann::json::array();
    return j.dump(2) + "\n";
}

std::string Report::to_text() const {
    std::ostringstream out;
    out << "minkdef " << kToolVersion << "  command=" << command << "  n=" << n
        << "  field=" << field << "  seed=" << seed << "\n";
    for (const auto& v : verdicts) {
        out << "  [" << verdict_status_name(v.status) << "] " << v.id << " (trials=" << v.trials
            << ")\n";
        for (const auto& note : v.notes) out << "      - " << note << "\n";
        if (v.counterexample) {
            out << "      counterexample:";
            for (const auto& [var, lit] : v.counterexample->items)
                out << " " << var << "=" << lit;
            out << "\n";
        }
    }
    if (matrix) {
        const StatusMatrix& m = *matrix;
        out << "  status matrix (" << m.regime << ")\n";
        size_t width = 12;
        for (const auto& row : m.rows)
            for (const auto& cell : row.cells) width = std::max(width, cell.size() + 1);
        auto pad = [&](const std::string& s) {
            std::string p = s;
            p.resize(width, ' ');
            return p;
        };
        out << "    " << pad("prefix");
        for (const auto& col : m.columns) out << pad(col);
        out << "\n";
        for (const auto& row : m.rows) {
            out << "    " << pad(row.prefix);
            for (const auto& cell : row.cells) out << pad(cell);
            out << "\n";
        }
        for (const auto& note : m.notes) out << "    note: " << note << "\n";
    }
    return out.str();
}

} // namespace minkdef
