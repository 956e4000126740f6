#pragma once

#include <cstdio>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace z2h {

enum class ReportStatus { Ok, CriterionFailed, Discrepancy, NumericalError };

inline std::string to_string(ReportStatus s) {
    switch (s) {
        case ReportStatus::Ok: return "ok";
        case ReportStatus::CriterionFailed: return "criterion_failed";
        case ReportStatus::Discrepancy: return "discrepancy";
        case ReportStatus::NumericalError: return "numerical_error";
    }
    return "unknown";
}

inline ReportStatus report_status_from_string(const std::string& s) {
    if (s == "ok") return ReportStatus::Ok;
    if (s == "criterion_failed") return ReportStatus::CriterionFailed;
    if (s == "discrepancy") return ReportStatus::Discrepancy;
    if (s == "numerical_error") return ReportStatus::NumericalError;
    throw std::invalid_argument("unknown report status: " + s);
}

// Structured result of one CLI computation.  Maps are ordered so emission is
// deterministic; rationals are carried as "p/q" strings.
struct Report {
    std::string command;
    std::map<std::string, std::string> inputs;
    std::map<std::string, std::string> outputs;
    std::vector<std::string> citations;
    ReportStatus status = ReportStatus::Ok;

    friend bool operator==(const Report& a, const Report& b) {
        return a.command == b.command && a.inputs == b.inputs && a.outputs == b.outputs &&
               a.citations == b.citations && a.status == b.status;
    }
};

enum class ReportFormat { Plain, Json, Csv };

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string emit(const Report& r, ReportFormat format) {
    switch (format) {
        case ReportFormat::Json: {
            nlohmann::ordered_json j;
            j["command"] = r.command;
            j["inputs"] = nlohmann::ordered_json::object();
            for (const auto& [k, v] : r.inputs) j["inputs"][k] = v;
            j["outputs"] = nlohmann::ordered_json::object();
            for (const auto& [k, v] : r.outputs) j["outputs"][k] = v;
            j["citations"] = r.citations;
            j["status"] = to_string(r.status);
            return j.dump(2) + "\n";
        }
        case ReportFormat::Csv: {
            std::string out = "section,key,value\n";
            auto esc = [](const std::string& s) {
                if (s.find_first_of(",\"\n") == std::string::npos) return s;
                std::string q = "\"";
                for (char c : s) {
                    if (c == '"') q += "\"\"";
                    else q += c;
                }
                return q + "\"";
            };
            out += "meta,command," + esc(r.command) + "\n";
            out += "meta,status," + to_string(r.status) + "\n";
            for (const auto& [k, v] : r.inputs) out += "input," + esc(k) + "," + esc(v) + "\n";
            for (const auto& [k, v] : r.outputs) out += "output," + esc(k) + "," + esc(v) + "\n";
            for (const auto& c : r.citations) out += "citation,," + esc(c) + "\n";
            return out;
        }
        case ReportFormat::Plain: {
            std::string out = "command: " + r.command + "\nstatus: " + to_string(r.status) + "\n";
            if (!r.inputs.empty()) {
                out += "inputs:\n";
                for (const auto& [k, v] : r.inputs) out += "  " + k + " = " + v + "\n";
            }
            if (!r.outputs.empty()) {
                out += "outputs:\n";
                for (const auto& [k, v] : r.outputs) out += "  " + k + " = " + v + "\n";
            }
            if (!r.citations.empty()) {
                out += "citations:\n";
                for (const auto& c : r.citations) out += "  " + c + "\n";
            }
            return out;
        }
    }
    throw std::invalid_argument("emit: unknown format");
}

inline Report parse_report(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    Report r;
    r.command = j.at("command").get<std::string>();
    for (auto it = j.at("inputs").begin(); it != j.at("inputs").end(); ++it)
        r.inputs[it.key()] = it.value().get<std::string>();
    for (auto it = j.at("outputs").begin(); it != j.at("outputs").end(); ++it)
        r.outputs[it.key()] = it.value().get<std::string>();
    for (const auto& c : j.at("citations")) r.citations.push_back(c.get<std::string>());
    r.status = report_status_from_string(j.at("status").get<std::string>());
    return r;
}

}  // namespace z2h
