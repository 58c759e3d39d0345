#include "renyi/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace renyi {

namespace {

std::vector<std::vector<double>> matrix_from_json(const nlohmann::json& j, const char* what) {
    if (!j.is_array() || j.empty()) throw IoError(std::string(what) + ": \"matrix\" must be a nonempty array");
    std::vector<std::vector<double>> rows;
    for (const auto& row : j) {
        if (!row.is_array() || row.empty())
            throw IoError(std::string(what) + ": matrix rows must be nonempty arrays");
        std::vector<double> r;
        for (const auto& cell : row) {
            if (!cell.is_number()) throw IoError(std::string(what) + ": matrix cells must be numbers");
            r.push_back(cell.get<double>());
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

JointPMF parse_joint_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("joint pmf: invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("matrix"))
        throw IoError("joint pmf: expected an object with a \"matrix\" field");
    bool normalize = j.value("normalize", true);
    try {
        return JointPMF::from_matrix(matrix_from_json(j["matrix"], "joint pmf"), normalize);
    } catch (const std::invalid_argument& e) {
        throw IoError(std::string("joint pmf: ") + e.what());
    }
}

JointPMF parse_joint_csv(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank) continue;
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            const char* begin = cell.c_str();
            char* end = nullptr;
            double v = std::strtod(begin, &end);
            while (end && *end && std::isspace(static_cast<unsigned char>(*end))) ++end;
            if (end == begin || (end && *end))
                throw IoError("joint pmf: CSV cell is not a number: \"" + cell + "\"");
            row.push_back(v);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw IoError("joint pmf: empty CSV");
    try {
        return JointPMF::from_matrix(std::move(rows), true);
    } catch (const std::invalid_argument& e) {
        throw IoError(std::string("joint pmf: ") + e.what());
    }
}

JointPMF load_joint(const std::string& path) {
    std::string text = read_file(path);
    if (ends_with(path, ".csv")) return parse_joint_csv(text);
    if (ends_with(path, ".json")) return parse_joint_json(text);
    try {
        return parse_joint_json(text);
    } catch (const IoError&) {
        return parse_joint_csv(text);
    }
}

Channel parse_channel_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("channel: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw IoError("channel: expected a JSON object");
    try {
        if (j.contains("bsc")) {
            if (!j["bsc"].is_number()) throw IoError("channel: \"bsc\" must be a number");
            return Channel::bsc(j["bsc"].get<double>());
        }
        if (j.contains("matrix"))
            return Channel::from_rows(matrix_from_json(j["matrix"], "channel"),
                                      j.value("normalize", false));
    } catch (const std::invalid_argument& e) {
        throw IoError(std::string("channel: ") + e.what());
    }
    throw IoError("channel: expected a \"bsc\" or \"matrix\" field");
}

Channel load_channel(const std::string& path) { return parse_channel_json(read_file(path)); }

std::string format_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

std::string format_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace renyi
