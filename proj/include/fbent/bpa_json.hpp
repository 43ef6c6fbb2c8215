#pragma once
// BPA documents:
//   {"frame": ["a", "b"], "masses": {"a": 0.2, "b": 0.4, "a|b": 0.4}, "comment": "..."}
// Keys are '|'-joined labels in any order; they are canonicalized on parse.

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "fbent/evidence.hpp"

namespace fbent {

inline MassAssignment bpa_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw Error(ErrorCode::MalformedDocument, "BPA document must be a JSON object");
    for (const auto& [key, _] : doc.items()) {
        if (key != "frame" && key != "masses" && key != "comment") {
            throw Error(ErrorCode::MalformedDocument, "unexpected field '" + key + "'");
        }
    }
    if (!doc.contains("frame") || !doc["frame"].is_array()) {
        throw Error(ErrorCode::MalformedDocument, "\"frame\" must be an array of strings");
    }
    if (!doc.contains("masses") || !doc["masses"].is_object()) {
        throw Error(ErrorCode::MalformedDocument, "\"masses\" must be an object");
    }
    if (doc.contains("comment") && !doc["comment"].is_string()) {
        throw Error(ErrorCode::MalformedDocument, "\"comment\" must be a string");
    }

    std::vector<std::string> labels;
    for (const auto& label : doc["frame"]) {
        if (!label.is_string()) throw Error(ErrorCode::MalformedDocument, "frame labels must be strings");
        labels.push_back(label.get<std::string>());
    }
    Frame frame(std::move(labels));

    std::vector<FocalMass> entries;
    for (const auto& [key, value] : doc["masses"].items()) {
        if (!value.is_number()) throw Error(ErrorCode::MalformedDocument, "mass of '" + key + "' is not a number");
        const FocalSet set = frame.parse_set(key);
        for (const auto& e : entries) {
            if (e.set == set) throw Error(ErrorCode::MalformedDocument, "focal set '" + key + "' listed twice");
        }
        const double mass = value.get<double>();
        if (!(mass >= 0.0 && mass <= 1.0)) {
            throw Error(ErrorCode::MassOutOfRange, "mass of '" + key + "' is " + value.dump());
        }
        entries.push_back({set, mass});
    }
    return MassAssignment(std::move(frame), std::move(entries));
}

inline MassAssignment parse_bpa(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::MalformedDocument, e.what());
    }
    return bpa_from_json(doc);
}

inline MassAssignment load_bpa(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoFailure, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_bpa(buf.str());
}

// Keys come out in canonical (ascending mask) order.
inline nlohmann::ordered_json to_json(const MassAssignment& bpa) {
    nlohmann::ordered_json doc;
    doc["frame"] = bpa.frame().labels();
    doc["masses"] = nlohmann::ordered_json::object();
    for (const auto& e : bpa) doc["masses"][bpa.frame().format(e.set)] = e.mass;
    return doc;
}

inline std::string serialize_bpa(const MassAssignment& bpa) { return to_json(bpa).dump(); }

}  // namespace fbent
