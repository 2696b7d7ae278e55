#include "parikh/json_io.hpp"

#include <sstream>

namespace parikh {

nlohmann::json graph_to_json(const BipartiteGraph& g) {
    nlohmann::json j;
    j["x"] = g.part_x();
    j["y"] = g.part_y();
    auto edges = nlohmann::json::array();
    for (const auto& [x, y] : g.edges())
        edges.push_back(nlohmann::json::array({x, y}));
    j["edges"] = std::move(edges);
    return j;
}

BipartiteGraph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("x") || !j.contains("y") || !j.contains("edges"))
        throw DomainError("graph JSON must be an object with 'x', 'y' and 'edges'");
    auto read_labels = [&](const char* key) {
        const auto& arr = j.at(key);
        if (!arr.is_array())
            throw DomainError(std::string("graph JSON field '") + key +
                              "' must be an array of strings");
        std::vector<std::string> labels;
        for (const auto& item : arr) {
            if (!item.is_string())
                throw DomainError(std::string("graph JSON field '") + key +
                                  "' must contain only strings");
            labels.push_back(item.get<std::string>());
        }
        return labels;
    };
    std::vector<std::string> xs = read_labels("x");
    std::vector<std::string> ys = read_labels("y");
    const auto& edges_json = j.at("edges");
    if (!edges_json.is_array())
        throw DomainError("graph JSON field 'edges' must be an array of label pairs");
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : edges_json) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw DomainError("each edge must be a two-element array of labels");
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return BipartiteGraph(std::move(xs), std::move(ys), edges);
}

BipartiteGraph graph_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw DomainError("input is not valid JSON");
    return graph_from_json(j);
}

std::string graph_json_line(const BipartiteGraph& g) { return graph_to_json(g).dump(); }

namespace {

std::string dot_quote(const std::string& label) {
    std::string out = "\"";
    for (char c : label) {
        if (c == '"' || c == '\\')
            out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

} // namespace

std::string graph_to_dot(const BipartiteGraph& g) {
    std::ostringstream out;
    out << "graph parikh {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    out << "  { rank=same;";
    for (const auto& x : g.part_x())
        out << " " << dot_quote(x) << ";";
    out << " }\n";
    out << "  { rank=same;";
    for (const auto& y : g.part_y())
        out << " " << dot_quote(y) << ";";
    out << " }\n";
    for (const auto& [x, y] : g.edges())
        out << "  " << dot_quote(x) << " -- " << dot_quote(y) << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace parikh
