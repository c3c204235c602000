#include "propeller/formats.hpp"

#include <json.hpp>

namespace propeller {

std::string to_graph6(const LabeledGraph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else {
        // 18-bit size, big-endian 6-bit groups (fine up to 258047 vertices)
        out.push_back('~');
        out.push_back(char(((n >> 12) & 63) + 63));
        out.push_back(char(((n >> 6) & 63) + 63));
        out.push_back(char((n & 63) + 63));
    }
    int bits = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            bits = (bits << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(char(bits + 63));
                bits = nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(char((bits << (6 - nbits)) + 63));
    return out;
}

std::string to_dot(const LabeledGraph& g, const std::string& name) {
    std::string out = "graph " + name + " {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out += "  " + g.names[v] + ";\n";
    for (auto [u, v] : g.edges()) {
        out += "  " + g.names[u] + " -- " + g.names[v];
        if (auto k = g.kind_of(u, v)) out += " [kind=" + std::string(to_string(*k)) + "]";
        out += ";\n";
    }
    out += "}\n";
    return out;
}

std::string to_json(const LabeledGraph& g) {
    nlohmann::json j;
    j["vertexCount"] = g.vertex_count();
    if (g.ring > 0) j["ring"] = g.ring;
    j["names"] = g.names;
    if (!g.labels.empty()) {
        auto labs = nlohmann::json::array();
        for (const auto& lab : g.labels)
            labs.push_back({{"class", to_string(lab.cls)}, {"index", lab.index}});
        j["labels"] = std::move(labs);
    }
    auto edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) {
        nlohmann::json e{{"u", u}, {"v", v}};
        if (auto k = g.kind_of(u, v)) e["kind"] = to_string(*k);
        edges.push_back(std::move(e));
    }
    j["edges"] = std::move(edges);
    return j.dump(2);
}

}  // namespace propeller
