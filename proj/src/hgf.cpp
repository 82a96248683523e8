#include "helix/hgf.hpp"

#include <fstream>
#include <sstream>

#include "helix/error.hpp"

namespace helix {

std::string serialize_graph(const Graph& g) {
    std::string out = "graph " + std::to_string(g.order());
    if (g.any_loops()) out += " loops";
    out += '\n';
    if (g.labeled())
        for (int v = 0; v < g.order(); ++v)
            out += "v " + std::to_string(v) + " " + label_to_string(g.label(v)) + "\n";
    for (const auto& [i, j] : g.edges())
        out += "e " + std::to_string(i) + " " + std::to_string(j) + "\n";
    return out;
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& why) {
    usage_error("line " + std::to_string(line) + ": " + why);
}

} // namespace

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool header_seen = false, loops_allowed = false;
    Graph g;
    std::vector<std::pair<int, Label>> labels;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string tag;
        fields >> tag;
        if (!header_seen) {
            if (tag != "graph") parse_fail(line_no, "expected 'graph <order> [loops]' header");
            int order = -1;
            fields >> order;
            if (fields.fail() || order < 0) parse_fail(line_no, "bad order");
            std::string flag;
            if (fields >> flag) {
                if (flag != "loops") parse_fail(line_no, "unknown header flag '" + flag + "'");
                loops_allowed = true;
            }
            g = Graph(order);
            header_seen = true;
            continue;
        }
        if (tag == "v") {
            int index = -1;
            std::string token;
            fields >> index >> token;
            if (fields.fail() || index < 0 || index >= g.order())
                parse_fail(line_no, "bad vertex line");
            for (const auto& [seen, label] : labels)
                if (seen == index) parse_fail(line_no, "duplicate label for vertex");
            try {
                labels.emplace_back(index, parse_label(token));
            } catch (const Error& e) {
                parse_fail(line_no, e.what());
            }
        } else if (tag == "e") {
            int i = -1, j = -1;
            fields >> i >> j;
            if (fields.fail() || i < 0 || j < 0 || i >= g.order() || j >= g.order())
                parse_fail(line_no, "bad edge line");
            if (i > j) parse_fail(line_no, "edges must satisfy i <= j");
            if (i == j && !loops_allowed)
                parse_fail(line_no, "loop without 'loops' header flag");
            if (g.adjacent(i, j)) parse_fail(line_no, "duplicate edge");
            g.add_edge(i, j);
        } else {
            parse_fail(line_no, "unknown line tag '" + tag + "'");
        }
    }
    require(header_seen, "missing 'graph' header");
    if (!labels.empty()) {
        if (static_cast<int>(labels.size()) != g.order())
            usage_error("either every vertex is labeled or none (got " +
                        std::to_string(labels.size()) + " of " + std::to_string(g.order()) + ")");
        std::vector<Label> ordered(g.order(), Label{std::string{}});
        for (auto& [index, label] : labels) ordered[index] = std::move(label);
        g.set_labels(std::move(ordered));
    }
    return g;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) usage_error("cannot open graph file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

void write_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) usage_error("cannot write graph file '" + path + "'");
    out << serialize_graph(g);
}

} // namespace helix
