#include "whisk/io.hpp"

#include <fstream>
#include <sstream>

namespace whisk {

ParseError::ParseError(const std::string& src, int ln, const std::string& what)
    : std::runtime_error(src + ":" + std::to_string(ln) + ": " + what),
      source(src),
      line(ln) {}

namespace {

/// Strip the comment and split into whitespace-separated tokens.
std::vector<std::string> tokenize(const std::string& raw) {
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

struct Line {
    int number;
    std::string directive;            // "vertices:", "facet:", ...
    std::vector<std::string> values;  // remaining tokens
};

std::vector<Line> content_lines(std::istream& in, const std::string& source) {
    std::vector<Line> out;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::vector<std::string> tokens = tokenize(raw);
        if (tokens.empty()) continue;
        if (tokens.front().back() != ':')
            throw ParseError(source, number, "expected a '<keyword>:' directive");
        Line line{number, tokens.front(), {tokens.begin() + 1, tokens.end()}};
        out.push_back(std::move(line));
    }
    return out;
}

int label_index(const std::vector<std::string>& labels, const std::string& label,
                const std::string& source, int line) {
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<int>(i);
    throw ParseError(source, line, "unknown vertex label '" + label + "'");
}

template <typename Open>
auto with_file(const std::string& path, Open open) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return open(in);
}

} // namespace

SimplicialComplex parse_complex(std::istream& in, const std::string& source) {
    std::vector<Line> lines = content_lines(in, source);
    if (lines.empty()) throw ParseError(source, 1, "missing 'vertices:' line");
    if (lines.front().directive != "vertices:")
        throw ParseError(source, lines.front().number, "first line must declare 'vertices:'");

    std::vector<std::string> labels = lines.front().values;
    try {
        validate_labels(labels);
    } catch (const std::invalid_argument& e) {
        throw ParseError(source, lines.front().number, e.what());
    }

    std::vector<Face> facets;
    for (size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.directive != "facet:")
            throw ParseError(source, line.number, "expected a 'facet:' line");
        Face f;
        for (const auto& lab : line.values) {
            int v = label_index(labels, lab, source, line.number);
            if (f.contains(v))
                throw ParseError(source, line.number, "repeated vertex '" + lab + "'");
            f = f.with(v);
        }
        facets.push_back(f);
    }
    return SimplicialComplex::build(std::move(labels), facets);
}

SimplicialComplex parse_complex_file(const std::string& path) {
    return with_file(path, [&](std::istream& in) { return parse_complex(in, path); });
}

Coloring parse_coloring(std::istream& in, const std::string& source,
                        const std::vector<std::string>& labels) {
    std::vector<Line> lines = content_lines(in, source);
    Coloring chi;
    std::vector<int> owner(labels.size(), -1);
    for (const Line& line : lines) {
        if (line.directive != "class:")
            throw ParseError(source, line.number, "expected a 'class:' line");
        Face c;
        for (const auto& lab : line.values) {
            int v = label_index(labels, lab, source, line.number);
            if (owner[static_cast<size_t>(v)] >= 0)
                throw ParseError(source, line.number,
                                 "vertex '" + lab + "' already belongs to class " +
                                     std::to_string(owner[static_cast<size_t>(v)] + 1));
            owner[static_cast<size_t>(v)] = chi.class_count();
            c = c.with(v);
        }
        chi.classes.push_back(c);
    }
    for (size_t v = 0; v < labels.size(); ++v)
        if (owner[v] < 0)
            throw ParseError(source, lines.empty() ? 1 : lines.back().number,
                             "vertex '" + labels[v] + "' is not covered by any class");
    return chi;
}

Coloring parse_coloring_file(const std::string& path, const std::vector<std::string>& labels) {
    return with_file(path, [&](std::istream& in) { return parse_coloring(in, path, labels); });
}

Graph parse_graph(std::istream& in, const std::string& source) {
    std::vector<Line> lines = content_lines(in, source);
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    bool edges_started = false;
    for (const Line& line : lines) {
        if (line.directive == "vertex:") {
            if (edges_started)
                throw ParseError(source, line.number, "vertex declared after the edge list");
            if (line.values.size() != 1)
                throw ParseError(source, line.number, "expected exactly one label");
            labels.push_back(line.values.front());
        } else if (line.directive == "edge:") {
            edges_started = true;
            if (line.values.size() != 2)
                throw ParseError(source, line.number, "expected exactly two endpoints");
            int u = label_index(labels, line.values[0], source, line.number);
            int v = label_index(labels, line.values[1], source, line.number);
            if (u == v) throw ParseError(source, line.number, "loops are not allowed");
            auto key = std::minmax(u, v);
            for (auto [a, b] : edges)
                if (std::minmax(a, b) == key)
                    throw ParseError(source, line.number, "repeated edge");
            edges.emplace_back(u, v);
        } else {
            throw ParseError(source, line.number, "expected 'vertex:' or 'edge:'");
        }
    }
    try {
        return Graph::build(std::move(labels), edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(source, lines.empty() ? 1 : lines.front().number, e.what());
    }
}

Graph parse_graph_file(const std::string& path) {
    return with_file(path, [&](std::istream& in) { return parse_graph(in, path); });
}

CliquePartition parse_clique_partition(std::istream& in, const std::string& source,
                                       const Graph& g) {
    Coloring chi = parse_coloring(in, source, g.labels());
    CliquePartition pi;
    pi.classes = chi.classes;
    validate_clique_partition(g, pi);  // throws std::invalid_argument on bad classes
    return pi;
}

CliquePartition parse_clique_partition_file(const std::string& path, const Graph& g) {
    return with_file(path,
                     [&](std::istream& in) { return parse_clique_partition(in, path, g); });
}

std::string serialize_complex(const SimplicialComplex& complex) {
    std::ostringstream out;
    out << "vertices:";
    for (const auto& lab : complex.labels()) out << ' ' << lab;
    out << "\n";
    for (Face f : complex.facets()) {
        out << "facet:";
        for (int v : f.vertices()) out << ' ' << complex.label(v);
        out << "\n";
    }
    return out.str();
}

std::string serialize_coloring(const SimplicialComplex& complex, const Coloring& chi) {
    std::ostringstream out;
    for (Face c : chi.classes) {
        out << "class:";
        for (int v : c.vertices()) out << ' ' << complex.label(v);
        out << "\n";
    }
    return out.str();
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    for (const auto& lab : g.labels()) out << "vertex: " << lab << "\n";
    for (auto [u, v] : g.edges()) out << "edge: " << g.label(u) << ' ' << g.label(v) << "\n";
    return out.str();
}

std::string face_to_string(const SimplicialComplex& complex, Face f) {
    std::string out = "{";
    bool first = true;
    for (int v : f.vertices()) {
        if (!first) out += ' ';
        out += complex.label(v);
        first = false;
    }
    out += '}';
    return out;
}

} // namespace whisk
