#include "realsurf/surface_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "realsurf/bounds.hpp"
#include "realsurf/errors.hpp"
#include "realsurf/involution.hpp"
#include "realsurf/multicurve.hpp"

namespace realsurf {

namespace {

// Whitespace-splitting tokenizer that remembers column positions for
// diagnostics.
struct Token {
    std::string text;
    int column;
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size() || line[i] == '#') break;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        tokens.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
    }
    return tokens;
}

int parse_int(const Token& tok, int line_no, const char* what) {
    try {
        std::size_t pos = 0;
        const int value = std::stoi(tok.text, &pos);
        if (pos != tok.text.size()) throw std::invalid_argument("");
        return value;
    } catch (const std::exception&) {
        throw ParseError(line_no, tok.column, std::string("expected ") + what + ", got '" + tok.text + "'");
    }
}

HalfEdge parse_half_edge(const Token& tok, int line_no) {
    const std::size_t dot = tok.text.find('.');
    if (dot == std::string::npos)
        throw ParseError(line_no, tok.column, "expected <vertex>.<slot>, got '" + tok.text + "'");
    HalfEdge h;
    try {
        std::size_t pos = 0;
        h.vertex = std::stoi(tok.text.substr(0, dot), &pos);
        if (pos != dot) throw std::invalid_argument("");
        const std::string slot = tok.text.substr(dot + 1);
        h.slot = std::stoi(slot, &pos);
        if (pos != slot.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw ParseError(line_no, tok.column, "expected <vertex>.<slot>, got '" + tok.text + "'");
    }
    return h;
}

std::string format_length(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string fixed9(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9f", value);
    return buf;
}

}  // namespace

FNSurface parse_surface(std::string_view text) {
    FNSurface surface;
    bool have_header = false;
    std::vector<bool> seen_edge;

    int line_no = 0;
    std::size_t offset = 0;
    while (offset <= text.size()) {
        const std::size_t eol = text.find('\n', offset);
        const std::string_view line =
            text.substr(offset, eol == std::string_view::npos ? text.size() - offset : eol - offset);
        offset = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        const std::vector<Token> tokens = tokenize(line);
        if (tokens.empty()) continue;

        if (tokens[0].text == "pants") {
            if (have_header) throw ParseError(line_no, tokens[0].column, "duplicate 'pants' header");
            if (tokens.size() != 2)
                throw ParseError(line_no, tokens[0].column, "expected 'pants <vertex-count>'");
            surface.graph.vertex_count = parse_int(tokens[1], line_no, "vertex count");
            have_header = true;
            const int V = surface.graph.vertex_count;
            if (V < 2 || V % 2 != 0)
                throw ParseError(line_no, tokens[1].column,
                                 "vertex count must be even and at least 2, got " + tokens[1].text);
            const int E = 3 * V / 2;
            surface.graph.edges.resize(E);
            surface.length.resize(E, 0.0);
            surface.twist.resize(E, Rational(0));
            seen_edge.assign(E, false);
            continue;
        }
        if (tokens[0].text == "edge") {
            if (!have_header)
                throw ParseError(line_no, tokens[0].column, "'edge' before 'pants' header");
            if (tokens.size() != 8 || tokens[4].text != "len" || tokens[6].text != "twist")
                throw ParseError(line_no, tokens[0].column,
                                 "expected 'edge <id> <v0>.<s0> <v1>.<s1> len <decimal> twist <p>/<q>'");
            const int id = parse_int(tokens[1], line_no, "edge id");
            if (id < 0 || id >= static_cast<int>(seen_edge.size()))
                throw ParseError(line_no, tokens[1].column,
                                 "edge id " + tokens[1].text + " out of range 0.." +
                                     std::to_string(seen_edge.size() - 1));
            if (seen_edge[id])
                throw ParseError(line_no, tokens[1].column, "duplicate edge id " + tokens[1].text);
            seen_edge[id] = true;

            surface.graph.edges[id].side0 = parse_half_edge(tokens[2], line_no);
            surface.graph.edges[id].side1 = parse_half_edge(tokens[3], line_no);

            try {
                std::size_t pos = 0;
                surface.length[id] = std::stod(tokens[5].text, &pos);
                if (pos != tokens[5].text.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw ParseError(line_no, tokens[5].column, "expected decimal length, got '" + tokens[5].text + "'");
            }
            const auto twist = Rational::parse(tokens[7].text);
            if (!twist)
                throw ParseError(line_no, tokens[7].column, "expected rational twist, got '" + tokens[7].text + "'");
            surface.twist[id] = normalize_twist(*twist);
            continue;
        }
        throw ParseError(line_no, tokens[0].column, "unknown directive '" + tokens[0].text + "'");
    }

    if (!have_header) throw ParseError(line_no, 1, "missing 'pants' header");
    for (std::size_t e = 0; e < seen_edge.size(); ++e)
        if (!seen_edge[e]) throw ParseError(line_no, 1, "missing edge " + std::to_string(e));

    const ValidationReport report = validate(surface);
    if (!report.ok())
        throw ParseError(line_no, 1, "surface invalid: " + report.issues.front());
    return surface;
}

std::string emit_surface(const FNSurface& surface) {
    std::ostringstream out;
    out << "pants " << surface.graph.vertex_count << "\n";
    for (int e = 0; e < surface.graph.edge_count(); ++e) {
        const auto& edge = surface.graph.edges[e];
        out << "edge " << e << " " << edge.side0.vertex << "." << edge.side0.slot << " "
            << edge.side1.vertex << "." << edge.side1.slot << " len " << format_length(surface.length[e])
            << " twist " << surface.twist[e].str() << "\n";
    }
    return out.str();
}

std::string report_check(const FNSurface& surface) {
    return std::string("is_real ") + (is_real(surface) ? "true" : "false") + "\n";
}

namespace {

void append_trace_fields(std::ostringstream& out, const FNSurface& surface, const Multicurve& curves) {
    out << "genus " << genus(surface.graph) << "\n";
    out << "is_real true\n";
    out << "n " << curves.n() << "\n";
    for (int i = 0; i < curves.n(); ++i)
        out << "curve " << (i + 1) << " length " << fixed9(curves.curves[i].length) << "\n";
}

}  // namespace

std::string report_trace(const FNSurface& surface) {
    const Multicurve curves = trace_fixed_curves(surface);
    std::ostringstream out;
    append_trace_fields(out, surface, curves);
    return out.str();
}

std::string report_classify(const FNSurface& surface) {
    const RealFormClass cls = classify_real_form(surface);
    std::ostringstream out;
    append_trace_fields(out, surface, trace_fixed_curves(surface));
    out << "separating " << (cls.separating ? "true" : "false") << "\n";
    out << "parity_ok " << (cls.parity_ok ? "true" : "false") << "\n";
    return out.str();
}

std::string report_bounds(const FNSurface& surface) {
    const DistanceBoundReport bounds = distance_lower_bound(surface);
    std::ostringstream out;
    out << report_classify(surface);
    out << "hexagon_bound " << fixed9(bounds.hexagon_bound) << "\n";
    out << "collar_bound " << fixed9(bounds.collar_bound) << "\n";
    out << "certified_lower_bound " << fixed9(bounds.certified_lower_bound) << "\n";
    out << "ln3_half " << fixed9(DistanceBoundReport::kLn3Half) << "\n";
    out << "clears_ln3_half " << (bounds.clears_ln3_half ? "true" : "false") << "\n";
    return out.str();
}

}  // namespace realsurf
