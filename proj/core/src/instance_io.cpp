#include "momwb/instance_io.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>
#include <variant>
#include <vector>

namespace momwb {

namespace {

struct Line {
    std::size_t number = 0;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in)
{
    std::vector<Line> lines;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        std::istringstream words(raw);
        Line line{number, {}};
        for (std::string w; words >> w;) {
            line.tokens.push_back(std::move(w));
        }
        if (!line.tokens.empty()) {
            lines.push_back(std::move(line));
        }
    }
    return lines;
}

std::int64_t to_integer(const Line& line, const std::string& token)
{
    std::size_t used = 0;
    std::int64_t value = 0;
    try {
        value = std::stoll(token, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != token.size()) {
        throw InstanceParseError(line.number, "expected an integer, found '" + token + "'");
    }
    return value;
}

void expect_width(const Line& line, std::size_t width, const char* what)
{
    if (line.tokens.size() != width) {
        throw InstanceParseError(line.number, std::string(what) + ": expected " + std::to_string(width) +
                                                  " values, found " + std::to_string(line.tokens.size()));
    }
}

std::size_t to_count(const Line& line, const std::string& token, const char* what)
{
    auto const v = to_integer(line, token);
    if (v < 0) {
        throw InstanceParseError(line.number, std::string(what) + " must be non-negative");
    }
    return static_cast<std::size_t>(v);
}

}  // namespace

InstanceParseError::InstanceParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line)
{
}

WeightedInstance read_instance(std::istream& in)
{
    auto const lines = tokenize(in);
    if (lines.empty()) {
        throw InstanceParseError(0, "empty instance");
    }
    auto const& header = lines[0];
    expect_width(header, 4, "header");
    if (header.tokens[0] != "MOMWB" || header.tokens[1] != "1") {
        throw InstanceParseError(header.number, "header must start with 'MOMWB 1'");
    }
    auto const& kind = header.tokens[2];
    auto const k = to_count(header, header.tokens[3], "objective count");
    if (k < 1 || k > kMaxObjectives) {
        throw InstanceParseError(header.number, "objective count out of range");
    }
    if (lines.size() < 2) {
        throw InstanceParseError(0, "missing instance body");
    }
    std::vector<std::vector<std::int64_t>> rows(k);

    auto read_weights = [&](const Line& line, std::size_t offset) {
        for (std::size_t i = 0; i < k; ++i) {
            rows[i].push_back(to_integer(line, line.tokens[offset + i]));
        }
    };

    try {
        if (kind == "graphic") {
            expect_width(lines[1], 1, "vertex count");
            auto const vertices = to_count(lines[1], lines[1].tokens[0], "vertex count");
            std::vector<Edge> edges;
            std::set<std::pair<std::size_t, std::size_t>> seen;
            for (std::size_t i = 2; i < lines.size(); ++i) {
                auto const& line = lines[i];
                expect_width(line, 2 + k, "edge");
                auto const u = to_count(line, line.tokens[0], "vertex");
                auto const v = to_count(line, line.tokens[1], "vertex");
                if (u < 1 || v < 1 || u > vertices || v > vertices) {
                    throw InstanceParseError(line.number, "vertex out of range 1.." + std::to_string(vertices));
                }
                if (u == v) {
                    throw InstanceParseError(line.number, "self-loop");
                }
                if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
                    throw InstanceParseError(line.number, "parallel edge");
                }
                edges.push_back({u - 1, v - 1});
                read_weights(line, 2);
            }
            return {Matroid::graphic(vertices, std::move(edges)), std::move(rows)};
        }
        if (kind == "uniform") {
            expect_width(lines[1], 2, "uniform size line");
            auto const m = to_count(lines[1], lines[1].tokens[0], "ground set size");
            auto const capacity = to_count(lines[1], lines[1].tokens[1], "capacity");
            if (lines.size() - 2 != m) {
                throw InstanceParseError(0, "expected " + std::to_string(m) + " weight lines, found " +
                                                std::to_string(lines.size() - 2));
            }
            for (std::size_t i = 2; i < lines.size(); ++i) {
                expect_width(lines[i], k, "weights");
                read_weights(lines[i], 0);
            }
            return {Matroid::uniform(m, capacity), std::move(rows)};
        }
    } catch (const std::invalid_argument& e) {
        throw InstanceParseError(0, e.what());
    }
    throw InstanceParseError(header.number, "unknown matroid kind '" + kind + "'");
}

void write_instance(std::ostream& out, const WeightedInstance& instance)
{
    auto const k = instance.objectives();
    auto weights = [&](std::size_t e, bool leading_space) {
        for (std::size_t i = 0; i < k; ++i) {
            if (i > 0 || leading_space) {
                out << ' ';
            }
            out << instance.weight(i, e);
        }
    };
    if (auto const* g = std::get_if<GraphicMatroid>(&instance.matroid().kind())) {
        out << "MOMWB 1 graphic " << k << '\n' << g->vertex_count << '\n';
        for (std::size_t e = 0; e < g->edges.size(); ++e) {
            out << g->edges[e].u + 1 << ' ' << g->edges[e].v + 1;
            weights(e, true);
            out << '\n';
        }
        return;
    }
    auto const& u = std::get<UniformMatroid>(instance.matroid().kind());
    out << "MOMWB 1 uniform " << k << '\n' << u.ground_size << ' ' << u.capacity << '\n';
    for (std::size_t e = 0; e < u.ground_size; ++e) {
        weights(e, false);
        out << '\n';
    }
}

WeightedInstance parse_instance(const std::string& text)
{
    std::istringstream in(text);
    return read_instance(in);
}

std::string format_instance(const WeightedInstance& instance)
{
    std::ostringstream out;
    write_instance(out, instance);
    return out.str();
}

WeightedInstance load_instance(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    return read_instance(in);
}

void save_instance(const std::filesystem::path& path, const WeightedInstance& instance)
{
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    write_instance(out, instance);
    if (!out) {
        throw std::runtime_error("error while writing " + path.string());
    }
}

}  // namespace momwb
