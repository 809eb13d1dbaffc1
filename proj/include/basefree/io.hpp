#ifndef BASEFREE_IO_HPP
#define BASEFREE_IO_HPP

#include <fstream>
#include <map>
#include <sstream>

#include "basefree/base_locus.hpp"
#include "basefree/parser.hpp"

namespace basefree {

// Input documents are plain text: `key = polynomial` lines, '#' comments.
// Surface parametrizations use keys p1..p4, planar maps s1..s3.
struct InputDoc {
    std::map<std::string, std::string> entries;

    static InputDoc parse(std::istream& in) {
        InputDoc doc;
        std::string line;
        size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            size_t h = line.find('#');
            if (h != std::string::npos) line.erase(h);
            size_t a = line.find_first_not_of(" \t\r");
            if (a == std::string::npos) continue;
            size_t eq = line.find('=');
            if (eq == std::string::npos)
                throw parse_error("line " + std::to_string(lineno) + ": expected `key = value`");
            std::string key = line.substr(0, eq);
            std::string val = line.substr(eq + 1);
            auto strip = [](std::string& s) {
                size_t b = s.find_first_not_of(" \t\r");
                size_t e = s.find_last_not_of(" \t\r");
                s = (b == std::string::npos) ? "" : s.substr(b, e - b + 1);
            };
            strip(key);
            strip(val);
            if (key.empty() || val.empty())
                throw parse_error("line " + std::to_string(lineno) + ": empty key or value");
            if (!doc.entries.emplace(key, val).second)
                throw parse_error("line " + std::to_string(lineno) + ": duplicate key " + key);
        }
        return doc;
    }

    static InputDoc parse_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw invalid_input_error("cannot open input file: " + path);
        return parse(in);
    }

    std::vector<PolyQ> polys(const std::string& prefix, size_t count) const {
        std::vector<PolyQ> out;
        for (size_t i = 1; i <= count; ++i) {
            std::string key = prefix + std::to_string(i);
            auto it = entries.find(key);
            if (it == entries.end()) throw invalid_input_error("missing key: " + key);
            out.push_back(parse_poly(it->second, vars_t3()));
        }
        return out;
    }

    bool has(const std::string& key) const { return entries.count(key) != 0; }
};

inline SurfaceParam read_surface_param(const std::string& path) {
    return SurfaceParam(InputDoc::parse_file(path).polys("p", 4));
}

inline PlanarMap read_planar_map(const std::string& path) {
    return PlanarMap(InputDoc::parse_file(path).polys("s", 3));
}

// A document holds either a surface parametrization (p1..p4) or a planar
// map (s1..s3); detect which.
inline bool doc_is_surface(const InputDoc& doc) {
    if (doc.has("p1")) return true;
    if (doc.has("s1")) return false;
    throw invalid_input_error("input must define p1..p4 or s1..s3");
}

}  // namespace basefree

#endif
