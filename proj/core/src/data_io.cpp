#include "wrescalc/data_io.hpp"

#include <map>
#include <sstream>
#include <vector>

namespace wrescalc {
namespace {

std::string vec_str(const std::vector<Rational>& v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) out += ", ";
        out += rational_str(v[k]);
    }
    return out;
}

std::string mat_str(const std::vector<std::vector<Rational>>& m) {
    std::string out;
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (k) out += "; ";
        out += vec_str(m[k]);
    }
    return out;
}

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(strip(s.substr(start)));
            return out;
        }
        out.push_back(strip(s.substr(start, pos - start)));
        start = pos + 1;
    }
}

Rational parse_rat_checked(const std::string& text, const std::string& key) {
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument&) {
        throw InvalidDataError("bad rational '" + text + "' in key '" + key + "'");
    }
}

std::vector<Rational> parse_vec(const std::string& text, const std::string& key) {
    std::vector<Rational> out;
    for (const auto& piece : split(text, ','))
        out.push_back(parse_rat_checked(piece, key));
    return out;
}

std::vector<std::vector<Rational>> parse_mat(const std::string& text,
                                             const std::string& key) {
    std::vector<std::vector<Rational>> out;
    for (const auto& row : split(text, ';'))
        out.push_back(parse_vec(row, key));
    return out;
}

}  // namespace

std::string write_boundary_data(const BoundaryData& bd) {
    std::ostringstream out;
    out << "# boundary-point vector field data\n";
    out << "type = boundary\n";
    out << "n = " << bd.n << "\n";
    out << "V = " << vec_str(bd.V) << "\n";
    out << "dV = " << mat_str(bd.dV) << "\n";
    out << "dnV = " << vec_str(bd.dnV) << "\n";
    out << "nablaV = " << mat_str(bd.nablaV) << "\n";
    return out.str();
}

std::string write_geometry_data(const GeometryData& g) {
    std::ostringstream out;
    out << "# pointwise geometry data\n";
    out << "type = geometry\n";
    out << "n = " << g.n << "\n";
    out << "V = " << vec_str(g.V) << "\n";
    out << "U = " << mat_str(g.U) << "\n";
    for (std::size_t j = 0; j < g.S.size(); ++j)
        out << "S" << (j + 1) << " = " << mat_str(g.S[j]) << "\n";
    out << "R = " << vec_str(g.R) << "\n";
    return out.str();
}

DataDocument parse_data_document(const std::string& text) {
    std::map<std::string, std::string> keys;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = strip(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw InvalidDataError("line " + std::to_string(lineno) +
                                   ": expected 'key = value'");
        std::string key = strip(line.substr(0, eq));
        std::string value = strip(line.substr(eq + 1));
        if (key.empty())
            throw InvalidDataError("line " + std::to_string(lineno) + ": empty key");
        if (!keys.emplace(key, value).second)
            throw InvalidDataError("duplicate key '" + key + "'");
    }

    auto require = [&](const std::string& key) -> const std::string& {
        auto it = keys.find(key);
        if (it == keys.end()) throw InvalidDataError("missing key '" + key + "'");
        return it->second;
    };

    const std::string& type = require("type");
    int n = 0;
    try {
        n = std::stoi(require("n"));
    } catch (const std::exception&) {
        throw InvalidDataError("bad dimension value");
    }
    if (n < 3) throw InvalidDataError("dimension must be at least 3");

    DataDocument doc;
    if (type == "boundary") {
        BoundaryData bd;
        bd.n = n;
        bd.V = parse_vec(require("V"), "V");
        bd.dV = parse_mat(require("dV"), "dV");
        bd.dnV = parse_vec(require("dnV"), "dnV");
        bd.nablaV = parse_mat(require("nablaV"), "nablaV");
        bd.validate();
        doc.boundary = std::move(bd);
        return doc;
    }
    if (type == "geometry") {
        GeometryData g;
        g.n = n;
        g.reg = SymbolRegistry::standard(n);
        g.V = parse_vec(require("V"), "V");
        g.U = parse_mat(require("U"), "U");
        for (int j = 1; j <= n; ++j)
            g.S.push_back(parse_mat(require("S" + std::to_string(j)),
                                    "S" + std::to_string(j)));
        g.R = parse_vec(require("R"), "R");
        g.validate();
        doc.geometry = std::move(g);
        return doc;
    }
    throw InvalidDataError("unknown document type '" + type + "'");
}

}  // namespace wrescalc
