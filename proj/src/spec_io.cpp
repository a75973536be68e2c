#include "corepalg/spec_io.hpp"

#include <fstream>
#include <sstream>

#include "corepalg/errors.hpp"

namespace corepalg {

namespace {

// Error tied to a JSON key; converted to a line-anchored SpecError by the caller.
struct KeyError {
    std::string key;
    std::string message;
};

const Json& require(const Json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key))
        throw KeyError{where, where + ": missing field '" + key + "'"};
    return obj.at(key);
}

Complex parse_entry(const Json& v, const std::string& where) {
    if (v.is_number()) return {v.get<double>(), 0.0};
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return {v[0].get<double>(), v[1].get<double>()};
    throw KeyError{where, where + ": matrix entry must be [re, im] or a number"};
}

int parse_int(const Json& v, const std::string& key) {
    if (!v.is_number_integer()) throw KeyError{key, key + ": expected an integer"};
    return v.get<int>();
}

}  // namespace

SpecError::SpecError(std::string source, int line, const std::string& message)
    : std::runtime_error(source + (line > 0 ? ":" + std::to_string(line) : std::string()) + ": " +
                         message),
      source_(std::move(source)),
      line_(line) {}

std::string_view to_string(TypeRequest request) {
    switch (request) {
        case TypeRequest::A: return "a";
        case TypeRequest::B: return "b";
        case TypeRequest::Auto: return "auto";
    }
    return "auto";
}

TypeRequest parse_type_request(std::string_view text) {
    if (text == "a") return TypeRequest::A;
    if (text == "b") return TypeRequest::B;
    if (text == "auto") return TypeRequest::Auto;
    throw std::invalid_argument("type must be one of a, b, auto");
}

int line_of_key(std::string_view text, std::string_view key) {
    const std::string quoted = "\"" + std::string(key) + "\"";
    const auto pos = text.find(quoted);
    if (pos == std::string_view::npos) return 0;
    int line = 1;
    for (std::size_t i = 0; i < pos; ++i)
        if (text[i] == '\n') ++line;
    return line;
}

CMatrix parse_matrix(const Json& node, const std::string& where) {
    if (!node.is_array() || node.empty() || !node[0].is_array() || node[0].empty())
        throw KeyError{where, where + ": matrix must be a non-empty array of rows"};
    const auto rows = static_cast<Eigen::Index>(node.size());
    const auto cols = static_cast<Eigen::Index>(node[0].size());
    CMatrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const Json& row = node[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
            throw KeyError{where, where + ": ragged matrix (row " + std::to_string(r + 1) + ")"};
        for (Eigen::Index c = 0; c < cols; ++c)
            m(r, c) = parse_entry(row[static_cast<std::size_t>(c)], where);
    }
    if (!m.allFinite()) throw KeyError{where, where + ": non-finite matrix entry"};
    return m;
}

Json matrix_to_json(const CMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

GroupPresentation parse_group(const Json& node) {
    if (node.is_string()) {
        try {
            return catalog(node.get<std::string>());
        } catch (const NotFoundError& e) {
            throw KeyError{"group", e.what()};
        }
    }
    if (!node.is_object()) throw KeyError{"group", "group: expected a catalog name or an object"};
    const std::string name =
        node.contains("name") && node["name"].is_string() ? node["name"].get<std::string>() : "custom";
    const int d = parse_int(require(node, "d", "group"), "d");
    const int n = parse_int(require(node, "n", "group"), "n");
    const Json& gens = require(node, "generators", "group");
    if (!gens.is_array()) throw KeyError{"generators", "generators: expected an array of matrices"};
    if (static_cast<int>(gens.size()) != n)
        throw KeyError{"generators", "generators: expected n = " + std::to_string(n) +
                                         " matrices, got " + std::to_string(gens.size())};
    std::vector<CMatrix> matrices;
    for (const Json& g : gens) matrices.push_back(parse_matrix(g, "generators"));
    try {
        return make_group(name, d, std::move(matrices));
    } catch (const ShapeError& e) {
        throw KeyError{"generators", e.what()};
    }
}

ExtensionSpec parse_extension_spec(std::string_view text, std::string_view source) {
    const std::string src(source);
    Json root;
    try {
        root = Json::parse(text);
    } catch (const Json::parse_error& e) {
        int line = 1;
        for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
            if (text[i] == '\n') ++line;
        throw SpecError(src, line, std::string("malformed JSON: ") + e.what());
    }

    try {
        if (!root.is_object()) throw KeyError{"", "spec must be a JSON object"};
        ExtensionSpec spec;
        spec.source = src;
        spec.text = std::string(text);
        spec.echo = root;
        spec.group = parse_group(require(root, "group", "spec"));

        const Json& a0 = require(root, "a0", "spec");
        const Json& kind = require(a0, "kind", "a0");
        if (kind == "K")
            spec.kind = AntilinearKind::K;
        else if (kind == "Theta")
            spec.kind = AntilinearKind::Theta;
        else
            throw KeyError{"kind", "a0.kind must be \"K\" or \"Theta\""};

        const int d = spec.group.dim;
        if (a0.contains("N")) {
            spec.N = parse_matrix(a0["N"], "N");
            if (spec.N->rows() != d || spec.N->cols() != d)
                throw KeyError{"N", "a0.N must be " + std::to_string(d) + "x" + std::to_string(d)};
        }
        if (a0.contains("action")) {
            spec.action = parse_matrix(a0["action"], "action");
            if (spec.action->rows() != d || spec.action->cols() != d)
                throw KeyError{"action",
                               "a0.action must be " + std::to_string(d) + "x" + std::to_string(d)};
        }
        if (a0.contains("signature")) {
            const int s = parse_int(a0["signature"], "signature");
            if (s != 1 && s != -1) throw KeyError{"signature", "a0.signature must be +1 or -1"};
            spec.signature = s;
        }
        if (spec.N && spec.signature) {
            const double defect = signature_defect(*spec.N, *spec.signature);
            if (!(defect <= kSignatureTolerance))
                throw KeyError{"N", "signature violation: ||N N* - (" +
                                        std::to_string(*spec.signature) +
                                        ")E||_F = " + std::to_string(defect)};
        }

        if (root.contains("type")) {
            if (!root["type"].is_string()) throw KeyError{"type", "type must be a string"};
            try {
                spec.type = parse_type_request(root["type"].get<std::string>());
            } catch (const std::invalid_argument& e) {
                throw KeyError{"type", e.what()};
            }
        }
        return spec;
    } catch (const KeyError& e) {
        throw SpecError(src, e.key.empty() ? 0 : line_of_key(text, e.key), e.message);
    }
}

ExtensionSpec load_extension_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError(path, 0, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_extension_spec(buf.str(), path);
}

}  // namespace corepalg
