#include "weyrkit/io.hpp"

#include <fstream>

#include "weyrkit/errors.hpp"

namespace weyrkit::io {

namespace {

Rational rational_from_json(const json& j) {
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return parse_rational(j.dump());
    }
    throw ParseError("matrix entries must be rational strings or integers, got " + j.dump());
}

std::size_t count_field(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_unsigned()) {
        throw ParseError(std::string("missing or invalid \"") + key + "\"");
    }
    return j.at(key).get<std::size_t>();
}

}  // namespace

Matrix matrix_from_json(const json& j) {
    if (!j.is_object()) {
        throw ParseError("matrix file must hold a JSON object");
    }
    const std::size_t rows = count_field(j, "rows");
    const std::size_t cols = count_field(j, "cols");
    if (!j.contains("entries") || !j.at("entries").is_array()) {
        throw ParseError("missing \"entries\" array");
    }
    const json& entries = j.at("entries");
    if (entries.size() != rows) {
        throw ParseError("\"entries\" has " + std::to_string(entries.size()) +
                         " rows but \"rows\" is " + std::to_string(rows));
    }
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = entries.at(i);
        if (!row.is_array() || row.size() != cols) {
            throw ParseError("row " + std::to_string(i) + " does not have " +
                             std::to_string(cols) + " entries");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m(i, c) = rational_from_json(row.at(c));
        }
    }
    return m;
}

json matrix_to_json(const Matrix& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back(m(i, c).get_str());
        }
        entries.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

EigenStructure structure_from_json(const json& j) {
    if (!j.is_object() || !j.contains("blocks") || !j.at("blocks").is_array()) {
        throw ParseError("structure file must hold {\"blocks\": [...]}");
    }
    std::vector<EigenBlock> blocks;
    for (const json& b : j.at("blocks")) {
        if (!b.is_object() || !b.contains("eigenvalue") || !b.contains("characteristic") ||
            !b.at("characteristic").is_array()) {
            throw ParseError("each block needs \"eigenvalue\" and a \"characteristic\" array");
        }
        std::vector<std::size_t> parts;
        for (const json& part : b.at("characteristic")) {
            if (!part.is_number_unsigned()) {
                throw ParseError("characteristic parts must be positive integers");
            }
            parts.push_back(part.get<std::size_t>());
        }
        try {
            blocks.push_back({rational_from_json(b.at("eigenvalue")), Partition(std::move(parts))});
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    try {
        return EigenStructure(std::move(blocks));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

json structure_to_json(const EigenStructure& s) {
    json blocks = json::array();
    for (const auto& b : s.blocks()) {
        blocks.push_back({{"eigenvalue", b.eigenvalue.get_str()},
                          {"characteristic", b.characteristic.parts()}});
    }
    return {{"blocks", std::move(blocks)}};
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path.string());
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot write " + path.string());
    }
    out << j.dump(2) << "\n";
}

Matrix load_matrix(const std::filesystem::path& path) {
    return matrix_from_json(read_json_file(path));
}

void save_matrix(const std::filesystem::path& path, const Matrix& m) {
    write_json_file(path, matrix_to_json(m));
}

EigenStructure load_structure(const std::filesystem::path& path) {
    return structure_from_json(read_json_file(path));
}

std::variant<Matrix, EigenStructure> load_operand(const std::filesystem::path& path) {
    const json j = read_json_file(path);
    if (j.is_object() && j.contains("blocks")) {
        return structure_from_json(j);
    }
    return matrix_from_json(j);
}

}  // namespace weyrkit::io
