#pragma once

#include <filesystem>
#include <variant>

#include <json.hpp>

#include "weyrkit/exactmat/matrix.hpp"
#include "weyrkit/weyrform.hpp"

// JSON file formats. Rationals are always strings ("p/q" or an integer
// literal) so no precision is lost; plain JSON integers are accepted on read.
//
//   matrix:    {"rows": m, "cols": n, "entries": [["1", "2/3"], ...]}
//   structure: {"blocks": [{"eigenvalue": "2", "characteristic": [2, 2, 1]}]}
namespace weyrkit::io {

using json = nlohmann::json;

Matrix matrix_from_json(const json& j);
json matrix_to_json(const Matrix& m);

EigenStructure structure_from_json(const json& j);
json structure_to_json(const EigenStructure& s);

json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);

Matrix load_matrix(const std::filesystem::path& path);
void save_matrix(const std::filesystem::path& path, const Matrix& m);
EigenStructure load_structure(const std::filesystem::path& path);

// A file holding either a matrix or a declared structure, told apart by the
// presence of "blocks".
std::variant<Matrix, EigenStructure> load_operand(const std::filesystem::path& path);

}  // namespace weyrkit::io
