#pragma once

#include <string>

#include <json.hpp>

#include "drazin/matrix.hpp"

namespace drazin {

/// Wire format for one matrix:
///   {"rows": R, "cols": C, "entries": [[s, ...], ...]}
/// where each s is a scalar literal in the Q(i) grammar.  Emission is
/// canonical (canonical scalar form, fields in this order), so equal
/// matrices serialize to identical bytes.
nlohmann::ordered_json matrix_to_json(const Matrix& m);

/// Inverse of matrix_to_json; throws ParseError on malformed input.
Matrix matrix_from_json(const nlohmann::json& j);

/// Read a whole file; throws Error when the file cannot be opened.
std::string read_file(const std::string& path);

void write_file(const std::string& path, const std::string& contents);

Matrix read_matrix_file(const std::string& path);

void write_matrix_file(const std::string& path, const Matrix& m);

/// Serialize any report/certificate object with the canonical layout
/// (2-space indent, keys in insertion order).
std::string dump_json(const nlohmann::ordered_json& j);

} // namespace drazin
