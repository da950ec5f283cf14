#include "drazin/io.hpp"

#include <fstream>
#include <sstream>

namespace drazin {

nlohmann::ordered_json matrix_to_json(const Matrix& m) {
    nlohmann::ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) {
            row.push_back(format_scalar(m(i, k)));
        }
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

Matrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
        !j.contains("entries")) {
        throw ParseError("matrix object must carry rows, cols and entries", 0);
    }
    if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned()) {
        throw ParseError("rows and cols must be non-negative integers", 0);
    }
    std::size_t rows = j["rows"].get<std::size_t>();
    std::size_t cols = j["cols"].get<std::size_t>();
    const auto& entries = j["entries"];
    if (!entries.is_array() || entries.size() != rows) {
        throw ParseError("entries must hold exactly " + std::to_string(rows) +
                             " rows",
                         0);
    }
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = entries[i];
        if (!row.is_array() || row.size() != cols) {
            throw ParseError("row " + std::to_string(i) + " must hold exactly " +
                                 std::to_string(cols) + " entries",
                             0);
        }
        for (std::size_t k = 0; k < cols; ++k) {
            if (!row[k].is_string()) {
                throw ParseError("entry (" + std::to_string(i) + "," +
                                     std::to_string(k) + ") must be a scalar literal",
                                 0);
            }
            try {
                m(i, k) = parse_scalar(row[k].get<std::string>());
            } catch (const ParseError& e) {
                throw ParseError("entry (" + std::to_string(i) + "," +
                                     std::to_string(k) + "): " + e.what(),
                                 e.position());
            }
        }
    }
    return m;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path + " for reading");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot open " + path + " for writing");
    }
    out << contents;
    if (!out) {
        throw Error("write to " + path + " failed");
    }
}

Matrix read_matrix_file(const std::string& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what(),
                         e.byte);
    }
    return matrix_from_json(j);
}

void write_matrix_file(const std::string& path, const Matrix& m) {
    write_file(path, dump_json(matrix_to_json(m)));
}

std::string dump_json(const nlohmann::ordered_json& j) {
    return j.dump(2) + "\n";
}

} // namespace drazin
