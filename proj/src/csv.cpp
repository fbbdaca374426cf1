#include "levylab/csv.hpp"

#include "levylab/errors.hpp"

#include <fmt/format.h>

#include <cmath>

namespace levylab {

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& header)
    : out_(path, std::ios::binary | std::ios::trunc) {
    if (!out_) throw InvalidInput("cannot open '" + path + "' for writing");
    row(header);
}

void CsvWriter::row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out_ << ',';
        out_ << quote(fields[i]);
    }
    out_ << "\r\n";
    if (!out_) throw InvalidInput("CSV write failed");
}

std::string CsvWriter::quote(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string q = "\"";
    for (char c : field) {
        if (c == '"') q += '"';
        q += c;
    }
    q += '"';
    return q;
}

std::string CsvWriter::num(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return fmt::format("{:.12g}", v);
}

std::string CsvWriter::num(long long v) { return fmt::format("{}", v); }

}  // namespace levylab
