#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace levylab {

/// Minimal CSV writer: header row, RFC 4180 quoting, '.' decimal separator and
/// a fixed numeric format so reports are byte-reproducible.
class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::vector<std::string>& header);

    void row(const std::vector<std::string>& fields);

    static std::string quote(const std::string& field);
    static std::string num(double v);
    static std::string num(long long v);

private:
    std::ofstream out_;
};

}  // namespace levylab
