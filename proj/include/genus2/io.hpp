#pragma once

// Deterministic text output: fixed 17-significant-digit formatting for CSV,
// ordered JSON, and a small CSV writer.

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace genus2 {

using ordered_json = nlohmann::ordered_json;

inline std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

class CsvWriter {
  public:
    CsvWriter(const std::string& path, const std::vector<std::string>& header) : out_(path) {
        if (!out_) throw std::runtime_error("cannot open output file: " + path);
        write_row_strings(header);
    }

    void write_row(const std::vector<double>& vals, const std::string& tail = "") {
        std::string line;
        for (size_t i = 0; i < vals.size(); ++i) {
            if (i) line += ',';
            line += fmt17(vals[i]);
        }
        if (!tail.empty()) {
            if (!vals.empty()) line += ',';
            line += tail;
        }
        out_ << line << '\n';
    }

    void write_row_strings(const std::vector<std::string>& cells) {
        std::string line;
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) line += ',';
            line += cells[i];
        }
        out_ << line << '\n';
    }

  private:
    std::ofstream out_;
};

}  // namespace genus2
