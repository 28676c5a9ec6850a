#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace blowdg {

/// %.17g rendering: enough digits to reproduce the double exactly.
inline std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// Minimal CSV emitter.  Every file gets a header row; numeric fields are
/// written with 17 significant digits so byte-identical reruns imply
/// bit-identical numbers.
class CsvWriter {
public:
    explicit CsvWriter(const std::string& path, const std::vector<std::string>& header)
        : out_(path, std::ios::binary) {
        if (!out_) throw std::runtime_error("CsvWriter: cannot open " + path);
        for (const std::string& name : header) check_field(name);
        write_strings(header);
    }

    void row(const std::vector<std::string>& fields) {
        for (const std::string& f : fields) check_field(f);
        write_strings(fields);
    }

    void flush() { out_.flush(); }

    static std::string num(double v) { return format_full(v); }
    static std::string num(std::uint64_t v) { return std::to_string(v); }
    static std::string num(int v) { return std::to_string(v); }

private:
    static void check_field(const std::string& f) {
        if (f.find(',') != std::string::npos || f.find('\n') != std::string::npos)
            throw std::invalid_argument("CsvWriter: field contains delimiter: " + f);
    }
    void write_strings(const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) out_ << ',';
            out_ << fields[i];
        }
        out_ << '\n';
    }

    std::ofstream out_;
};

}  // namespace blowdg
