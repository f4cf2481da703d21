#pragma once

#include "lebnorm/lebesgue.hpp"
#include "lebnorm/report.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lebnorm::cli {

/// One row of the norms table, as serialized.
struct OutputRecord {
    std::int64_t n = 0;
    std::string norm_exact;  // "p/q"
    double norm_float = 0.0;
    std::string argmax_k;  // comma-joined indices
    double gap_float = 0.0;
    std::optional<double> oracle_value;
    std::optional<double> oracle_dev;
};

OutputRecord make_record(const NormReport& report);

/// 17 significant digits; the double round-trips losslessly.
std::string format_double(double v);

/// RFC-4180 style: quotes a field only when it contains , " or newline.
std::string csv_field(const std::string& s);
std::vector<std::string> split_csv_row(const std::string& line);

std::string csv_header(bool with_oracle);
std::string csv_row(const OutputRecord& rec);

/// Full command line: args exclude the program name. Exit status 0 on
/// success / all checks passing, 1 on verification or tolerance failure,
/// 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lebnorm::cli
