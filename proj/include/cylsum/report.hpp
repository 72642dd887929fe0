#ifndef CYLSUM_REPORT_HPP
#define CYLSUM_REPORT_HPP

#include <string>
#include <vector>

#include "cylsum/config.hpp"

namespace cylsum {

inline constexpr const char* kToolVersion = "0.1.0";

/// One result row.  For dlambda rows the delta column carries lambda and
/// the n column the pair index.  flag is empty on clean rows, "unreliable"
/// when the quadrature refinement exceeded 5%, "fail" on failed checks,
/// "hypothesis_violated" when alpha_i + beta_i < -1.
struct ReportRow {
    std::string command;
    int n = 0;
    double delta = 0.0;
    std::string quantity;
    double value = 0.0;
    double refinement = 0.0;
    double seconds = 0.0;
    std::string flag;
};

struct Report {
    std::string command;
    RunConfig config;
    std::vector<ReportRow> rows;

    std::string to_csv() const;
    std::string to_json() const;
    std::string render(const std::string& format) const;
};

}  // namespace cylsum

#endif
