#pragma once

#include <istream>
#include <ostream>
#include <string>

#include "sitemedian/instance.hpp"

namespace sitemedian {

/// Column-name overrides for the three optional per-site fields. The file
/// layout is fixed: id, role, [sigma], [cost], [estimate], then one column
/// per covariate, in file order.
struct CsvOptions {
    std::string sigma_column = "sigma";
    std::string cost_column = "cost";
    std::string estimate_column = "estimate";
};

/// Parses UTF-8 CSV with a header row. Role tokens are exactly E, P, EP.
/// Empty cells in optional columns mean "missing"; covariate cells must be
/// numeric. Every failure is a DataError with the offending row/column.
ProblemInstance load_csv(std::istream& in, const CsvOptions& options = {});
ProblemInstance load_csv_file(const std::string& path, const CsvOptions& options = {});

/// Inverse of load_csv: writing then re-parsing reproduces the instance
/// exactly (doubles are printed with round-trip precision).
void write_csv(std::ostream& out, const ProblemInstance& instance,
               const CsvOptions& options = {});
std::string to_csv(const ProblemInstance& instance, const CsvOptions& options = {});

} // namespace sitemedian
