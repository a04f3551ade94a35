#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "longwave/experiments.hpp"

namespace longwave {

inline constexpr const char* kCsvHeader =
    "method,model,epsilon,tau,n_modes,t_final,l2_error,h1_error,mass_drift,wall_time_s";

/// Header plus one line per record; floats with 17 significant digits,
/// "nan" where a value is missing.
void write_csv(std::ostream& out, const std::vector<ConvergenceRecord>& records);
void write_csv(const std::string& path, const std::vector<ConvergenceRecord>& records);

/// Parses a file produced by write_csv. Status and notes are not stored in the
/// CSV; rows with a NaN l2_error come back as failed.
std::vector<ConvergenceRecord> read_csv(std::istream& in);
std::vector<ConvergenceRecord> read_csv(const std::string& path);

/// Flag lines ("# under-resolved: <key>", "# failed: <key>: <why>") for every
/// flagged record; returns the number written.
std::size_t write_flag_log(std::ostream& out, const std::vector<ConvergenceRecord>& records);

}  // namespace longwave
