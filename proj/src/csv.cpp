#include "longwave/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "longwave/error.hpp"

namespace longwave {

namespace {

std::string number(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_number(const std::string& field) {
  if (field == "nan") return std::numeric_limits<double>::quiet_NaN();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(field, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != field.size() || field.empty()) {
    throw InputError("malformed number '" + field + "' in CSV");
  }
  return v;
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<ConvergenceRecord>& records) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.method << ',' << r.model << ',' << number(r.epsilon) << ',' << number(r.tau) << ','
        << r.n_modes << ',' << number(r.t_final) << ',' << number(r.l2_error) << ','
        << number(r.h1_error) << ',' << number(r.mass_drift) << ',' << number(r.wall_time_s)
        << '\n';
  }
}

void write_csv(const std::string& path, const std::vector<ConvergenceRecord>& records) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  write_csv(out, records);
  if (!out) throw Error("failed writing '" + path + "'");
}

std::vector<ConvergenceRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw InputError("CSV header does not match the expected column layout");
  }
  std::vector<ConvergenceRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
    if (fields.size() != 10) {
      throw InputError("CSV row has " + std::to_string(fields.size()) + " fields: " + line);
    }
    ConvergenceRecord r;
    r.method = fields[0];
    r.model = fields[1];
    r.epsilon = parse_number(fields[2]);
    r.tau = parse_number(fields[3]);
    r.n_modes = static_cast<int>(parse_number(fields[4]));
    r.t_final = parse_number(fields[5]);
    r.l2_error = parse_number(fields[6]);
    r.h1_error = parse_number(fields[7]);
    r.mass_drift = parse_number(fields[8]);
    r.wall_time_s = parse_number(fields[9]);
    if (std::isnan(r.l2_error)) r.status = RecordStatus::failed;
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<ConvergenceRecord> read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return read_csv(in);
}

std::size_t write_flag_log(std::ostream& out, const std::vector<ConvergenceRecord>& records) {
  std::size_t written = 0;
  for (const auto& r : records) {
    if (r.status == RecordStatus::under_resolved) {
      out << "# under-resolved: " << r.key() << " (" << r.note << ")\n";
      ++written;
    } else if (r.status == RecordStatus::failed) {
      out << "# failed: " << r.key() << ": " << r.note << '\n';
      ++written;
    }
  }
  return written;
}

}  // namespace longwave
