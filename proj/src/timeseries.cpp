#include "zk/timeseries.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "zk/error.hpp"

namespace zk {

std::string csv_header() {
  std::string out;
  for (const auto& name : DiagnosticsRecord::column_names()) {
    if (!out.empty()) out += ',';
    out += name;
  }
  return out;
}

std::string format_row(const DiagnosticsRecord& record) {
  std::string out;
  char buf[32];
  for (double v : record.columns()) {
    if (!out.empty()) out += ',';
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
  }
  return out;
}

TimeseriesWriter::TimeseriesWriter(const std::string& path) : path_(path) {
  std::error_code ec;
  bool fresh = !std::filesystem::exists(path, ec) || std::filesystem::file_size(path, ec) == 0;
  file_ = std::fopen(path.c_str(), "ab");
  if (file_ == nullptr) throw IoError("cannot open time series for appending: " + path);
  if (fresh) {
    std::string header = csv_header() + "\n";
    if (std::fputs(header.c_str(), file_) < 0) throw IoError("failed writing time series: " + path);
    std::fflush(file_);
  }
}

TimeseriesWriter::~TimeseriesWriter() {
  if (file_) std::fclose(file_);
}

void TimeseriesWriter::append(const DiagnosticsRecord& record) {
  std::string row = format_row(record) + "\n";
  if (std::fputs(row.c_str(), file_) < 0 || std::fflush(file_) != 0)
    throw IoError("failed writing time series: " + path_);
  ++rows_;
}

void emit_timeseries(const std::vector<DiagnosticsRecord>& records, const std::string& path) {
  TimeseriesWriter writer(path);
  for (const auto& r : records) writer.append(r);
}

std::vector<DiagnosticsRecord> parse_timeseries(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open time series: " + path);
  std::string line;
  if (!std::getline(in, line)) throw IoError("time series " + path + " is empty");
  if (line != csv_header()) throw IoError("time series " + path + ": unexpected header");
  std::vector<DiagnosticsRecord> out;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<double> values;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      char* end = nullptr;
      double v = std::strtod(cell.c_str(), &end);
      if (end == cell.c_str() || *end != '\0') {
        std::ostringstream msg;
        msg << "time series " << path << ":" << lineno << ": bad number '" << cell << "'";
        throw IoError(msg.str());
      }
      values.push_back(v);
    }
    if (values.size() != DiagnosticsRecord::column_names().size()) {
      std::ostringstream msg;
      msg << "time series " << path << ":" << lineno << ": expected "
          << DiagnosticsRecord::column_names().size() << " columns, found " << values.size();
      throw IoError(msg.str());
    }
    out.push_back(DiagnosticsRecord::from_columns(values));
  }
  return out;
}

}  // namespace zk
