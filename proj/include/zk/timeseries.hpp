#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "zk/diagnostics.hpp"

namespace zk {

/// Formats one record as a CSV row (17 significant digits, no newline).
std::string format_row(const DiagnosticsRecord& record);
std::string csv_header();

/// Appends rows to `path`; the header is written when the file is new or empty.
void emit_timeseries(const std::vector<DiagnosticsRecord>& records, const std::string& path);

/// Reads back a file written by emit_timeseries.
std::vector<DiagnosticsRecord> parse_timeseries(const std::string& path);

/// Streaming writer used by long runs; flushes after every row.
class TimeseriesWriter {
 public:
  explicit TimeseriesWriter(const std::string& path);
  ~TimeseriesWriter();
  TimeseriesWriter(const TimeseriesWriter&) = delete;
  TimeseriesWriter& operator=(const TimeseriesWriter&) = delete;

  void append(const DiagnosticsRecord& record);
  std::size_t rows() const { return rows_; }

 private:
  std::FILE* file_ = nullptr;
  std::string path_;
  std::size_t rows_ = 0;
};

}  // namespace zk
