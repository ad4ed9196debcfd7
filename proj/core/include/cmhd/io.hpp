#pragma once

#include <string>
#include <vector>

#include "cmhd/grid.hpp"

namespace cmhd {

/// Binary snapshot: magic "CMHD", then four little-endian u64
/// (x1 node count, x2 node count, field count, side count), then row-major
/// f64 payload ordered side -> field -> i1 -> i2.
void write_snapshot(const std::string& path, const StatePair& U, const Grid& g);
void write_snapshot_fields(const std::string& path, const std::vector<const Field*>& fields,
                           int side_count, const Grid& g);
StatePair read_snapshot(const std::string& path, Grid& g_out);

/// Comma-separated time series; first line names the channels.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& channels);
  ~CsvWriter();
  void row(const std::vector<double>& values);
  void close();

 private:
  struct Impl;
  Impl* impl_;
};

/// Deterministic number formatting shared by every text output.
std::string format_double(double v);

/// Ordered key/value manifest ("key = value" lines with a schema header).
struct Manifest {
  std::vector<std::pair<std::string, std::string>> entries;
  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, double value);
  void add(const std::string& key, int value);
  void write(const std::string& path) const;
};

std::string code_version();

}  // namespace cmhd
