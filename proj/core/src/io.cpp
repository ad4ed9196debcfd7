#include "cmhd/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <cstring>

namespace cmhd {

namespace {
void put_u64(FILE* f, std::uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
  std::fwrite(b, 1, 8, f);
}
std::uint64_t get_u64(FILE* f) {
  unsigned char b[8];
  if (std::fread(b, 1, 8, f) != 8) throw Error("snapshot: truncated header");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return v;
}
}  // namespace

void write_snapshot_fields(const std::string& path, const std::vector<const Field*>& fields,
                           int side_count, const Grid& g) {
  FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw Error("snapshot: cannot open " + path);
  std::fwrite("CMHD", 1, 4, f);
  put_u64(f, static_cast<std::uint64_t>(g.np1()));
  put_u64(f, static_cast<std::uint64_t>(g.n2));
  put_u64(f, static_cast<std::uint64_t>(fields.size() / side_count));
  put_u64(f, static_cast<std::uint64_t>(side_count));
  for (const Field* fp : fields)
    std::fwrite(fp->v.data(), sizeof(double), fp->v.size(), f);
  std::fclose(f);
}

void write_snapshot(const std::string& path, const StatePair& U, const Grid& g) {
  std::vector<const Field*> fields;
  for (Side s : kSides)
    for (int k = 0; k < 6; ++k) fields.push_back(&U.side(s).c[k]);
  write_snapshot_fields(path, fields, 2, g);
}

StatePair read_snapshot(const std::string& path, Grid& g_out) {
  FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) throw Error("snapshot: cannot open " + path);
  char magic[4];
  if (std::fread(magic, 1, 4, f) != 4 || std::memcmp(magic, "CMHD", 4) != 0) {
    std::fclose(f);
    throw Error("snapshot: bad magic");
  }
  const auto np1 = static_cast<int>(get_u64(f));
  const auto n2 = static_cast<int>(get_u64(f));
  const auto nfields = static_cast<int>(get_u64(f));
  const auto nsides = static_cast<int>(get_u64(f));
  if (nfields != 6 || nsides != 2) {
    std::fclose(f);
    throw Error("snapshot: unexpected field/side counts");
  }
  g_out.n1 = np1 - 1;
  g_out.n2 = n2;
  StatePair U;
  for (Side s : kSides)
    for (int k = 0; k < 6; ++k) {
      Field fld(np1, n2);
      if (std::fread(fld.v.data(), sizeof(double), fld.v.size(), f) != fld.v.size()) {
        std::fclose(f);
        throw Error("snapshot: truncated payload");
      }
      U.side(s).c[k] = std::move(fld);
    }
  std::fclose(f);
  return U;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct CsvWriter::Impl {
  FILE* f = nullptr;
};

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& channels)
    : impl_(new Impl) {
  impl_->f = std::fopen(path.c_str(), "wb");
  if (!impl_->f) throw Error("csv: cannot open " + path);
  for (std::size_t i = 0; i < channels.size(); ++i)
    std::fprintf(impl_->f, "%s%s", channels[i].c_str(), i + 1 < channels.size() ? "," : "\n");
}

CsvWriter::~CsvWriter() {
  close();
  delete impl_;
}

void CsvWriter::row(const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i)
    std::fprintf(impl_->f, "%s%s", format_double(values[i]).c_str(),
                 i + 1 < values.size() ? "," : "\n");
}

void CsvWriter::close() {
  if (impl_->f) {
    std::fclose(impl_->f);
    impl_->f = nullptr;
  }
}

void Manifest::add(const std::string& key, const std::string& value) {
  entries.emplace_back(key, value);
}
void Manifest::add(const std::string& key, double value) { add(key, format_double(value)); }
void Manifest::add(const std::string& key, int value) { add(key, std::to_string(value)); }

void Manifest::write(const std::string& path) const {
  FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw Error("manifest: cannot open " + path);
  std::fprintf(f, "contact-mhd-manifest-v1\n");
  for (const auto& [k, v] : entries) std::fprintf(f, "%s = %s\n", k.c_str(), v.c_str());
  std::fclose(f);
}

std::string code_version() { return "contact-mhd 0.1.0"; }

}  // namespace cmhd
