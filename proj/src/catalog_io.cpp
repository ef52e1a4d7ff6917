#include <zlib.h>

#include <algorithm>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>

#include "flipgraph/flip_graph.hpp"

namespace flipgraph {

namespace {

using Kind = CatalogFormatError::Kind;

class Writer {
 public:
  void bytes(const void* data, std::size_t size) {
    const auto* p = static_cast<const char*>(data);
    out_.append(p, size);
  }
  void u8(std::uint8_t v) { out_.push_back(static_cast<char>(v)); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  // unsigned LEB128
  void varint(std::uint64_t v) {
    while (v >= 0x80) {
      u8(static_cast<std::uint8_t>(v | 0x80));
      v >>= 7;
    }
    u8(static_cast<std::uint8_t>(v));
  }
  std::string& str() { return out_; }

 private:
  std::string out_;
};

class Reader {
 public:
  Reader(const std::string& bytes, std::size_t end) : bytes_(bytes), end_(end) {}

  void need(std::size_t k) const {
    if (end_ - pos_ < k) throw CatalogFormatError(Kind::truncated, "catalog file is truncated");
  }
  std::uint8_t u8() {
    need(1);
    return static_cast<std::uint8_t>(bytes_[pos_++]);
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(u8()) << (8 * i);
    return v;
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(u8()) << (8 * i);
    return v;
  }
  std::uint64_t varint() {
    std::uint64_t v = 0;
    for (int shift = 0; shift < 64; shift += 7) {
      const std::uint8_t b = u8();
      v |= static_cast<std::uint64_t>(b & 0x7f) << shift;
      if (!(b & 0x80)) return v;
    }
    throw CatalogFormatError(Kind::corrupt, "overlong varint");
  }
  std::size_t position() const { return pos_; }

 private:
  const std::string& bytes_;
  std::size_t end_;
  std::size_t pos_ = 0;
};

std::uint32_t checksum(const char* data, std::size_t size) {
  uLong crc = crc32(0L, Z_NULL, 0);
  // zlib takes uInt lengths; feed in chunks.
  while (size > 0) {
    const auto chunk = static_cast<uInt>(std::min<std::size_t>(size, 1u << 30));
    crc = crc32(crc, reinterpret_cast<const Bytef*>(data), chunk);
    data += chunk;
    size -= chunk;
  }
  return static_cast<std::uint32_t>(crc);
}

}  // namespace

std::string serialize_catalog(const FlipGraphCatalog& catalog) {
  Writer w;
  w.bytes(kCatalogMagic, sizeof kCatalogMagic);
  w.u32(kCatalogVersion);
  w.u32(static_cast<std::uint32_t>(catalog.n));
  w.u8(catalog.mirror_mode ? 1 : 0);
  w.u8(0);
  w.u8(0);
  w.u8(0);
  w.u64(catalog.node_count());
  w.u64(catalog.edge_count());
  w.u32(catalog.seed);
  const std::uint32_t code_length =
      catalog.nodes.empty() ? 0 : static_cast<std::uint32_t>(catalog.nodes.front().code.size());
  w.u32(code_length);
  for (const auto& node : catalog.nodes) {
    if (node.code.size() != code_length) {
      throw CatalogFormatError(Kind::corrupt, "codes of unequal length");
    }
    for (const int v : node.code) w.u32(static_cast<std::uint32_t>(v));
  }
  for (const auto& row : catalog.adjacency) {
    w.varint(row.size());
    NodeId previous = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
      w.varint(i == 0 ? row[i] : row[i] - previous);
      previous = row[i];
    }
  }
  const std::uint32_t crc = checksum(w.str().data(), w.str().size());
  w.u32(crc);
  return std::move(w.str());
}

FlipGraphCatalog deserialize_catalog(const std::string& bytes, std::optional<bool> expected_mirror) {
  if (bytes.size() < sizeof kCatalogMagic ||
      std::memcmp(bytes.data(), kCatalogMagic, sizeof kCatalogMagic) != 0) {
    throw CatalogFormatError(Kind::bad_magic, "not a flip-graph catalog file");
  }
  if (bytes.size() < sizeof kCatalogMagic + 4) {
    throw CatalogFormatError(Kind::truncated, "catalog file is truncated");
  }
  Reader r(bytes, bytes.size() - 4);
  for (std::size_t i = 0; i < sizeof kCatalogMagic; ++i) r.u8();
  const std::uint32_t version = r.u32();
  if (version != kCatalogVersion) {
    throw CatalogFormatError(Kind::version_mismatch,
                             "catalog version " + std::to_string(version) + ", expected " +
                                 std::to_string(kCatalogVersion));
  }
  FlipGraphCatalog c;
  c.n = static_cast<int>(r.u32());
  c.mirror_mode = r.u8() != 0;
  r.u8();
  r.u8();
  r.u8();
  const std::uint64_t node_count = r.u64();
  const std::uint64_t edge_count = r.u64();
  c.seed = r.u32();
  const std::uint32_t code_length = r.u32();
  // Each node needs at least its code and a one-byte degree.
  if (node_count > bytes.size() || code_length > bytes.size()) {
    throw CatalogFormatError(Kind::truncated, "catalog file is truncated");
  }
  r.need(node_count * (4ull * code_length + 1));
  c.nodes.resize(node_count);
  for (auto& node : c.nodes) {
    node.mirror_mode = c.mirror_mode;
    node.code.resize(code_length);
    for (auto& v : node.code) v = static_cast<int>(r.u32());
  }
  c.adjacency.resize(node_count);
  for (auto& row : c.adjacency) {
    const std::uint64_t degree = r.varint();
    if (degree >= node_count) throw CatalogFormatError(Kind::corrupt, "degree out of range");
    row.resize(degree);
    std::uint64_t current = 0;
    for (std::uint64_t i = 0; i < degree; ++i) {
      current = i == 0 ? r.varint() : current + r.varint();
      if (current >= node_count) throw CatalogFormatError(Kind::corrupt, "node id out of range");
      row[i] = static_cast<NodeId>(current);
    }
  }
  if (r.position() != bytes.size() - 4) {
    throw CatalogFormatError(Kind::corrupt, "trailing bytes after adjacency section");
  }
  std::uint32_t stored = 0;
  for (int i = 0; i < 4; ++i) {
    stored |= static_cast<std::uint32_t>(static_cast<std::uint8_t>(bytes[bytes.size() - 4 + i]))
              << (8 * i);
  }
  if (stored != checksum(bytes.data(), bytes.size() - 4)) {
    throw CatalogFormatError(Kind::checksum, "catalog checksum mismatch");
  }
  if (expected_mirror && *expected_mirror != c.mirror_mode) {
    throw CatalogFormatError(Kind::mode_mismatch,
                             std::string("catalog was built with mirror mode ") +
                                 (c.mirror_mode ? "on" : "off") + ", requested " +
                                 (*expected_mirror ? "on" : "off"));
  }
  if (c.edge_count() != edge_count || (node_count > 0 && c.seed >= node_count) ||
      !std::is_sorted(c.nodes.begin(), c.nodes.end())) {
    throw CatalogFormatError(Kind::corrupt, "catalog header disagrees with its contents");
  }
  return c;
}

void save_catalog(const FlipGraphCatalog& catalog, const std::string& path) {
  const std::string bytes = serialize_catalog(catalog);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CatalogFormatError(Kind::io, "cannot open " + path + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw CatalogFormatError(Kind::io, "write to " + path + " failed");
}

FlipGraphCatalog load_catalog(const std::string& path, std::optional<bool> expected_mirror) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CatalogFormatError(Kind::io, "cannot open " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return deserialize_catalog(bytes, expected_mirror);
}

}  // namespace flipgraph
