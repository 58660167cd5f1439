#include "nilgraph/cache.hpp"

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "nilgraph/error.hpp"

namespace nilgraph {

namespace {

constexpr char kMagic[8] = {'N', 'I', 'L', 'G', 'R', 'P', 'C', '\0'};

template <typename T>
void put(std::ostream &os, T v) {
  os.write(reinterpret_cast<const char *>(&v), sizeof v);
}

template <typename T>
bool get(std::istream &is, T &v) {
  return static_cast<bool>(is.read(reinterpret_cast<char *>(&v), sizeof v));
}

void put_string(std::ostream &os, const std::string &s) {
  put<std::uint32_t>(os, static_cast<std::uint32_t>(s.size()));
  os.write(s.data(), static_cast<std::streamsize>(s.size()));
}

bool get_string(std::istream &is, std::string &s) {
  std::uint32_t n = 0;
  if (!get(is, n) || n > (1u << 20)) return false;
  s.resize(n);
  return static_cast<bool>(is.read(s.data(), n));
}

std::string fnv_hex(const std::string &s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

GroupCache::GroupCache(std::string directory) : dir_(std::move(directory)) {}

std::string GroupCache::path_for(const std::string &label, const Carrier &carrier) const {
  return (std::filesystem::path(dir_) /
          ("group-" + fnv_hex(label + "|" + carrier.describe()) + ".bin"))
      .string();
}

std::optional<MutableGroupPtr> GroupCache::load(const std::string &label, CarrierPtr carrier,
                                         const ClosureOptions &options) const {
  std::ifstream in(path_for(label, *carrier), std::ios::binary);
  if (!in) return std::nullopt;
  char magic[8];
  std::uint32_t version = 0, width = 0, order = 0, ngens = 0;
  std::uint8_t tag = 0;
  std::string desc, stored_label;
  if (!in.read(magic, 8) || std::memcmp(magic, kMagic, 8) != 0) return std::nullopt;
  if (!get(in, version) || version != kVersion) return std::nullopt;
  if (!get(in, tag) || tag != static_cast<std::uint8_t>(carrier->kind())) return std::nullopt;
  if (!get_string(in, desc) || desc != carrier->describe()) return std::nullopt;
  if (!get_string(in, stored_label) || stored_label != label) return std::nullopt;
  if (!get(in, width) || width != carrier->width()) return std::nullopt;
  if (!get(in, order) || order == 0 || order > options.element_cap) return std::nullopt;
  std::vector<Word> data(std::size_t(order) * width);
  if (!in.read(reinterpret_cast<char *>(data.data()),
               static_cast<std::streamsize>(data.size() * sizeof(Word)))) {
    return std::nullopt;
  }
  if (!get(in, ngens)) return std::nullopt;
  std::vector<Index> gens(ngens);
  for (auto &g : gens) {
    if (!get(in, g)) return std::nullopt;
  }
  try {
    auto g = Group::from_elements(std::move(carrier), std::move(data), std::move(gens), options);
    return g;
  } catch (const std::exception &) {
    return std::nullopt;
  }
}

void GroupCache::store(const Group &group) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  const std::string path = path_for(group.label, group.carrier());
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out.write(kMagic, 8);
    put<std::uint32_t>(out, kVersion);
    put<std::uint8_t>(out, static_cast<std::uint8_t>(group.carrier().kind()));
    put_string(out, group.carrier().describe());
    put_string(out, group.label);
    put<std::uint32_t>(out, static_cast<std::uint32_t>(group.carrier().width()));
    put<std::uint32_t>(out, group.order());
    out.write(reinterpret_cast<const char *>(group.data().data()),
              static_cast<std::streamsize>(group.data().size() * sizeof(Word)));
    put<std::uint32_t>(out, static_cast<std::uint32_t>(group.generators().size()));
    for (Index g : group.generators()) put<std::uint32_t>(out, g);
    if (!out) return;
  }
  std::filesystem::rename(tmp, path, ec);
}

}  // namespace nilgraph
