#pragma once

#include <optional>
#include <string>

#include "nilgraph/group.hpp"

namespace nilgraph {

/// On-disk store of enumerated groups.
///
/// File layout (little-endian): magic "NILGRPC\0", u32 format version, u8
/// carrier tag, u32-length-prefixed carrier description and spec label, u32
/// width, u32 order, order*width u16 element words, u32 generator count,
/// u32 generator indices. Loads are rejected unless tag, description and
/// version all match the requesting carrier.
class GroupCache {
public:
  static constexpr std::uint32_t kVersion = 1;

  explicit GroupCache(std::string directory);

  std::string path_for(const std::string &label, const Carrier &carrier) const;
  std::optional<MutableGroupPtr> load(const std::string &label, CarrierPtr carrier,
                               const ClosureOptions &options) const;
  void store(const Group &group) const;

private:
  std::string dir_;
};

}  // namespace nilgraph
