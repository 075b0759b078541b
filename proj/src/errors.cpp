#include "gbg/errors.hpp"

#include <cstdlib>
#include <string>

namespace gbg {

std::size_t enumeration_cap() {
  const char* env = std::getenv("GBG_ENUM_CAP");
  if (env == nullptr || *env == '\0') return kDefaultEnumCap;
  try {
    std::size_t pos = 0;
    unsigned long long v = std::stoull(env, &pos);
    if (pos != std::string(env).size() || v == 0) return kDefaultEnumCap;
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    return kDefaultEnumCap;
  }
}

}  // namespace gbg
