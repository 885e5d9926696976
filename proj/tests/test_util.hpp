#pragma once

#include <cstdint>
#include <vector>

#include "monhecke/gcm.hpp"

namespace monhecke {

inline GCM make_gcm(std::vector<std::vector<std::int64_t>> entries) {
  return GCM(std::move(entries));
}

}  // namespace monhecke
