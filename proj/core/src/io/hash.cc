// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#include "posediv/io/hash.h"

#include <cstdio>

#include "posediv/pipeline/seeding.h"

namespace posediv {

// nlohmann::json objects are std::map backed, so dump() is already sorted.
std::string CanonicalJson(const nlohmann::json& j) { return j.dump(); }

std::string ConfigHash(const nlohmann::json& j) { return Hex64(Fnv1a64(CanonicalJson(j))); }

std::string Hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace posediv
