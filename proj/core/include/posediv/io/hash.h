// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace posediv {

// Compact dump with sorted keys; the byte form used for hashing.
std::string CanonicalJson(const nlohmann::json& j);

// 16 lowercase hex digits of the FNV-1a hash of CanonicalJson(j).
std::string ConfigHash(const nlohmann::json& j);

std::string Hex64(std::uint64_t v);

}  // namespace posediv
