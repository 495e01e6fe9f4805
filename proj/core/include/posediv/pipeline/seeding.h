// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string_view>

namespace posediv {

// 64-bit FNV-1a. Stable across platforms, unlike std::hash.
std::uint64_t Fnv1a64(std::string_view bytes);

// splitmix64 finalizer.
std::uint64_t Mix64(std::uint64_t x);

// Per-entity seed derived from the run seed and a stable key.
std::uint64_t DeriveSeed(std::uint64_t seed, std::string_view key);
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t key);

}  // namespace posediv
