#pragma once

#include <array>
#include <cstdint>

// FIPS 180-2 constant tables. Pinned by a checksum in tests/test_sha2.cpp.
namespace stepsha::constants {

extern const std::array<std::uint32_t, 8> kIv256;
extern const std::array<std::uint32_t, 64> kRound256;

extern const std::array<std::uint64_t, 8> kIv512;
extern const std::array<std::uint64_t, 80> kRound512;

}  // namespace stepsha::constants
