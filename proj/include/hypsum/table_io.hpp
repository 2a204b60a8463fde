#pragma once
#include <filesystem>

#include "hypsum/sieves.hpp"

namespace hypsum {

// Flat binary table format "HSV1":
//   bytes 0..3   magic "HSV1"
//   bytes 4..11  limit N, unsigned 64-bit little-endian
//   then N pairs (num, den), each signed 64-bit little-endian, for n = 1..N
// name/alpha/beta are not part of the format; the cache key carries the name
// and the catalog reassigns metadata on load.
void save_table(const FunctionTable& t, const std::filesystem::path& file);
FunctionTable load_table(const std::filesystem::path& file);

}  // namespace hypsum
