#pragma once

#include <cstdint>

namespace weyl::detail {

// Embedded copies of the published data tables.  The checksums are FNV-1a 64
// over the exact bytes of each text block; loaders verify them before parsing
// so that silent corruption of the embedded literals cannot go unnoticed.
extern const char* const kFixtureText;
extern const std::uint64_t kFixtureChecksum;
extern const char* const kTable1Csv;
extern const std::uint64_t kTable1Checksum;

}  // namespace weyl::detail
