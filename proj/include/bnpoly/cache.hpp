#pragma once

// Optional on-disk cache for long computations (DAG lists, hulls). Entries are
// keyed by an FNV-1a hash of their input text. Caching is off unless
// BNPOLY_CACHE_DIR names a directory.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace bnpoly {

inline constexpr const char* kCacheEnv = "BNPOLY_CACHE_DIR";

std::uint64_t content_hash(std::string_view text);

/// The directory named by BNPOLY_CACHE_DIR, created on demand.
std::optional<std::filesystem::path> cache_directory();

/// Cached value for (kind, input), if present.
std::optional<std::string> cache_load(std::string_view kind, std::string_view input);

/// Stores atomically (write then rename). Failures are silent: the cache is advisory.
void cache_store(std::string_view kind, std::string_view input, std::string_view value);

}  // namespace bnpoly
