#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "tfhankel/series.hpp"

namespace tfh::cli {

/// Bumped whenever the on-disk layout changes; files of other versions are
/// ignored.
inline constexpr int kCacheFormatVersion = 1;

/// Text layout:
///
///   # tfhankel series cache
///   format 1
///   equation atom
///   order 34
///   0 1/1
///   1
///   2 0/1 1/1
///   ...
///
/// One record per coefficient f_j: the index j followed by the exact
/// rational coefficients of s^0, s^1, ... (none for a zero polynomial).
void write_cache(std::ostream& os, const SeriesTable& table);

/// Parses a cache stream. Throws std::runtime_error on malformed input or a
/// format version other than kCacheFormatVersion.
SeriesTable read_cache(std::istream& is);

/// File name used for a (kind, order) pair inside a cache directory.
std::string cache_file_name(EquationKind kind, int order);

/// Returns the cached table if a valid file exists for exactly this key.
std::optional<SeriesTable> load_cached(const std::filesystem::path& dir, EquationKind kind, int order);

/// Writes the table into the cache directory (created if needed). The file
/// is written to a temporary name and renamed into place.
void store_cached(const std::filesystem::path& dir, const SeriesTable& table);

}  // namespace tfh::cli
