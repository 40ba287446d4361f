#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "rk/subspace.hpp"

namespace rk {

/// SHA-256 hex digest (content addressing for the cache).
std::string sha256Hex(const std::string& data);

/**
 * Content-addressed file cache: one file per key under the cache directory,
 * written atomically (temp file + rename). Keys are hex digests.
 */
class Cache
{
public:
    explicit Cache(std::filesystem::path dir);
    const std::filesystem::path& dir() const { return dir_; }
    std::optional<std::string> get(const std::string& key) const;
    void put(const std::string& key, const std::string& bytes) const;

private:
    std::filesystem::path dir_;
};

/**
 * Compact length-prefixed binary record of an RREF basis. Layout: the magic
 * bytes "RKSV1", then ambient dim and row count as u32 little-endian, then
 * per row a u32 count of nonzero entries followed by (u32 column, u32 length,
 * decimal string) triples.
 */
std::string encodeSubspaceRecord(const Subspace<Rational>& s);
std::optional<Subspace<Rational>> decodeSubspaceRecord(const std::string& bytes);

}  // namespace rk
