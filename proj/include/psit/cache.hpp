#pragma once

// File-backed report cache keyed by a content hash of the canonical input
// plus the operation id and tool version. Hits are byte-identical to fresh
// computation; stale-version entries simply miss.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace psit {

inline constexpr std::string_view kToolVersion = "psit-0.1.0";

std::string cache_key(const std::vector<std::string>& parts);

class Cache {
public:
    Cache(std::filesystem::path dir, bool enabled) : dir_(std::move(dir)), enabled_(enabled) {}

    std::optional<std::string> get(const std::string& key) const;
    void put(const std::string& key, const std::string& value) const;
    bool enabled() const { return enabled_; }

private:
    std::filesystem::path dir_;
    bool enabled_;
};

} // namespace psit
