#include "psit/cache.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace psit {

std::string cache_key(const std::vector<std::string>& parts) {
    // FNV-1a over version and parts, with separators so part boundaries
    // cannot collide.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&](std::string_view s) {
        for (const char ch : s) {
            h ^= static_cast<unsigned char>(ch);
            h *= 0x100000001b3ULL;
        }
        h ^= 0x1f;
        h *= 0x100000001b3ULL;
    };
    mix(kToolVersion);
    for (const auto& p : parts) mix(p);
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

std::optional<std::string> Cache::get(const std::string& key) const {
    if (!enabled_) return std::nullopt;
    std::ifstream in(dir_ / (key + ".json"), std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void Cache::put(const std::string& key, const std::string& value) const {
    if (!enabled_) return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) return;  // caching is best-effort
    std::ofstream out(dir_ / (key + ".json"), std::ios::binary | std::ios::trunc);
    out << value;
}

} // namespace psit
