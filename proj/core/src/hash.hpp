#pragma once

#include <cstdint>
#include <string_view>

namespace fracto::detail {

inline std::uint64_t mix(std::uint64_t h, std::uint64_t v)
{
    v += 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    v ^= v >> 30;
    v *= 0xbf58476d1ce4e5b9ULL;
    v ^= v >> 27;
    v *= 0x94d049bb133111ebULL;
    v ^= v >> 31;
    return h ^ v;
}

inline std::uint64_t hash_string(std::string_view s)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}
