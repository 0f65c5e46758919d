#pragma once

// Shared fixture point sets: the named configurations plus ten seeded
// random sets in general position. Everything here is deterministic, so
// frozen expected values in the tests stay valid.

#include <random>
#include <set>
#include <string>
#include <vector>

#include "psit/constructions.hpp"

namespace psit::fixtures {

struct Fixture {
    std::string name;
    PointSetPtr points;
};

inline PointSetPtr random_point_set(int n, int min_interior, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 200000; ++attempt) {
        std::set<std::pair<std::int64_t, std::int64_t>> used;
        std::vector<std::pair<std::int64_t, std::int64_t>> coords;
        while (static_cast<int>(coords.size()) < n) {
            const auto x = static_cast<std::int64_t>(rng() % 41);
            const auto y = static_cast<std::int64_t>(rng() % 41);
            if (used.insert({x, y}).second) coords.emplace_back(x, y);
        }
        try {
            PointSet ps = validate_point_set(coords);
            if (ps.interior_size() >= min_interior)
                return std::make_shared<const PointSet>(std::move(ps));
        } catch (const InputError&) {
        }
    }
    throw InternalError("random fixture generation did not converge");
}

// All fixture sets with N <= 8: ten random, convex 4..7, triangle plus
// center, and the chain sets for lengths 2..6.
inline std::vector<Fixture> fixtures_n_le_8() {
    std::vector<Fixture> out;
    const std::vector<std::tuple<int, int, std::uint64_t>> random_specs = {
        {5, 1, 11}, {6, 1, 22}, {6, 2, 33}, {7, 3, 44}, {7, 1, 55},
        {8, 3, 66}, {8, 2, 77}, {8, 1, 88}, {5, 0, 99}, {7, 2, 110},
    };
    int idx = 0;
    for (const auto& [n, mi, seed] : random_specs)
        out.push_back({"random" + std::to_string(idx++), random_point_set(n, mi, seed)});
    for (int n = 4; n <= 7; ++n)
        out.push_back({"convex" + std::to_string(n), build_convex(n)});
    out.push_back({"triangle_center", build_triangle_plus_center()});
    for (int n = 2; n <= 6; ++n)
        out.push_back({"chain" + std::to_string(n), build_TN(n).first});
    return out;
}

} // namespace psit::fixtures
