#pragma once

// Random curve specs shared by the unit tests and the acceptance run.

#include <random>
#include <set>

#include "alexinv/curve_global.hpp"

namespace families {

using namespace alexinv;

inline SingularitySpec point(long x, long y, const std::string &type) {
    SingularitySpec s;
    s.x = x;
    s.y = y;
    s.type = type;
    return s;
}

inline ProjectiveCurveSpec irreducible(long d, const std::vector<SingularitySpec> &pts) {
    ProjectiveCurveSpec s;
    s.degree = d;
    s.components = {{"C", d}};
    s.singularities = pts;
    return s;
}

inline std::vector<SingularitySpec> random_points(std::mt19937 &rng, std::size_t n, const std::string &type,
                                                  std::set<std::pair<long, long>> &used) {
    std::uniform_int_distribution<long> c(-30, 30);
    std::vector<SingularitySpec> out;
    while (out.size() < n) {
        long x = c(rng), y = c(rng);
        if (!used.insert({x, y}).second) continue;
        out.push_back(point(x, y, type));
    }
    return out;
}

// Largest cusp count tried for degree d: below the genus bound and 5 d^2 / 16.
inline long cusp_cap(long d) { return std::min((d - 1) * (d - 2) / 2, 5 * d * d / 16); }

/// Irreducible degree-d spec with random cusps and a few nodes. For d = 6
/// about half of the larger specs put six cusps on the conic y = x^2.
inline ProjectiveCurveSpec random_cuspidal(std::mt19937 &rng, long d) {
    std::set<std::pair<long, long>> used;
    std::vector<SingularitySpec> pts;
    long cap = cusp_cap(d);
    if (d % 6 == 0) {
        const long m = d - 3 - d / 6;
        cap = std::min(cap, (m + 1) * (m + 2) / 2 + d - 2);
    }
    std::uniform_int_distribution<long> count(0, cap);
    long k = count(rng);
    if (d == 6 && k >= 6 && rng() % 2 == 0) {
        for (long t : {-3L, -1L, 0L, 1L, 2L, 4L}) {
            used.insert({t, t * t});
            pts.push_back(point(t, t * t, "cusp"));
        }
        k -= 6;
    }
    for (auto &p : random_points(rng, static_cast<std::size_t>(k), "cusp", used)) pts.push_back(p);
    std::uniform_int_distribution<long> nodes(0, 3);
    long room = (d - 1) * (d - 2) / 2 - static_cast<long>(pts.size());
    for (auto &p : random_points(rng, static_cast<std::size_t>(std::min(room, nodes(rng))), "node", used)) pts.push_back(p);
    return irreducible(d, pts);
}

} // namespace families
