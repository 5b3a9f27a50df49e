#include "sizzle/transmon.hpp"

#include <cmath>

namespace sizzle {

void TransmonSpec::validate() const {
    if (!(omega_ge > 0.0)) throw error("transmon omega_ge must be > 0");
    if (!(alpha < 0.0)) throw error("transmon alpha must be < 0");
    if (levels < 3) throw error("transmon levels must be >= 3");
    if (t2_star > 2.0 * t1) throw error("transmon requires t2_star <= 2*t1");
}

void SystemSpec::validate() const {
    if (transmons.empty()) throw error("system has no transmons");
    for (const auto& t : transmons) t.validate();
    if (!(frame_freq > 0.0)) throw error("frame_freq must be > 0");
    const int n = static_cast<int>(transmons.size());
    for (const auto& [key, g] : couplings) {
        const auto [i, j] = key;
        if (i < 0 || j < 0 || i >= n || j >= n || i >= j)
            throw error("coupling key must satisfy 0 <= i < j < n");
        if (g < 0.0) throw error("coupling strength must be >= 0");
    }
}

std::vector<int> SystemSpec::level_dims() const {
    std::vector<int> dims;
    dims.reserve(transmons.size());
    for (const auto& t : transmons) dims.push_back(t.levels);
    return dims;
}

double SystemSpec::coupling(int i, int j) const {
    if (i > j) std::swap(i, j);
    auto it = couplings.find({i, j});
    return it == couplings.end() ? 0.0 : it->second;
}

void DriveTone::validate(int n_transmons) const {
    if (target < 0 || target >= n_transmons)
        throw error("drive tone target index out of range");
    if (!(carrier_freq > 0.0)) throw error("drive carrier frequency must be > 0");
}

} // namespace sizzle
