#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace infrank {

/// Where a threshold assignment came from; enough to regenerate it.
struct ThresholdProvenance {
    std::string scheme;      // "uniform", "random", "centrality", "file", ...
    std::string parameters;  // free-form, e.g. "theta=0.5" or "(0,1]"
    std::uint64_t seed = 0;

    friend bool operator==(const ThresholdProvenance&, const ThresholdProvenance&) = default;
};

/// Per-node resistance theta(i), a fraction of |N(i)| in [0, 1].
struct ThresholdAssignment {
    std::vector<double> values;
    ThresholdProvenance provenance;

    std::size_t size() const noexcept { return values.size(); }
    friend bool operator==(const ThresholdAssignment&, const ThresholdAssignment&) = default;
};

/// Throws ValidationError unless there are exactly n values, all in [0, 1].
void validate(const ThresholdAssignment& theta, std::size_t n);

}  // namespace infrank
