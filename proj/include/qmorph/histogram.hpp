#pragma once

#include "qmorph/dense.hpp"
#include "qmorph/ensemble.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qmorph {

/// Measurement outcomes over an ordered qubit list. Outcome strings list the
/// measured qubits in the given order, first qubit leftmost.
struct Histogram {
    uint64_t shots = 0;
    std::map<std::string, uint64_t> counts;
    std::map<std::string, double> exact;
};

/// Exact outcome distribution: probability of o is the fraction of ensemble
/// states whose projection onto the measured qubits is o.
std::map<std::string, double> exact_distribution(const BasisEnsemble& state,
                                                 const std::vector<uint32_t>& measured);

/// Same from a dense state: sums squared magnitudes per projection.
std::map<std::string, double> exact_distribution(const DenseState& state,
                                                 const std::vector<uint32_t>& measured);

/// Multinomial draw, reproducible for a fixed seed across platforms.
Histogram sample(const std::map<std::string, double>& exact, uint64_t shots, uint64_t seed);

} // namespace qmorph
