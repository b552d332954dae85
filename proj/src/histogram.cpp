#include "qmorph/histogram.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace qmorph {

namespace {

std::string project(word_t state, const std::vector<uint32_t>& measured) {
    std::string s(measured.size(), '0');
    for (std::size_t i = 0; i < measured.size(); ++i)
        if (test_bit(state, measured[i])) s[i] = '1';
    return s;
}

// mt19937_64 output mapped to [0,1) without distribution adapters, which are
// implementation-defined and would break cross-platform determinism.
double next_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

std::map<std::string, double> exact_distribution(const BasisEnsemble& state,
                                                 const std::vector<uint32_t>& measured) {
    for (uint32_t qb : measured)
        if (qb >= state.width) throw std::invalid_argument("measured qubit out of range");
    std::map<std::string, double> dist;
    const double p = 1.0 / static_cast<double>(state.states.size());
    for (word_t st : state.states) dist[project(st, measured)] += p;
    return dist;
}

std::map<std::string, double> exact_distribution(const DenseState& state,
                                                 const std::vector<uint32_t>& measured) {
    for (uint32_t qb : measured)
        if (qb >= state.width) throw std::invalid_argument("measured qubit out of range");
    std::map<std::string, double> dist;
    for (std::size_t i = 0; i < state.amps.size(); ++i) {
        const double p = std::norm(state.amps[i]);
        if (p > 0.0) dist[project(static_cast<word_t>(i), measured)] += p;
    }
    return dist;
}

Histogram sample(const std::map<std::string, double>& exact, uint64_t shots, uint64_t seed) {
    if (shots < 1) throw std::invalid_argument("sample: shots must be >= 1");
    // Cumulative table in key order (std::map keeps it canonical).
    std::vector<const std::string*> labels;
    std::vector<double> cumulative;
    double acc = 0.0;
    for (const auto& [label, p] : exact) {
        acc += p;
        labels.push_back(&label);
        cumulative.push_back(acc);
    }
    if (labels.empty()) throw std::invalid_argument("sample: empty distribution");
    cumulative.back() = 1.0; // guard against rounding at the top end

    std::mt19937_64 rng(seed);
    Histogram h;
    h.shots = shots;
    h.exact = exact;
    for (uint64_t s = 0; s < shots; ++s) {
        const double u = next_uniform(rng);
        std::size_t lo = 0, hi = cumulative.size() - 1;
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            if (u < cumulative[mid]) hi = mid;
            else lo = mid + 1;
        }
        ++h.counts[*labels[lo]];
    }
    return h;
}

} // namespace qmorph
