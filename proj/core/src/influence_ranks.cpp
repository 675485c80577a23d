#include <algorithm>
#include <string>
#include <vector>

#include "infrank/centrality.hpp"
#include "infrank/errors.hpp"
#include "infrank/random.hpp"

namespace infrank {

std::string_view label(Measure m) noexcept {
    switch (m) {
        case Measure::Betweenness: return "Btwn";
        case Measure::PageRank: return "PgR";
        case Measure::ICR: return "ICR";
        case Measure::LTR: return "LTR";
        case Measure::FLTR: return "FLTR";
    }
    return "?";
}

std::optional<Measure> parse_measure(std::string_view text) noexcept {
    for (Measure m : {Measure::Betweenness, Measure::PageRank, Measure::ICR, Measure::LTR, Measure::FLTR}) {
        const std::string_view name = label(m);
        if (text == name) return m;
        if (text.size() == name.size() &&
            std::equal(text.begin(), text.end(), name.begin(), [](char a, char b) {
                return a == (b >= 'A' && b <= 'Z' ? static_cast<char>(b - 'A' + 'a') : b);
            })) {
            return m;
        }
    }
    return std::nullopt;
}

namespace {

RankVector from_counts(Measure measure, std::vector<std::uint64_t> counts, std::uint64_t denominator) {
    RankVector r;
    r.measure = measure;
    r.values.resize(counts.size());
    const auto d = static_cast<double>(denominator);
    for (std::size_t i = 0; i < counts.size(); ++i) r.values[i] = static_cast<double>(counts[i]) / d;
    r.exact = ExactRatio{std::move(counts), denominator};
    return r;
}

enum class SeedNeighborhood { All, Forward };

RankVector lt_rank(const Graph& g, const ThresholdAssignment& theta, Parallelism par, ActivationRule rule,
                   SeedNeighborhood which) {
    const LinearThreshold engine(g, theta, rule);
    const std::size_t n = g.node_count();
    const unsigned workers = worker_count(n, par);
    std::vector<LinearThreshold::Workspace> ws(workers);
    std::vector<std::vector<NodeId>> seeds(workers);
    std::vector<std::uint64_t> counts(n, 0);

    parallel_for(n, par, [&](std::size_t idx, unsigned w) {
        const auto i = static_cast<NodeId>(idx);
        const auto nbrs = which == SeedNeighborhood::All ? g.neighbors(i) : g.out_neighbors(i);
        auto& s = seeds[w];
        s.assign(nbrs.begin(), nbrs.end());
        s.push_back(i);
        counts[i] = engine.spread_size(s, ws[w]);
    });

    RankVector r = from_counts(which == SeedNeighborhood::All ? Measure::LTR : Measure::FLTR,
                               std::move(counts), n);
    r.params = theta.provenance.scheme + ":" + theta.provenance.parameters;
    return r;
}

}  // namespace

RankVector icr(const Graph& g, IcrOptions options, Parallelism par) {
    if (options.runs == 0) throw ValidationError("ICR needs at least one run");
    const IndependentCascade engine(g, options.p);
    const std::size_t n = g.node_count();
    const unsigned workers = worker_count(n, par);
    std::vector<IndependentCascade::Workspace> ws(workers);
    std::vector<std::uint64_t> totals(n, 0);

    parallel_for(n, par, [&](std::size_t idx, unsigned w) {
        const auto u = static_cast<NodeId>(idx);
        Rng rng(derive_seed(options.seed, seed_domain::kIcr, u));
        const NodeId seed[] = {u};
        std::uint64_t sum = 0;
        for (std::size_t run = 0; run < options.runs; ++run) sum += engine.spread_size(seed, rng, ws[w]);
        totals[u] = sum;
    });

    const std::uint64_t best = *std::max_element(totals.begin(), totals.end());
    RankVector r = from_counts(Measure::ICR, std::move(totals), best);
    r.params = "p=" + std::to_string(options.p) + " runs=" + std::to_string(options.runs) +
               " seed=" + std::to_string(options.seed);
    return r;
}

RankVector ltr(const Graph& g, const ThresholdAssignment& theta, Parallelism par, ActivationRule rule) {
    return lt_rank(g, theta, par, rule, SeedNeighborhood::All);
}

RankVector fltr(const Graph& g, const ThresholdAssignment& theta, Parallelism par, ActivationRule rule) {
    return lt_rank(g, theta, par, rule, SeedNeighborhood::Forward);
}

RankVector fltr_sampled(const Graph& g, const ThresholdScheme& scheme, std::size_t runs, Parallelism par,
                        ActivationRule rule, const RunObserver& observer) {
    if (runs == 0) throw ValidationError("sampled FLTR needs at least one run");
    const std::size_t n = g.node_count();
    std::vector<std::uint64_t> sums(n, 0);
    std::string params;

    for (std::size_t run = 0; run < runs; ++run) {
        const ThresholdAssignment theta = scheme(run);
        const RankVector one = fltr(g, theta, par, rule);
        for (std::size_t i = 0; i < n; ++i) sums[i] += one.exact->numerators[i];
        if (run == 0) params = theta.provenance.scheme + ":" + theta.provenance.parameters;
        if (observer) observer(run, theta, one);
    }

    RankVector r = from_counts(Measure::FLTR, std::move(sums), static_cast<std::uint64_t>(runs) * n);
    r.params = params + " runs=" + std::to_string(runs);
    return r;
}

}  // namespace infrank
