#include "infrank/thresholds.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <string>

#include "infrank/errors.hpp"
#include "infrank/random.hpp"
#include "text_format.hpp"

namespace infrank {

namespace {

bool in_unit(double v) { return v >= 0.0 && v <= 1.0; }

}  // namespace

ThresholdAssignment uniform_thresholds(const Graph& g, double theta) {
    if (!in_unit(theta)) throw ValidationError("uniform threshold " + format_real(theta) + " outside [0, 1]");
    ThresholdAssignment a;
    a.values.assign(g.node_count(), theta);
    a.provenance = {"uniform", "theta=" + format_real(theta), 0};
    return a;
}

ThresholdAssignment random_thresholds(const Graph& g, Interval iv, std::uint64_t seed) {
    if (!in_unit(iv.lo) || !in_unit(iv.hi)) {
        throw ValidationError("threshold interval [" + format_real(iv.lo) + ", " + format_real(iv.hi) +
                              "] leaves [0, 1]");
    }
    if (iv.lo > iv.hi) {
        throw ValidationError("inverted threshold interval: lo " + format_real(iv.lo) + " > hi " +
                              format_real(iv.hi));
    }
    if (iv.lo == iv.hi && iv.lo_exclusive) {
        throw ValidationError("empty threshold interval (" + format_real(iv.lo) + ", " + format_real(iv.hi) + "]");
    }

    ThresholdAssignment a;
    a.values.resize(g.node_count());
    Rng rng(seed);
    const double width = iv.hi - iv.lo;
    for (double& v : a.values) {
        // hi - width * u with u in [0, 1) lands in (lo, hi] up to rounding.
        do {
            v = iv.hi - width * uniform01(rng);
            v = std::max(v, iv.lo);
        } while (iv.lo_exclusive && v == iv.lo);
    }
    a.provenance = {"random", std::string(iv.lo_exclusive ? "(" : "[") + format_real(iv.lo) + "," +
                                  format_real(iv.hi) + "]",
                    seed};
    return a;
}

ThresholdAssignment thresholds_from_rank(const RankVector& rank, bool complement_values) {
    ThresholdAssignment a;
    a.values.resize(rank.size());
    for (std::size_t i = 0; i < rank.size(); ++i) {
        const double v = rank.values[i];
        if (!in_unit(v)) {
            throw ValidationError(std::string(label(rank.measure)) + " value " + format_real(v) + " at node " +
                                  std::to_string(i) + " outside [0, 1]; the measure is not normalized");
        }
        a.values[i] = complement_values ? 1.0 - v : v;
    }
    a.provenance = {"centrality",
                    std::string(complement_values ? "1-" : "") + std::string(label(rank.measure)) +
                        (rank.params.empty() ? "" : " " + rank.params),
                    0};
    return a;
}

ThresholdAssignment complement(const ThresholdAssignment& theta) {
    ThresholdAssignment a = theta;
    for (double& v : a.values) v = 1.0 - v;
    a.provenance.parameters = "1-(" + theta.provenance.parameters + ")";
    return a;
}

ThresholdScheme random_scheme(const Graph& g, Interval interval, std::uint64_t master_seed) {
    return [&g, interval, master_seed](std::size_t run) {
        return random_thresholds(g, interval, derive_seed(master_seed, seed_domain::kThresholdRun, run));
    };
}

ThresholdScheme uniform_scheme(const Graph& g, double theta) {
    return [assignment = uniform_thresholds(g, theta)](std::size_t) { return assignment; };
}

ThresholdSummary summarize(const ThresholdAssignment& theta) {
    ThresholdSummary s;
    if (theta.values.empty()) return s;
    s.min = std::numeric_limits<double>::infinity();
    s.max = -s.min;
    double sum = 0.0;
    for (double v : theta.values) {
        s.min = std::min(s.min, v);
        s.max = std::max(s.max, v);
        sum += v;
    }
    const auto n = static_cast<double>(theta.values.size());
    s.mean = sum / n;
    double sq = 0.0;
    for (double v : theta.values) sq += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(sq / n);
    return s;
}

void write_thresholds_csv(const Graph& g, const ThresholdAssignment& theta, std::ostream& out) {
    validate(theta, g.node_count());
    out << "original_id,theta\n";
    for (NodeId i = 0; i < g.node_count(); ++i) {
        out << g.original_id(i) << ',' << format_real(theta.values[i]) << '\n';
    }
}

ThresholdAssignment read_thresholds_csv(const Graph& g, std::istream& in) {
    const std::size_t n = g.node_count();
    ThresholdAssignment a;
    a.values.assign(n, std::numeric_limits<double>::quiet_NaN());
    std::vector<bool> seen(n, false);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line_no == 1 && line.rfind("original_id", 0) == 0) continue;

        const auto comma = line.find(',');
        if (comma == std::string::npos) throw ParseError("expected 'original_id,theta'", line_no);
        OriginalId id = 0;
        double value = 0.0;
        const char* first = line.data();
        const char* mid = first + comma;
        const char* last = first + line.size();
        if (auto [p, ec] = std::from_chars(first, mid, id); ec != std::errc{} || p != mid) {
            throw ParseError("non-integer node id", line_no);
        }
        if (auto [p, ec] = std::from_chars(mid + 1, last, value); ec != std::errc{} || p != last) {
            throw ParseError("non-numeric threshold", line_no);
        }
        const auto idx = g.index_of(id);
        if (!idx) throw ValidationError("line " + std::to_string(line_no) + ": unknown node id " + std::to_string(id));
        if (seen[*idx]) throw ValidationError("line " + std::to_string(line_no) + ": duplicate node id " + std::to_string(id));
        seen[*idx] = true;
        a.values[*idx] = value;
    }
    for (NodeId i = 0; i < n; ++i) {
        if (!seen[i]) throw ValidationError("no threshold for node id " + std::to_string(g.original_id(i)));
    }
    validate(a, n);
    a.provenance = {"file", "", 0};
    return a;
}

}  // namespace infrank
