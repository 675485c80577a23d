#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "infrank/errors.hpp"
#include "infrank/experiment.hpp"

namespace infrank {

namespace {

using Json = nlohmann::ordered_json;

std::string_view normalization_name(BetweennessNormalization n) {
    switch (n) {
        case BetweennessNormalization::OrderedPairs: return "ordered";
        case BetweennessNormalization::UnorderedPairs: return "unordered";
        case BetweennessNormalization::None: return "none";
    }
    return "?";
}

BetweennessNormalization parse_normalization(const std::string& s) {
    if (s == "ordered") return BetweennessNormalization::OrderedPairs;
    if (s == "unordered") return BetweennessNormalization::UnorderedPairs;
    if (s == "none") return BetweennessNormalization::None;
    throw ValidationError("unknown betweenness normalization '" + s + "'");
}

ValuesCut parse_values_cut(const std::string& s) {
    if (s == "ceil") return ValuesCut::Ceil;
    if (s == "floor") return ValuesCut::Floor;
    throw ValidationError("unknown values cut '" + s + "'");
}

ActivationRule parse_rule(const std::string& s) {
    if (s == ">=") return ActivationRule::AtLeast;
    if (s == ">") return ActivationRule::Exceeds;
    throw ValidationError("unknown activation rule '" + s + "'");
}

double parse_number(std::string_view text) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    }
    return v;
}

}  // namespace

std::vector<double> parse_theta_list(std::string_view text) {
    std::vector<double> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const std::string_view item = text.substr(0, comma);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);

        const auto c1 = item.find(':');
        if (c1 == std::string_view::npos) {
            out.push_back(parse_number(item));
            continue;
        }
        const auto c2 = item.find(':', c1 + 1);
        if (c2 == std::string_view::npos) {
            throw std::invalid_argument("range must be lo:hi:step, got '" + std::string(item) + "'");
        }
        const double lo = parse_number(item.substr(0, c1));
        const double hi = parse_number(item.substr(c1 + 1, c2 - c1 - 1));
        const double step = parse_number(item.substr(c2 + 1));
        if (!(step > 0.0) || hi < lo) throw std::invalid_argument("bad range '" + std::string(item) + "'");
        // Snap to 1e-9 so 0.2 + 5 * 0.02 prints as 0.3.
        for (std::size_t k = 0;; ++k) {
            const double v = std::round((lo + static_cast<double>(k) * step) * 1e9) / 1e9;
            if (v > hi + 1e-12) break;
            out.push_back(v);
        }
    }
    if (out.empty()) throw std::invalid_argument("empty theta list");
    return out;
}

std::string config_to_json(const ExperimentConfig& c) {
    Json j;
    j["command"] = command_name(c.command);
    j["graph"] = c.graph_path;
    j["network"] = c.network;
    j["directed"] = c.directed;
    j["weighted"] = c.weighted;
    j["theta"] = c.thetas;
    j["theta_file"] = c.theta_file;
    if (c.interval) {
        j["interval"] = {{"lo", c.interval->lo}, {"hi", c.interval->hi}, {"lo_exclusive", c.interval->lo_exclusive}};
    } else {
        j["interval"] = nullptr;
    }
    j["runs"] = c.runs;
    j["top_on_mean"] = c.top_on_mean;
    j["measure"] = c.measure ? Json(std::string(label(*c.measure))) : Json(nullptr);
    j["complement"] = c.complement;
    j["pagerank"] = {{"alpha", c.pagerank.alpha}, {"tol", c.pagerank.tol}, {"max_iter", c.pagerank.max_iter}};
    j["icr"] = {{"p", c.icr.p}, {"runs", c.icr.runs}};
    j["betweenness_normalization"] = normalization_name(c.betweenness.normalization);
    j["values_cut"] = c.metrics.values_cut == ValuesCut::Ceil ? "ceil" : "floor";
    j["activation"] = c.metrics.rule == ActivationRule::AtLeast ? ">=" : ">";
    j["fltr_base_theta"] = c.fltr_base_theta;
    j["seed"] = c.seed;
    j["out"] = c.out;
    j["threads"] = c.threads;
    return j.dump(2);
}

ExperimentConfig config_from_json(const std::string& text, ExperimentConfig c) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON config: ") + e.what(), 1);
    }
    if (j.is_object() && j.contains("config") && j["config"].is_object()) j = j["config"];
    if (!j.is_object()) throw ValidationError("config must be a JSON object");

    try {
        for (const auto& [key, value] : j.items()) {
            if (key == "command") {
                const auto cmd = parse_command(value.get<std::string>());
                if (!cmd) throw ValidationError("unknown command '" + value.get<std::string>() + "'");
                c.command = *cmd;
            } else if (key == "graph") {
                c.graph_path = value.get<std::string>();
            } else if (key == "network") {
                c.network = value.get<std::string>();
            } else if (key == "directed") {
                c.directed = value.get<bool>();
            } else if (key == "weighted") {
                c.weighted = value.get<bool>();
            } else if (key == "theta") {
                c.thetas = value.is_array() ? value.get<std::vector<double>>() : std::vector<double>{value.get<double>()};
            } else if (key == "theta_file") {
                c.theta_file = value.get<std::string>();
            } else if (key == "interval") {
                if (value.is_null()) {
                    c.interval.reset();
                } else {
                    Interval iv;
                    iv.lo = value.at("lo").get<double>();
                    iv.hi = value.at("hi").get<double>();
                    iv.lo_exclusive = value.value("lo_exclusive", iv.lo == 0.0);
                    c.interval = iv;
                }
            } else if (key == "runs") {
                c.runs = value.get<std::size_t>();
            } else if (key == "top_on_mean") {
                c.top_on_mean = value.get<bool>();
            } else if (key == "measure") {
                if (value.is_null()) {
                    c.measure.reset();
                } else {
                    c.measure = parse_measure(value.get<std::string>());
                    if (!c.measure) throw ValidationError("unknown measure '" + value.get<std::string>() + "'");
                }
            } else if (key == "complement") {
                c.complement = value.get<bool>();
            } else if (key == "pagerank") {
                c.pagerank.alpha = value.value("alpha", c.pagerank.alpha);
                c.pagerank.tol = value.value("tol", c.pagerank.tol);
                c.pagerank.max_iter = value.value("max_iter", c.pagerank.max_iter);
            } else if (key == "icr") {
                c.icr.p = value.value("p", c.icr.p);
                c.icr.runs = value.value("runs", c.icr.runs);
            } else if (key == "betweenness_normalization") {
                c.betweenness.normalization = parse_normalization(value.get<std::string>());
            } else if (key == "values_cut") {
                c.metrics.values_cut = parse_values_cut(value.get<std::string>());
            } else if (key == "activation") {
                c.metrics.rule = parse_rule(value.get<std::string>());
            } else if (key == "fltr_base_theta") {
                c.fltr_base_theta = value.get<double>();
            } else if (key == "seed") {
                c.seed = value.get<std::uint64_t>();
            } else if (key == "out") {
                c.out = value.get<std::string>();
            } else if (key == "threads") {
                c.threads = value.get<unsigned>();
            } else {
                throw ValidationError("unknown config key '" + key + "'");
            }
        }
    } catch (const Json::exception& e) {
        throw ValidationError(std::string("bad config value: ") + e.what());
    }
    return c;
}

ExperimentConfig load_config_file(const std::filesystem::path& path, ExperimentConfig base) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open config file '" + path.string() + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return config_from_json(text.str(), std::move(base));
}

}  // namespace infrank
