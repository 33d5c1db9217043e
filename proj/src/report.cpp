#include "kcenter/report.hpp"

#include <sstream>

#include <json.hpp>

#include "kcenter/scaling.hpp"

namespace kcenter {

std::string format_ratio(std::int64_t cost, std::int64_t oracle_cost) {
    if (oracle_cost == 0)
        return cost == 0 ? "1.000000" : "inf";
    // round(cost/oracle * 1e6) half up, rendered with six places
    __int128 scaled = static_cast<__int128>(cost) * 1000000;
    __int128 q = (scaled + oracle_cost / 2) / oracle_cost;
    std::int64_t fixed = static_cast<std::int64_t>(q);
    std::string mant = std::to_string(fixed % 1000000);
    mant.insert(0, 6 - mant.size(), '0');
    return std::to_string(fixed / 1000000) + "." + mant;
}

std::string render_table(const RunReport& r, const LengthScale&) {
    std::ostringstream out;
    out << "instance    " << r.instance << " (n=" << r.n << ", m=" << r.m << ")\n";
    out << "algorithm   " << r.algorithm << (r.fallback ? " (fallback)" : "") << "\n";
    if (r.delta)
        out << "delta       " << *r.delta << "\n";
    out << "k           " << r.k << "\n";
    out << "cost        " << r.cost << "\n";
    out << "centers    ";
    for (int c : r.centers)
        out << " " << c;
    out << "\n";
    if (r.oracle_cost)
        out << "oracle      " << *r.oracle_cost << "\n";
    if (r.ratio)
        out << "ratio       " << *r.ratio << "\n";
    if (r.guesses)
        out << "guesses     " << *r.guesses << "\n";
    if (r.accepted_scale) {
        out << "scale       r=" << r.accepted_scale->scale
            << " hubs=" << r.accepted_scale->hubs
            << " sparsity=" << r.accepted_scale->sparsity
            << " clusters=" << r.accepted_scale->clusters << "\n";
    }
    if (r.parts) {
        out << "parts       " << r.parts->size() << "\n";
        for (std::size_t i = 0; i < r.parts->size(); ++i) {
            out << "  part " << i << "  ";
            for (int v : (*r.parts)[i])
                out << " " << v;
            out << "\n";
        }
    }
    if (r.wall_ms)
        out << "wall_ms     " << *r.wall_ms << "\n";
    return out.str();
}

std::string render_json(const RunReport& r, const LengthScale& scale) {
    nlohmann::ordered_json j;
    j["schema"] = RunReport::kSchemaVersion;
    j["instance"] = {{"path", r.instance}, {"n", r.n}, {"m", r.m}};
    j["algorithm"] = r.algorithm;
    j["k"] = r.k;
    if (r.delta)
        j["delta"] = *r.delta;
    j["cost"] = r.cost;
    j["centers"] = r.centers;
    j["fallback"] = r.fallback;
    if (r.oracle_cost)
        j["oracle_cost"] = *r.oracle_cost;
    if (r.ratio)
        j["ratio"] = *r.ratio;
    if (r.guesses)
        j["guesses"] = *r.guesses;
    if (r.accepted_scale) {
        j["accepted_scale"] = {{"r", r.accepted_scale->scale},
                               {"hubs", r.accepted_scale->hubs},
                               {"sparsity", r.accepted_scale->sparsity},
                               {"clusters", r.accepted_scale->clusters}};
    }
    if (!r.scale_log.empty()) {
        nlohmann::ordered_json log = nlohmann::ordered_json::array();
        for (const ScaleStats& s : r.scale_log) {
            log.push_back({{"r", scale.format_dist(s.r)},
                           {"hubs", s.hub_count},
                           {"sparsity", s.sparsity},
                           {"clusters", s.cluster_count},
                           {"skipped", s.skipped},
                           {"over_cap", s.over_cap},
                           {"guesses", s.guesses},
                           {"accepted", s.accepted}});
        }
        j["scales"] = std::move(log);
    }
    if (r.parts)
        j["parts"] = *r.parts;
    if (r.wall_ms)
        j["wall_ms"] = *r.wall_ms;
    return j.dump(2) + "\n";
}

} // namespace kcenter
