#include "modzeta/trend.hpp"

#include <cmath>
#include <stdexcept>

namespace modzeta {

std::string to_string(Trend t) {
    switch (t) {
        case Trend::Convergent: return "convergent-trend";
        case Trend::Divergent: return "divergent-trend";
        default: return "inconclusive";
    }
}

Trend classify_partial_sums(std::span<const std::pair<double, double>> ps,
                            const TrendRule& rule) {
    if (ps.size() < 3)
        throw std::invalid_argument("classify_partial_sums: need at least 3 grid points");

    std::vector<double> inc, rate;
    for (std::size_t i = 1; i < ps.size(); ++i) {
        const double d = ps[i].second - ps[i - 1].second;
        inc.push_back(d < 0 ? 0.0 : d);
        const double l = std::log(std::log(ps[i].first)) - std::log(std::log(ps[i - 1].first));
        rate.push_back(l > 0 ? inc.back() / l : 0.0);
    }

    bool shrinking = true;
    for (std::size_t i = 1; i < inc.size(); ++i) {
        if (inc[i] > std::max(rule.shrink_factor * inc[i - 1], rule.zero_floor)) {
            shrinking = false;
            break;
        }
    }
    if (shrinking) return Trend::Convergent;

    const double r_first = rate.front();
    const double r_last = rate.back();
    if (r_last >= rule.divergent_min_rate && r_last >= rule.divergent_keep * r_first)
        return Trend::Divergent;

    return Trend::Inconclusive;
}

} // namespace modzeta
