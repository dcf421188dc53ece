#include "ecgdn/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ecgdn/errors.hpp"

namespace ecgdn {

namespace {
void require_same_length(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw DataError("length mismatch: " + std::to_string(x.size()) + " vs " +
                        std::to_string(y.size()));
}

bool all_zero(std::span<const double> x) {
    return std::all_of(x.begin(), x.end(), [](double v) { return v == 0.0; });
}
} // namespace

double signal_power(std::span<const double> x) {
    if (x.empty()) throw DataError("signal_power of empty sequence");
    double s = 0;
    for (double v : x) s += v * v;
    return s;
}

double signal_power_log(std::span<const double> x) {
    if (x.empty()) throw DataError("signal_power_log of empty sequence");
    if (all_zero(x)) throw DataError("signal_power_log requires a nonzero element");
    return 10.0 * std::log10(signal_power(x));
}

double snr(std::span<const double> x, std::span<const double> y) {
    require_same_length(x, y);
    return signal_power_log(x) - signal_power_log(y);
}

double ssd(std::span<const double> x, std::span<const double> y) {
    require_same_length(x, y);
    double s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double d = x[i] - y[i];
        s += d * d;
    }
    return s;
}

double mad(std::span<const double> x, std::span<const double> y) {
    require_same_length(x, y);
    if (x.empty()) throw DataError("mad of empty sequences");
    double m = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        m = std::max(m, std::abs(x[i] - y[i]));
    return m;
}

double cosine_distance(std::span<const double> x, std::span<const double> y) {
    require_same_length(x, y);
    if (all_zero(x) || all_zero(y))
        throw DataError("cosine_distance of a zero vector");
    double dot = 0, nx = 0, ny = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        dot += x[i] * y[i];
        nx += x[i] * x[i];
        ny += y[i] * y[i];
    }
    return 1.0 - dot / (std::sqrt(nx) * std::sqrt(ny));
}

double noise_removed_fraction(double metric_added, double metric_cleaned) {
    if (!(metric_added > 0))
        throw DataError("noise_removed_fraction requires added metric > 0");
    return (metric_added - metric_cleaned) / metric_added;
}

MetricSummary summarize_stats(std::span<const double> values) {
    if (values.empty()) throw DataError("summarize_stats of empty input");

    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();

    auto quantile = [&](double q) {
        double pos = q * static_cast<double>(n - 1);
        std::size_t lo = static_cast<std::size_t>(pos);
        std::size_t hi = std::min(lo + 1, n - 1);
        double frac = pos - static_cast<double>(lo);
        return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
    };

    MetricSummary s;
    double sum = 0;
    for (double v : sorted) sum += v;
    s.mean = sum / static_cast<double>(n);
    double var = 0;
    if (n > 1) {
        for (double v : sorted) var += (v - s.mean) * (v - s.mean);
        var /= static_cast<double>(n - 1);
    }
    s.std_dev = std::sqrt(var);
    s.min = sorted.front();
    s.max = sorted.back();
    s.q25 = quantile(0.25);
    s.q50 = quantile(0.50);
    s.q75 = quantile(0.75);
    return s;
}

} // namespace ecgdn
