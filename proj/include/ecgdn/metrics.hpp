#ifndef ECGDN_METRICS_HPP
#define ECGDN_METRICS_HPP

#include <span>
#include <vector>

namespace ecgdn {

// Seven-column statistical summary row (matches the report table schema:
// Mean, Std Dev, Min, 25%, 50%, 75%, Max).
struct MetricSummary {
    double mean = 0;
    double std_dev = 0;
    double min = 0;
    double q25 = 0;
    double q50 = 0;
    double q75 = 0;
    double max = 0;

    bool operator==(const MetricSummary&) const = default;
};

// Sum of squares (not the mean). The log variant is 10*log10 of it and
// requires at least one nonzero element.
double signal_power(std::span<const double> x);
double signal_power_log(std::span<const double> x);

// 10*log10(power(x) / power(y)). Note the denominator is the noisy signal's
// power, not the noise's own power.
double snr(std::span<const double> x, std::span<const double> y);

double ssd(std::span<const double> x, std::span<const double> y);
double mad(std::span<const double> x, std::span<const double> y);

// 1 - x.y / (|x| |y|), in [0, 2]. Both vectors must be nonzero.
double cosine_distance(std::span<const double> x, std::span<const double> y);

// (added - cleaned) / added. 1 = perfect removal, 0 = no change, negative
// = the denoiser made things worse. Requires added > 0.
double noise_removed_fraction(double metric_added, double metric_cleaned);

// Sample standard deviation (n-1 denominator, 0 when n = 1); quartiles by
// linear interpolation between order statistics.
MetricSummary summarize_stats(std::span<const double> values);

} // namespace ecgdn

#endif
