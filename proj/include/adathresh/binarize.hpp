#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "adathresh/integral.hpp"
#include "adathresh/raster.hpp"

namespace adathresh
{

enum class Method
{
	Proposed, // local mean and mean deviation via the integral image
	Niblack,
	Sauvola,
	Bernsen,
};

inline constexpr std::array<Method, 4> all_methods = {Method::Proposed, Method::Niblack, Method::Sauvola,
                                                      Method::Bernsen};

std::string_view to_string(Method method) noexcept;

/// Parses a lower-case method name; throws ValidationError otherwise.
Method parse_method(std::string_view name);

/// How Bernsen classifies a window whose contrast is below the floor.
enum class LowContrastPolicy
{
	ByThresholdMidpoint, // background iff T >= 0.5
};

/// Method selector and its constants, all in normalized [0, 1] units.
struct MethodParams
{
	Method method = Method::Proposed;
	int window = 15;
	double k = 0.06;
	double sauvola_r = 0.5;               // 128 on the 8-bit scale
	double bernsen_contrast_min = 15.0 / 255.0;
	LowContrastPolicy bernsen_low_contrast_policy = LowContrastPolicy::ByThresholdMidpoint;

	/// Per-method defaults: proposed w=15 k=0.06, niblack w=15 k=-0.2,
	/// sauvola w=15 k=0.34 R=0.5, bernsen w=31.
	static MethodParams defaults(Method method);

	/// Throws ValidationError naming the first violated constraint.
	void validate() const;

	WindowSpec window_spec() const { return WindowSpec(window); }
};

/// Materialized per-pixel thresholds. Bernsen additionally marks the
/// windows whose contrast fell below the floor.
struct ThresholdMap
{
	RealPlane values;
	std::optional<Plane<std::uint8_t>> low_contrast_mask;

	int width() const noexcept { return values.width(); }
	int height() const noexcept { return values.height(); }
	double operator()(int row, int col) const noexcept { return values(row, col); }
	bool low_contrast(int row, int col) const noexcept
	{
		return low_contrast_mask && (*low_contrast_mask)(row, col) != 0;
	}
};

// Per-pixel threshold formulas. Inputs are window statistics.

/// T = m * (1 + k * (d / (1 - d) - 1)) with mean deviation d = I - m.
inline double proposed_threshold(double intensity, double mean, double k) noexcept
{
	const double deviation = intensity - mean;
	return mean * (1.0 + k * (deviation / (1.0 - deviation) - 1.0));
}

inline double niblack_threshold(double mean, double stddev, double k) noexcept
{
	return mean + k * stddev;
}

inline double sauvola_threshold(double mean, double stddev, double k, double r) noexcept
{
	return mean * (1.0 + k * (stddev / r - 1.0));
}

inline double bernsen_threshold(double min, double max) noexcept
{
	return 0.5 * (max + min);
}

/// Proposed method. Needs only the integral-image local mean; no variance
/// is computed. An integer table must come from the 8-bit image that img
/// was normalized from.
ThresholdMap threshold_proposed(const NormImage& img, const IntegerIntegral& g, const MethodParams& params);
ThresholdMap threshold_proposed(const NormImage& img, const RealIntegral& g, const MethodParams& params);

// The baselines use naive O(w^2) window statistics.
ThresholdMap threshold_niblack(const NormImage& img, const MethodParams& params);
ThresholdMap threshold_sauvola(const NormImage& img, const MethodParams& params);
ThresholdMap threshold_bernsen(const NormImage& img, const MethodParams& params);

/// Local mean of every pixel from the integral image, in [0, 1].
RealPlane mean_map(const RealIntegral& g, const WindowSpec& win);
RealPlane mean_map(const IntegerIntegral& g, const WindowSpec& win);

/// b = 0 if I <= T else 1. Low-contrast Bernsen pixels are background iff
/// T >= 0.5.
BinaryImage apply_threshold(const NormImage& img, const ThresholdMap& tmap);

/// Threshold map for any method, starting from the 8-bit image.
ThresholdMap compute_threshold_map(const GrayImage& img, const MethodParams& params);

/// normalize -> statistics -> threshold map -> apply.
BinaryImage binarize(const GrayImage& img, const MethodParams& params);

/// Proposed method without the intermediate normalized image or threshold
/// map: thresholds are evaluated and applied pixel by pixel straight from
/// the integer table. Same arithmetic as binarize, so the output is
/// bit-identical. Used by the benchmark harness.
BinaryImage binarize_proposed_fused(const GrayImage& img, const MethodParams& params);

/// Threshold map quantized to 8 bits for inspection.
GrayImage quantize_threshold_map(const ThresholdMap& tmap);

} // namespace adathresh
