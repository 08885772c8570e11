#include "adathresh/binarize.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "adathresh/localstats.hpp"

namespace adathresh
{

std::string_view to_string(Method method) noexcept
{
	switch (method)
	{
	case Method::Proposed: return "proposed";
	case Method::Niblack: return "niblack";
	case Method::Sauvola: return "sauvola";
	case Method::Bernsen: return "bernsen";
	}
	return "unknown";
}

Method parse_method(std::string_view name)
{
	for (Method m : all_methods)
	{
		if (to_string(m) == name)
		{
			return m;
		}
	}
	throw ValidationError("unknown method '" + std::string(name) +
	                      "' (expected proposed, niblack, sauvola or bernsen)");
}

MethodParams MethodParams::defaults(Method method)
{
	MethodParams p;
	p.method = method;
	switch (method)
	{
	case Method::Proposed:
		p.window = 15;
		p.k = 0.06;
		break;
	case Method::Niblack:
		p.window = 15;
		p.k = -0.2;
		break;
	case Method::Sauvola:
		p.window = 15;
		p.k = 0.34;
		break;
	case Method::Bernsen:
		p.window = 31;
		p.k = 0.0;
		break;
	}
	return p;
}

void MethodParams::validate() const
{
	if (window < 3 || window % 2 == 0)
	{
		throw ValidationError("window size must be odd and >= 3, got " + std::to_string(window));
	}
	if (!std::isfinite(k))
	{
		throw ValidationError("bias k must be finite");
	}
	if (method == Method::Proposed && (k < 0.0 || k > 1.0))
	{
		throw ValidationError("proposed method bias k must lie in [0,1], got " + std::to_string(k));
	}
	if (!(sauvola_r > 0.0) || !std::isfinite(sauvola_r))
	{
		throw ValidationError("sauvola R must be positive, got " + std::to_string(sauvola_r));
	}
	if (!(bernsen_contrast_min >= 0.0 && bernsen_contrast_min <= 1.0))
	{
		throw ValidationError("bernsen contrast floor must lie in [0,1], got " +
		                      std::to_string(bernsen_contrast_min));
	}
}

namespace
{

void require_method(const MethodParams& params, Method expected)
{
	params.validate();
	if (params.method != expected)
	{
		throw ValidationError("parameters are for " + std::string(to_string(params.method)) + ", expected " +
		                      std::string(to_string(expected)));
	}
}

template <typename Acc>
void require_matching(const NormImage& img, const IntegralImage<Acc>& g)
{
	if (img.width() != g.width() || img.height() != g.height())
	{
		throw ValidationError("integral image does not match source dimensions");
	}
}

template <typename Acc>
ThresholdMap proposed_impl(const NormImage& img, const IntegralImage<Acc>& g, const MethodParams& params)
{
	require_method(params, Method::Proposed);
	require_matching(img, g);
	const WindowSpec win = params.window_spec();

	RealPlane values(img.width(), img.height());
	for (int row = 0; row < img.height(); ++row)
	{
		for (int col = 0; col < img.width(); ++col)
		{
			const double intensity = img(row, col);
			const double mean = local_mean_unit(g, row, col, win);
			// The window always holds its own centre, so I - m < 1.
			assert(1.0 - (intensity - mean) > 0.0);
			values.at(row, col) = proposed_threshold(intensity, mean, params.k);
		}
	}
	return {std::move(values), std::nullopt};
}

template <typename Acc>
RealPlane mean_map_impl(const IntegralImage<Acc>& g, const WindowSpec& win)
{
	RealPlane means(g.width(), g.height());
	for (int row = 0; row < g.height(); ++row)
	{
		for (int col = 0; col < g.width(); ++col)
		{
			means.at(row, col) = local_mean_unit(g, row, col, win);
		}
	}
	return means;
}

} // namespace

ThresholdMap threshold_proposed(const NormImage& img, const IntegerIntegral& g, const MethodParams& params)
{
	return proposed_impl(img, g, params);
}

ThresholdMap threshold_proposed(const NormImage& img, const RealIntegral& g, const MethodParams& params)
{
	return proposed_impl(img, g, params);
}

ThresholdMap threshold_niblack(const NormImage& img, const MethodParams& params)
{
	require_method(params, Method::Niblack);
	const WindowSpec win = params.window_spec();
	RealPlane values(img.width(), img.height());
	for (int row = 0; row < img.height(); ++row)
	{
		for (int col = 0; col < img.width(); ++col)
		{
			const WindowStats s = naive_window_stats(img, row, col, win);
			values.at(row, col) = niblack_threshold(s.mean, s.stddev, params.k);
		}
	}
	return {std::move(values), std::nullopt};
}

ThresholdMap threshold_sauvola(const NormImage& img, const MethodParams& params)
{
	require_method(params, Method::Sauvola);
	const WindowSpec win = params.window_spec();
	RealPlane values(img.width(), img.height());
	for (int row = 0; row < img.height(); ++row)
	{
		for (int col = 0; col < img.width(); ++col)
		{
			const WindowStats s = naive_window_stats(img, row, col, win);
			values.at(row, col) = sauvola_threshold(s.mean, s.stddev, params.k, params.sauvola_r);
		}
	}
	return {std::move(values), std::nullopt};
}

ThresholdMap threshold_bernsen(const NormImage& img, const MethodParams& params)
{
	require_method(params, Method::Bernsen);
	const WindowSpec win = params.window_spec();
	// Normalized differences of 8-bit levels carry ~1e-16 rounding; without
	// the slack a contrast of exactly 15 levels could land just below 15/255.
	const double floor = params.bernsen_contrast_min - 1e-12;

	RealPlane values(img.width(), img.height());
	std::vector<std::uint8_t> flags(img.size(), 0);
	for (int row = 0; row < img.height(); ++row)
	{
		for (int col = 0; col < img.width(); ++col)
		{
			const WindowRange r = naive_window_range(img, row, col, win);
			values.at(row, col) = bernsen_threshold(r.min, r.max);
			if (r.max - r.min < floor)
			{
				flags[static_cast<std::size_t>(row) * static_cast<std::size_t>(img.width()) +
				      static_cast<std::size_t>(col)] = 1;
			}
		}
	}
	return {std::move(values), Plane<std::uint8_t>(img.width(), img.height(), std::move(flags))};
}

RealPlane mean_map(const RealIntegral& g, const WindowSpec& win)
{
	return mean_map_impl(g, win);
}

RealPlane mean_map(const IntegerIntegral& g, const WindowSpec& win)
{
	return mean_map_impl(g, win);
}

BinaryImage apply_threshold(const NormImage& img, const ThresholdMap& tmap)
{
	if (!img.same_shape(tmap.values))
	{
		throw ValidationError("threshold map is " + std::to_string(tmap.width()) + "x" +
		                      std::to_string(tmap.height()) + " but image is " + std::to_string(img.width()) +
		                      "x" + std::to_string(img.height()));
	}
	if (tmap.low_contrast_mask && !img.same_shape(*tmap.low_contrast_mask))
	{
		throw ValidationError("low-contrast mask does not match image dimensions");
	}

	BinaryImage out(img.width(), img.height());
	for (int row = 0; row < img.height(); ++row)
	{
		for (int col = 0; col < img.width(); ++col)
		{
			const double t = tmap(row, col);
			Label label;
			if (tmap.low_contrast(row, col))
			{
				label = t >= 0.5 ? Label::Background : Label::Foreground;
			}
			else
			{
				label = img(row, col) <= t ? Label::Foreground : Label::Background;
			}
			out.set(row, col, label);
		}
	}
	return out;
}

namespace
{

ThresholdMap threshold_map_for(const GrayImage& img, const NormImage& norm, const MethodParams& params)
{
	params.validate();
	switch (params.method)
	{
	case Method::Proposed: return threshold_proposed(norm, IntegerIntegral(img), params);
	case Method::Niblack: return threshold_niblack(norm, params);
	case Method::Sauvola: return threshold_sauvola(norm, params);
	case Method::Bernsen: return threshold_bernsen(norm, params);
	}
	throw ValidationError("unknown method");
}

} // namespace

ThresholdMap compute_threshold_map(const GrayImage& img, const MethodParams& params)
{
	return threshold_map_for(img, normalize(img), params);
}

BinaryImage binarize(const GrayImage& img, const MethodParams& params)
{
	const NormImage norm = normalize(img);
	return apply_threshold(norm, threshold_map_for(img, norm, params));
}

BinaryImage binarize_proposed_fused(const GrayImage& img, const MethodParams& params)
{
	require_method(params, Method::Proposed);
	const WindowSpec win = params.window_spec();
	const IntegerIntegral g(img);

	std::vector<std::uint8_t> labels(img.size());
	std::size_t i = 0;
	for (int row = 0; row < img.height(); ++row)
	{
		for (int col = 0; col < img.width(); ++col, ++i)
		{
			const double intensity = static_cast<double>(img(row, col)) / 255.0;
			const double t = proposed_threshold(intensity, local_mean_unit(g, row, col, win), params.k);
			labels[i] = static_cast<std::uint8_t>(intensity <= t ? Label::Foreground : Label::Background);
		}
	}
	return BinaryImage(img.width(), img.height(), std::move(labels));
}

GrayImage quantize_threshold_map(const ThresholdMap& tmap)
{
	std::vector<std::uint8_t> levels(tmap.values.size());
	std::transform(tmap.values.pixels().begin(), tmap.values.pixels().end(), levels.begin(), [](double t) {
		return static_cast<std::uint8_t>(std::clamp(std::lround(t * 255.0), 0L, 255L));
	});
	return GrayImage(tmap.width(), tmap.height(), std::move(levels));
}

} // namespace adathresh
