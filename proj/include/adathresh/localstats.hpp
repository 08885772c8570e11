#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "adathresh/integral.hpp"
#include "adathresh/raster.hpp"

namespace adathresh
{

struct WindowStats
{
	double mean;
	double stddev; // population: divides by count
	double min;
	double max;
	int count;
};

/// Number of standard deviations computed by naive_window_stats since the
/// last reset, across all threads. The proposed threshold path must leave
/// this untouched.
std::uint64_t stddev_evaluations() noexcept;
void reset_stddev_evaluations() noexcept;

namespace detail
{
void note_stddev_evaluation() noexcept;
}

/// Statistics of the border-clamped w x w window centred at (row, col),
/// computed by direct double loops over the window.
///
/// This is O(w^2) per call on purpose. The Niblack, Sauvola and Bernsen
/// baselines run on it so that their cost grows with the window, and the
/// integral-image tests use it as the brute-force reference.
template <typename T>
WindowStats naive_window_stats(const Plane<T>& img, int row, int col, const WindowSpec& win)
{
	if (!img.contains(row, col))
	{
		throw std::out_of_range("window centre (" + std::to_string(row) + "," + std::to_string(col) +
		                        ") outside image");
	}
	const WindowRect r = clamp_window(img.width(), img.height(), row, col, win);

	double sum = 0.0;
	double lo = static_cast<double>(img(r.row0, r.col0));
	double hi = lo;
	for (int i = r.row0; i <= r.row1; ++i)
	{
		for (int j = r.col0; j <= r.col1; ++j)
		{
			const double v = static_cast<double>(img(i, j));
			sum += v;
			lo = std::min(lo, v);
			hi = std::max(hi, v);
		}
	}
	const int count = r.count();
	double mean = sum / count;
	// Rounding can push the mean of a near-constant window just outside [min, max].
	mean = std::clamp(mean, lo, hi);

	double squares = 0.0;
	for (int i = r.row0; i <= r.row1; ++i)
	{
		for (int j = r.col0; j <= r.col1; ++j)
		{
			const double d = static_cast<double>(img(i, j)) - mean;
			squares += d * d;
		}
	}
	detail::note_stddev_evaluation();
	const double stddev = lo == hi ? 0.0 : std::sqrt(squares / count);

	return {mean, stddev, lo, hi, count};
}

struct WindowRange
{
	double min;
	double max;
	int count;
};

/// Minimum and maximum over the clamped window, single direct pass.
template <typename T>
WindowRange naive_window_range(const Plane<T>& img, int row, int col, const WindowSpec& win)
{
	if (!img.contains(row, col))
	{
		throw std::out_of_range("window centre (" + std::to_string(row) + "," + std::to_string(col) +
		                        ") outside image");
	}
	const WindowRect r = clamp_window(img.width(), img.height(), row, col, win);
	double lo = static_cast<double>(img(r.row0, r.col0));
	double hi = lo;
	for (int i = r.row0; i <= r.row1; ++i)
	{
		for (int j = r.col0; j <= r.col1; ++j)
		{
			const double v = static_cast<double>(img(i, j));
			lo = std::min(lo, v);
			hi = std::max(hi, v);
		}
	}
	return {lo, hi, r.count()};
}

} // namespace adathresh
