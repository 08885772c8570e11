#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "adathresh/raster.hpp"

namespace adathresh
{

/// Odd window side length w >= 3 with its derived offsets:
/// half = (w - 1) / 2 and corner = round(w / 2) = half + 1.
class WindowSpec
{
public:
	explicit WindowSpec(int size);

	int size() const noexcept { return size_; }
	int half() const noexcept { return size_ / 2; }
	int corner() const noexcept { return size_ / 2 + 1; }

	bool operator==(const WindowSpec&) const = default;

private:
	int size_;
};

enum class SourceDomain
{
	Integer8, // exact sums of 8-bit samples
	UnitReal, // double sums of reals
};

/// Border-clamped window bounds, zero-based and inclusive.
struct WindowRect
{
	int row0, col0, row1, col1;

	int count() const noexcept { return (row1 - row0 + 1) * (col1 - col0 + 1); }
};

inline WindowRect clamp_window(int width, int height, int row, int col, const WindowSpec& win) noexcept
{
	const int c = win.half();
	return {std::max(0, row - c), std::max(0, col - c), std::min(height - 1, row + c),
	        std::min(width - 1, col + c)};
}

/// Counts table reads and additions/subtractions made by local_sum.
struct OpCounter
{
	std::uint64_t lookups = 0;
	std::uint64_t arithmetic = 0;
};

template <typename Acc>
struct WindowSum
{
	Acc sum;
	int count;
};

/// Summed-area table g(x, y) = sum of I(i, j) for i <= x, j <= y.
///
/// at(x, y) takes the 1-based (row, column) indices of the definition;
/// index 0 in either coordinate reads as 0, so the table is stored with a
/// leading zero row and column. Integer tables are built from 8-bit images
/// and are exact; real tables accumulate in double.
template <typename Acc>
class IntegralImage
{
	static_assert(std::is_same_v<Acc, std::int64_t> || std::is_same_v<Acc, double>);

public:
	static constexpr SourceDomain domain =
	    std::is_same_v<Acc, std::int64_t> ? SourceDomain::Integer8 : SourceDomain::UnitReal;

	template <typename T>
	explicit IntegralImage(const Plane<T>& img);

	int width() const noexcept { return width_; }
	int height() const noexcept { return height_; }

	Acc at(int x, int y) const noexcept
	{
		return sums_[static_cast<std::size_t>(x) * stride_ + static_cast<std::size_t>(y)];
	}

	Acc total() const noexcept { return at(height_, width_); }

private:
	Acc& cell(int x, int y) noexcept
	{
		return sums_[static_cast<std::size_t>(x) * stride_ + static_cast<std::size_t>(y)];
	}

	int width_;
	int height_;
	std::size_t stride_;
	std::vector<Acc> sums_;
};

using IntegerIntegral = IntegralImage<std::int64_t>;
using RealIntegral = IntegralImage<double>;

template <typename Acc>
template <typename T>
IntegralImage<Acc>::IntegralImage(const Plane<T>& img)
    : width_(img.width()), height_(img.height()), stride_(static_cast<std::size_t>(img.width()) + 1)
{
	if constexpr (domain == SourceDomain::Integer8)
	{
		static_assert(std::is_same_v<T, std::uint8_t>, "integer tables are built from 8-bit images");
		const double worst = 255.0 * static_cast<double>(width_) * static_cast<double>(height_);
		if (worst >= static_cast<double>(std::numeric_limits<std::int64_t>::max()))
		{
			throw std::overflow_error("image too large for exact integral accumulation");
		}
	}
	else
	{
		static_assert(std::is_floating_point_v<T>, "real tables are built from real-valued images");
	}
	sums_.assign(stride_ * (static_cast<std::size_t>(height_) + 1), Acc{0});

	// Single pass in raster order. Row 0 / column 0 of the padded table stay
	// zero; the first row and first column use their own recurrences.
	auto src = [&](int x, int y) { return static_cast<Acc>(img(x - 1, y - 1)); };

	cell(1, 1) = src(1, 1);
	for (int y = 2; y <= width_; ++y)
	{
		cell(1, y) = src(1, y) + at(1, y - 1);
	}
	for (int x = 2; x <= height_; ++x)
	{
		cell(x, 1) = src(x, 1) + at(x - 1, 1);
		for (int y = 2; y <= width_; ++y)
		{
			cell(x, y) = src(x, y) + at(x, y - 1) + at(x - 1, y) - at(x - 1, y - 1);
		}
	}
}

/// Sum over the w x w window centred at zero-based (row, col), clamped to
/// the image. Four table reads whatever the window size; for interior
/// pixels this is exactly the unclamped window sum.
template <typename Acc>
inline WindowSum<Acc> local_sum(const IntegralImage<Acc>& g, int row, int col, const WindowSpec& win,
                                OpCounter* counter = nullptr)
{
	if (row < 0 || col < 0 || row >= g.height() || col >= g.width())
	{
		throw std::out_of_range("window centre (" + std::to_string(row) + "," + std::to_string(col) +
		                        ") outside " + std::to_string(g.width()) + "x" + std::to_string(g.height()));
	}
	const WindowRect r = clamp_window(g.width(), g.height(), row, col, win);
	// 1-based corners: bottom-right (row1+1, col1+1), top-left exclusive (row0, col0).
	const Acc sum = (g.at(r.row1 + 1, r.col1 + 1) + g.at(r.row0, r.col0)) -
	                (g.at(r.row0, r.col1 + 1) + g.at(r.row1 + 1, r.col0));
	if (counter)
	{
		counter->lookups += 4;
		counter->arithmetic += 3;
	}
	return {sum, r.count()};
}

/// Window mean in source units (0..255 for integer tables).
template <typename Acc>
inline double local_mean(const IntegralImage<Acc>& g, int row, int col, const WindowSpec& win)
{
	const auto s = local_sum(g, row, col, win);
	return static_cast<double>(s.sum) / static_cast<double>(s.count);
}

/// Window mean mapped onto [0, 1].
template <typename Acc>
inline double local_mean_unit(const IntegralImage<Acc>& g, int row, int col, const WindowSpec& win)
{
	const auto s = local_sum(g, row, col, win);
	constexpr double full_scale = IntegralImage<Acc>::domain == SourceDomain::Integer8 ? 255.0 : 1.0;
	return static_cast<double>(s.sum) / (static_cast<double>(s.count) * full_scale);
}

} // namespace adathresh
