#pragma once

// Test-only generators and brute-force references. Nothing here calls into
// the integral or localstats code paths it is used to check.

#include <cstdint>
#include <random>
#include <vector>

#include "adathresh/raster.hpp"

namespace adathresh::testing
{

inline GrayImage random_gray(int width, int height, std::uint32_t seed)
{
	std::mt19937 rng(seed);
	std::vector<std::uint8_t> px(static_cast<std::size_t>(width) * static_cast<std::size_t>(height));
	for (auto& v : px)
	{
		v = static_cast<std::uint8_t>(rng() >> 24);
	}
	return GrayImage(width, height, std::move(px));
}

// Window sum by direct double loop over in-bounds indices.
template <typename T>
double brute_window_sum(const Plane<T>& img, int row, int col, int w, int* count = nullptr)
{
	const int c = (w - 1) / 2;
	double sum = 0.0;
	int n = 0;
	for (int i = row - c; i <= row + c; ++i)
	{
		for (int j = col - c; j <= col + c; ++j)
		{
			if (i < 0 || j < 0 || i >= img.height() || j >= img.width())
			{
				continue;
			}
			sum += static_cast<double>(img(i, j));
			++n;
		}
	}
	if (count)
	{
		*count = n;
	}
	return sum;
}

inline std::int64_t brute_window_sum_exact(const GrayImage& img, int row, int col, int w, int* count = nullptr)
{
	const int c = (w - 1) / 2;
	std::int64_t sum = 0;
	int n = 0;
	for (int i = row - c; i <= row + c; ++i)
	{
		for (int j = col - c; j <= col + c; ++j)
		{
			if (i < 0 || j < 0 || i >= img.height() || j >= img.width())
			{
				continue;
			}
			sum += img(i, j);
			++n;
		}
	}
	if (count)
	{
		*count = n;
	}
	return sum;
}

} // namespace adathresh::testing
