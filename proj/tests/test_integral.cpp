#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "adathresh/integral.hpp"
#include "support.hpp"

using namespace adathresh;

namespace
{

RealPlane real_plane(int width, int height, std::initializer_list<double> values)
{
	return RealPlane(width, height, std::vector<double>(values));
}

const GrayImage nine(3, 3, std::vector<std::uint8_t>{1, 2, 3, 4, 5, 6, 7, 8, 9});

} // namespace

TEST_CASE("window spec")
{
	const WindowSpec w(7);
	CHECK(w.size() == 7);
	CHECK(w.half() == 3);
	CHECK(w.corner() == 4);
	CHECK(WindowSpec(3).corner() == WindowSpec(3).half() + 1);
	CHECK_THROWS_AS(WindowSpec(4), ValidationError);
	CHECK_THROWS_AS(WindowSpec(1), ValidationError);
	CHECK_THROWS_AS(WindowSpec(-3), ValidationError);
}

TEST_CASE("integral of a 2x2 image")
{
	const RealIntegral g(real_plane(2, 2, {1, 2, 3, 4}));
	CHECK(g.at(1, 1) == 1);
	CHECK(g.at(1, 2) == 3);
	CHECK(g.at(2, 1) == 4);
	CHECK(g.at(2, 2) == 10);
	CHECK(g.at(0, 2) == 0);
	CHECK(g.at(2, 0) == 0);

	const IntegerIntegral gi(GrayImage(2, 2, std::vector<std::uint8_t>{1, 2, 3, 4}));
	CHECK(gi.at(2, 2) == 10);
	CHECK(gi.domain == SourceDomain::Integer8);
	CHECK(RealIntegral::domain == SourceDomain::UnitReal);
}

TEST_CASE("integral of constant images")
{
	const IntegerIntegral zeros(GrayImage(3, 3, std::uint8_t{0}));
	const IntegerIntegral ones(GrayImage(3, 3, std::uint8_t{1}));
	for (int x = 1; x <= 3; ++x)
	{
		for (int y = 1; y <= 3; ++y)
		{
			CHECK(zeros.at(x, y) == 0);
			CHECK(ones.at(x, y) == x * y);
		}
	}
}

TEST_CASE("local sum and mean on the 1..9 grid")
{
	const IntegerIntegral g(nine);
	const WindowSpec w3(3);

	const auto centre = local_sum(g, 1, 1, w3); // 1-based (2,2)
	CHECK(centre.sum == 45);
	CHECK(centre.count == 9);
	CHECK(local_mean(g, 1, 1, w3) == 5.0);

	const auto corner = local_sum(g, 0, 0, w3); // 1-based (1,1)
	CHECK(corner.sum == 12);
	CHECK(corner.count == 4);
	CHECK(local_mean(g, 0, 0, w3) == 3.0);

	CHECK_THROWS_AS(local_sum(g, 3, 0, w3), std::out_of_range);
	CHECK_THROWS_AS(local_sum(g, 0, -1, w3), std::out_of_range);
}

TEST_CASE("local mean of an all-ones image is 1 everywhere")
{
	const RealIntegral g(RealPlane(7, 5, 1.0));
	for (int w : {3, 5, 9, 15})
	{
		for (int r = 0; r < 5; ++r)
		{
			for (int c = 0; c < 7; ++c)
			{
				CHECK(local_mean(g, r, c, WindowSpec(w)) == 1.0);
			}
		}
	}
}

TEST_CASE("local sum matches the brute-force window sum")
{
	for (std::uint32_t seed = 1; seed <= 12; ++seed)
	{
		std::mt19937 rng(seed);
		const int width = 1 + static_cast<int>(rng() % 64);
		const int height = 1 + static_cast<int>(rng() % 64);
		const GrayImage img = testing::random_gray(width, height, seed * 7919);
		const NormImage norm = normalize(img);
		const IntegerIntegral gi(img);
		const RealIntegral gr(norm);
		for (int w = 3; w <= 15; w += 2)
		{
			const WindowSpec win(w);
			for (int r = 0; r < height; ++r)
			{
				for (int c = 0; c < width; ++c)
				{
					int expected_count = 0;
					const std::int64_t exact = testing::brute_window_sum_exact(img, r, c, w, &expected_count);
					const auto si = local_sum(gi, r, c, win);
					REQUIRE(si.sum == exact);
					REQUIRE(si.count == expected_count);

					const double real = testing::brute_window_sum(norm, r, c, w);
					REQUIRE(std::abs(local_sum(gr, r, c, win).sum - real) <= 1e-9);
				}
			}
		}
	}
}

TEST_CASE("query cost does not depend on the window size")
{
	const GrayImage img = testing::random_gray(64, 64, 3);
	const IntegerIntegral g(img);
	OpCounter small;
	OpCounter large;
	for (int r = 0; r < 64; ++r)
	{
		for (int c = 0; c < 64; ++c)
		{
			local_sum(g, r, c, WindowSpec(3), &small);
			local_sum(g, r, c, WindowSpec(63), &large);
		}
	}
	CHECK(small.lookups == 4u * 64 * 64);
	CHECK(small.lookups == large.lookups);
	CHECK(small.arithmetic == large.arithmetic);
}

TEST_CASE("four-corner difference reconstructs the source")
{
	const GrayImage img = testing::random_gray(23, 17, 99);
	const IntegerIntegral g(img);
	for (int x = 1; x <= img.height(); ++x)
	{
		for (int y = 1; y <= img.width(); ++y)
		{
			const std::int64_t v = g.at(x, y) - g.at(x - 1, y) - g.at(x, y - 1) + g.at(x - 1, y - 1);
			REQUIRE(v == img(x - 1, y - 1));
		}
	}
}

TEST_CASE("table is monotone and totals the image")
{
	const GrayImage img = testing::random_gray(31, 29, 5);
	const IntegerIntegral g(img);
	std::int64_t total = 0;
	for (auto v : img.pixels())
	{
		total += v;
	}
	CHECK(g.total() == total);
	for (int x = 1; x <= img.height(); ++x)
	{
		for (int y = 1; y <= img.width(); ++y)
		{
			REQUIRE(g.at(x, y) >= g.at(x - 1, y));
			REQUIRE(g.at(x, y) >= g.at(x, y - 1));
		}
	}
}

TEST_CASE("single pixel image")
{
	const IntegerIntegral g(GrayImage(1, 1, std::uint8_t{200}));
	const auto s = local_sum(g, 0, 0, WindowSpec(15));
	CHECK(s.sum == 200);
	CHECK(s.count == 1);
	CHECK(local_mean_unit(g, 0, 0, WindowSpec(3)) == 200.0 / 255.0);
}
