#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "adathresh/raster.hpp"
#include "support.hpp"

using namespace adathresh;

namespace
{

std::vector<std::uint8_t> bytes_of(const std::string& s, std::initializer_list<int> raw = {})
{
	std::vector<std::uint8_t> out(s.begin(), s.end());
	for (int v : raw)
	{
		out.push_back(static_cast<std::uint8_t>(v));
	}
	return out;
}

ParseErrorKind parse_failure(const std::vector<std::uint8_t>& bytes, std::size_t* offset = nullptr)
{
	try
	{
		load_pgm(bytes);
	}
	catch (const ParseError& e)
	{
		if (offset)
		{
			*offset = e.offset();
		}
		return e.kind();
	}
	FAIL("expected a parse error");
	return ParseErrorKind::BadMagic;
}

} // namespace

TEST_CASE("load P5")
{
	const GrayImage img = load_pgm(bytes_of("P5\n2 2\n255\n", {0, 64, 128, 255}));
	CHECK(img.width() == 2);
	CHECK(img.height() == 2);
	CHECK(std::vector<std::uint8_t>(img.pixels().begin(), img.pixels().end()) ==
	      std::vector<std::uint8_t>{0, 64, 128, 255});
	CHECK(img(1, 0) == 128);
}

TEST_CASE("load P2 with comments")
{
	CHECK(load_pgm(bytes_of("P2\n1 1\n255\n7\n"))(0, 0) == 7);

	const GrayImage img = load_pgm(bytes_of("P2\n# made by hand\n3 1 # width height\n255\n1 2\n# mid\n3"));
	CHECK(img.width() == 3);
	CHECK(img(0, 2) == 3);
}

TEST_CASE("maxval below 255 is rescaled")
{
	const GrayImage img = load_pgm(bytes_of("P2\n3 1\n15\n0 15 7\n"));
	CHECK(img(0, 0) == 0);
	CHECK(img(0, 1) == 255);
	CHECK(img(0, 2) == 119); // round(7 * 255 / 15)
}

TEST_CASE("parse errors are distinct and carry offsets")
{
	std::size_t offset = 0;
	CHECK(parse_failure(bytes_of("P5\n2 2\n255\n", {1, 2, 3}), &offset) == ParseErrorKind::Truncated);
	CHECK(offset == 14);

	CHECK(parse_failure(bytes_of("P6\n1 1\n255\n", {0}), &offset) == ParseErrorKind::BadMagic);
	CHECK(offset == 0);
	CHECK(parse_failure(bytes_of("")) == ParseErrorKind::BadMagic);

	CHECK(parse_failure(bytes_of("P5\n1 1\n65535\n", {0, 0}), &offset) == ParseErrorKind::MaxvalTooLarge);
	CHECK(offset == 7);

	CHECK(parse_failure(bytes_of("P2\n1 x\n255\n1\n"), &offset) == ParseErrorKind::BadHeaderToken);
	CHECK(offset == 5);

	CHECK(parse_failure(bytes_of("P2\n2 1\n255\n1\n")) == ParseErrorKind::Truncated);
	CHECK(parse_failure(bytes_of("P2\n1 1\n100\n101\n")) == ParseErrorKind::SampleOutOfRange);
	CHECK(parse_failure(bytes_of("P2\n0 1\n255\n")) == ParseErrorKind::BadHeaderToken);
	CHECK(parse_failure(bytes_of("P5\n1 1\n")) == ParseErrorKind::Truncated);
}

TEST_CASE("binary image as P5")
{
	const BinaryImage img(1, 2, std::vector<std::uint8_t>{0, 1});
	CHECK(save_image(img, ImageFormat::P5Gray) == bytes_of("P5\n1 2\n255\n", {0, 255}));
}

TEST_CASE("P4 packing is MSB first with 1 = black foreground")
{
	const BinaryImage all_fg(8, 1, Label::Foreground);
	CHECK(save_image(all_fg, ImageFormat::P4Bitmap) == bytes_of("P4\n8 1\n", {0xFF}));

	// 9 wide rows need two bytes each; the trailing 7 bits are padding.
	BinaryImage img(9, 2, Label::Background);
	img.set(0, 0, Label::Foreground);
	img.set(0, 8, Label::Foreground);
	img.set(1, 7, Label::Foreground);
	CHECK(save_image(img, ImageFormat::P4Bitmap) == bytes_of("P4\n9 2\n", {0x80, 0x80, 0x01, 0x00}));
}

TEST_CASE("P4 output length")
{
	for (int w : {1, 7, 8, 9, 16, 17, 33})
	{
		for (int h : {1, 3})
		{
			const BinaryImage img(w, h);
			const std::string head = "P4\n" + std::to_string(w) + " " + std::to_string(h) + "\n";
			CHECK(save_image(img, ImageFormat::P4Bitmap).size() ==
			      head.size() + static_cast<std::size_t>(h) * static_cast<std::size_t>((w + 7) / 8));
		}
	}
}

TEST_CASE("gray P4 is rejected")
{
	CHECK_THROWS_AS(save_image(GrayImage(2, 2), ImageFormat::P4Bitmap), ValidationError);
}

TEST_CASE("P5 round trip preserves pixels")
{
	for (std::uint32_t seed = 1; seed <= 20; ++seed)
	{
		std::mt19937 rng(seed);
		const int w = 1 + static_cast<int>(rng() % 40);
		const int h = 1 + static_cast<int>(rng() % 40);
		const GrayImage img = testing::random_gray(w, h, seed);
		const auto encoded = save_image(img, ImageFormat::P5Gray);
		const GrayImage back = load_pgm(encoded);
		CHECK(back == img);
		CHECK(save_image(back, ImageFormat::P5Gray) == encoded);
	}
}

TEST_CASE("normalize")
{
	const GrayImage img(3, 1, std::vector<std::uint8_t>{255, 0, 128});
	const NormImage n = normalize(img);
	CHECK(n(0, 0) == 1.0);
	CHECK(n(0, 1) == 0.0);
	CHECK(n(0, 2) == doctest::Approx(0.50196).epsilon(1e-5));

	// Monotone over the whole 8-bit range.
	std::vector<std::uint8_t> ramp(256);
	for (int i = 0; i < 256; ++i)
	{
		ramp[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
	}
	const NormImage r = normalize(GrayImage(256, 1, ramp));
	for (int i = 1; i < 256; ++i)
	{
		CHECK(r(0, i - 1) < r(0, i));
	}
}

TEST_CASE("image invariants")
{
	CHECK_THROWS_AS(GrayImage(0, 3), ValidationError);
	CHECK_THROWS_AS(GrayImage(2, 2, std::vector<std::uint8_t>{1, 2, 3}), ValidationError);
	CHECK_THROWS_AS(NormImage(1, 1, {1.5}), ValidationError);
	CHECK_THROWS_AS(NormImage(1, 1, {-0.1}), ValidationError);
	CHECK_THROWS_AS(BinaryImage(1, 1, std::vector<std::uint8_t>{2}), ValidationError);
}
