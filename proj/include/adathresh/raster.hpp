#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "adathresh/errors.hpp"

namespace adathresh
{

/// Row-major 2-D grid. Width and height are at least 1 and the pixel
/// buffer always holds exactly width * height samples.
///
/// Coordinates are (row, col), zero-based. Derived image types decide
/// whether mutable access is exposed.
template <typename T>
class Plane
{
public:
	using value_type = T;

	Plane(int width, int height, T fill = T{})
	    : width_(width), height_(height)
	{
		check_dimensions(width, height);
		pixels_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
	}

	Plane(int width, int height, std::vector<T> pixels)
	    : width_(width), height_(height), pixels_(std::move(pixels))
	{
		check_dimensions(width, height);
		if (pixels_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height))
		{
			throw ValidationError("pixel count " + std::to_string(pixels_.size()) + " does not match " +
			                      std::to_string(width) + "x" + std::to_string(height));
		}
	}

	int width() const noexcept { return width_; }
	int height() const noexcept { return height_; }
	std::size_t size() const noexcept { return pixels_.size(); }

	bool contains(int row, int col) const noexcept
	{
		return row >= 0 && col >= 0 && row < height_ && col < width_;
	}

	const T& operator()(int row, int col) const noexcept
	{
		return pixels_[index(row, col)];
	}

	std::span<const T> pixels() const noexcept { return pixels_; }

	bool same_shape(const Plane& other) const noexcept
	{
		return width_ == other.width_ && height_ == other.height_;
	}

	template <typename U>
	bool same_shape(const Plane<U>& other) const noexcept
	{
		return width_ == other.width() && height_ == other.height();
	}

	bool operator==(const Plane&) const = default;

protected:
	T& mutable_at(int row, int col) noexcept { return pixels_[index(row, col)]; }
	std::vector<T>& mutable_pixels() noexcept { return pixels_; }

	std::size_t index(int row, int col) const noexcept
	{
		return static_cast<std::size_t>(row) * static_cast<std::size_t>(width_) +
		       static_cast<std::size_t>(col);
	}

private:
	static void check_dimensions(int width, int height)
	{
		if (width < 1 || height < 1)
		{
			throw ValidationError("image dimensions must be positive, got " + std::to_string(width) + "x" +
			                      std::to_string(height));
		}
	}

	int width_;
	int height_;
	std::vector<T> pixels_;
};

/// 8-bit grayscale input image.
class GrayImage : public Plane<std::uint8_t>
{
public:
	using Plane::Plane;

	std::uint8_t& at(int row, int col) noexcept { return mutable_at(row, col); }
	std::vector<std::uint8_t>& data() noexcept { return mutable_pixels(); }
};

/// Unconstrained real-valued grid. Used for scratch data and for feeding
/// the statistics routines values outside the unit interval.
class RealPlane : public Plane<double>
{
public:
	using Plane::Plane;

	double& at(int row, int col) noexcept { return mutable_at(row, col); }
};

/// Intensities in [0, 1]. The range is checked on construction and the
/// type exposes no mutable access afterwards.
class NormImage : public Plane<double>
{
public:
	NormImage(int width, int height, std::vector<double> pixels);
};

enum class Label : std::uint8_t
{
	Foreground = 0,
	Background = 1,
};

/// Per-pixel classification: 0 = foreground (black), 1 = background (white).
class BinaryImage : public Plane<std::uint8_t>
{
public:
	BinaryImage(int width, int height, Label fill = Label::Background);
	BinaryImage(int width, int height, std::vector<std::uint8_t> pixels);

	void set(int row, int col, Label label) noexcept
	{
		mutable_at(row, col) = static_cast<std::uint8_t>(label);
	}

	std::size_t count(Label label) const noexcept;
};

enum class ImageFormat
{
	P5Gray,
	P4Bitmap,
};

/// Decodes a P2 (ASCII) or P5 (binary) graymap. Samples from files with
/// maxval below 255 are rescaled to the full 8-bit range.
GrayImage load_pgm(std::span<const std::uint8_t> bytes);

/// Encodes a grayscale image. Only P5Gray is valid here; P4 needs a
/// BinaryImage and requesting it throws ValidationError.
std::vector<std::uint8_t> save_image(const GrayImage& img, ImageFormat format);

/// P5 maps 0 -> 0 and 1 -> 255. P4 packs eight pixels per byte MSB first,
/// each row padded to a byte boundary, with bit 1 meaning black (label 0).
std::vector<std::uint8_t> save_image(const BinaryImage& img, ImageFormat format);

NormImage normalize(const GrayImage& img);

GrayImage read_pgm_file(const std::string& path);
void write_file(const std::string& path, std::span<const std::uint8_t> bytes);

} // namespace adathresh
