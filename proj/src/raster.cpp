#include "adathresh/raster.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>

namespace adathresh
{

const char* to_string(ParseErrorKind kind) noexcept
{
	switch (kind)
	{
	case ParseErrorKind::BadMagic: return "bad magic";
	case ParseErrorKind::BadHeaderToken: return "bad header token";
	case ParseErrorKind::MaxvalTooLarge: return "maxval too large";
	case ParseErrorKind::SampleOutOfRange: return "sample out of range";
	case ParseErrorKind::Truncated: return "truncated pixel data";
	}
	return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t offset, const std::string& detail)
    : std::runtime_error(std::string("PGM ") + to_string(kind) + " at byte " + std::to_string(offset) +
                         ": " + detail),
      kind_(kind), offset_(offset)
{
}

NormImage::NormImage(int width, int height, std::vector<double> pixels)
    : Plane(width, height, std::move(pixels))
{
	for (double v : this->pixels())
	{
		if (!(v >= 0.0 && v <= 1.0))
		{
			throw ValidationError("normalized intensity outside [0,1]: " + std::to_string(v));
		}
	}
}

BinaryImage::BinaryImage(int width, int height, Label fill)
    : Plane(width, height, static_cast<std::uint8_t>(fill))
{
}

BinaryImage::BinaryImage(int width, int height, std::vector<std::uint8_t> pixels)
    : Plane(width, height, std::move(pixels))
{
	if (std::any_of(this->pixels().begin(), this->pixels().end(), [](std::uint8_t v) { return v > 1; }))
	{
		throw ValidationError("binary image pixels must be 0 or 1");
	}
}

std::size_t BinaryImage::count(Label label) const noexcept
{
	const auto wanted = static_cast<std::uint8_t>(label);
	return static_cast<std::size_t>(std::count(pixels().begin(), pixels().end(), wanted));
}

namespace
{

bool is_space(std::uint8_t c)
{
	return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

class HeaderReader
{
public:
	explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

	std::size_t position() const noexcept { return pos_; }
	void advance(std::size_t n) noexcept { pos_ += n; }

	// Skips whitespace and '#' comments, then reads one unsigned decimal.
	unsigned long read_number(const char* what)
	{
		skip_space_and_comments();
		const std::size_t start = pos_;
		if (pos_ >= bytes_.size())
		{
			throw ParseError(ParseErrorKind::Truncated, pos_, std::string("missing ") + what);
		}
		unsigned long value = 0;
		while (pos_ < bytes_.size() && !is_space(bytes_[pos_]) && bytes_[pos_] != '#')
		{
			const std::uint8_t c = bytes_[pos_];
			if (c < '0' || c > '9')
			{
				throw ParseError(ParseErrorKind::BadHeaderToken, start,
				                 std::string("non-numeric ") + what);
			}
			value = value * 10 + static_cast<unsigned long>(c - '0');
			if (value > 0x7fffffffUL)
			{
				throw ParseError(ParseErrorKind::BadHeaderToken, start, std::string(what) + " too large");
			}
			++pos_;
		}
		return value;
	}

	void skip_space_and_comments()
	{
		while (pos_ < bytes_.size())
		{
			if (is_space(bytes_[pos_]))
			{
				++pos_;
			}
			else if (bytes_[pos_] == '#')
			{
				while (pos_ < bytes_.size() && bytes_[pos_] != '\n')
				{
					++pos_;
				}
			}
			else
			{
				break;
			}
		}
	}

	bool at_end() const noexcept { return pos_ >= bytes_.size(); }
	std::uint8_t peek() const noexcept { return bytes_[pos_]; }

private:
	std::span<const std::uint8_t> bytes_;
	std::size_t pos_ = 0;
};

std::uint8_t rescale(unsigned long sample, unsigned long maxval)
{
	if (maxval == 255)
	{
		return static_cast<std::uint8_t>(sample);
	}
	return static_cast<std::uint8_t>((sample * 255 + maxval / 2) / maxval);
}

std::vector<std::uint8_t> header(const char* magic, int width, int height, std::optional<int> maxval)
{
	std::string text = std::string(magic) + "\n" + std::to_string(width) + " " + std::to_string(height) + "\n";
	if (maxval)
	{
		text += std::to_string(*maxval) + "\n";
	}
	return {text.begin(), text.end()};
}

} // namespace

GrayImage load_pgm(std::span<const std::uint8_t> bytes)
{
	if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5'))
	{
		throw ParseError(ParseErrorKind::BadMagic, 0, "expected P2 or P5");
	}
	const bool ascii = bytes[1] == '2';

	HeaderReader reader(bytes);
	reader.advance(2);
	if (!reader.at_end() && !is_space(reader.peek()) && reader.peek() != '#')
	{
		throw ParseError(ParseErrorKind::BadMagic, 2, "magic must be followed by whitespace");
	}

	const std::size_t width_at = reader.position();
	const unsigned long width = reader.read_number("width");
	const unsigned long height = reader.read_number("height");
	if (width == 0 || height == 0)
	{
		throw ParseError(ParseErrorKind::BadHeaderToken, width_at, "dimensions must be positive");
	}
	reader.skip_space_and_comments();
	const std::size_t maxval_at = reader.position();
	const unsigned long maxval = reader.read_number("maxval");
	if (maxval == 0)
	{
		throw ParseError(ParseErrorKind::BadHeaderToken, maxval_at, "maxval must be positive");
	}
	if (maxval > 255)
	{
		throw ParseError(ParseErrorKind::MaxvalTooLarge, maxval_at,
		                 "maxval " + std::to_string(maxval) + " exceeds 255");
	}

	const std::size_t count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
	std::vector<std::uint8_t> pixels;
	pixels.reserve(count);

	if (ascii)
	{
		for (std::size_t i = 0; i < count; ++i)
		{
			reader.skip_space_and_comments();
			if (reader.at_end())
			{
				throw ParseError(ParseErrorKind::Truncated, reader.position(),
				                 "expected " + std::to_string(count) + " samples, got " + std::to_string(i));
			}
			const std::size_t at = reader.position();
			const unsigned long sample = reader.read_number("sample");
			if (sample > maxval)
			{
				throw ParseError(ParseErrorKind::SampleOutOfRange, at,
				                 "sample " + std::to_string(sample) + " exceeds maxval");
			}
			pixels.push_back(rescale(sample, maxval));
		}
	}
	else
	{
		// Exactly one whitespace byte separates maxval from the raster.
		if (reader.at_end() || !is_space(reader.peek()))
		{
			throw ParseError(ParseErrorKind::Truncated, reader.position(), "missing raster separator");
		}
		reader.advance(1);
		const std::size_t start = reader.position();
		if (bytes.size() - start < count)
		{
			throw ParseError(ParseErrorKind::Truncated, bytes.size(),
			                 "expected " + std::to_string(count) + " raster bytes, got " +
			                     std::to_string(bytes.size() - start));
		}
		for (std::size_t i = 0; i < count; ++i)
		{
			const std::uint8_t sample = bytes[start + i];
			if (sample > maxval)
			{
				throw ParseError(ParseErrorKind::SampleOutOfRange, start + i,
				                 "sample " + std::to_string(sample) + " exceeds maxval");
			}
			pixels.push_back(rescale(sample, maxval));
		}
	}

	return GrayImage(static_cast<int>(width), static_cast<int>(height), std::move(pixels));
}

std::vector<std::uint8_t> save_image(const GrayImage& img, ImageFormat format)
{
	if (format != ImageFormat::P5Gray)
	{
		throw ValidationError("P4 output requires a binary image");
	}
	auto out = header("P5", img.width(), img.height(), 255);
	out.insert(out.end(), img.pixels().begin(), img.pixels().end());
	return out;
}

std::vector<std::uint8_t> save_image(const BinaryImage& img, ImageFormat format)
{
	if (format == ImageFormat::P5Gray)
	{
		auto out = header("P5", img.width(), img.height(), 255);
		std::transform(img.pixels().begin(), img.pixels().end(), std::back_inserter(out),
		               [](std::uint8_t v) { return static_cast<std::uint8_t>(v ? 255 : 0); });
		return out;
	}

	auto out = header("P4", img.width(), img.height(), std::nullopt);
	const std::size_t row_bytes = (static_cast<std::size_t>(img.width()) + 7) / 8;
	const std::size_t data_start = out.size();
	out.resize(data_start + row_bytes * static_cast<std::size_t>(img.height()), 0);
	for (int row = 0; row < img.height(); ++row)
	{
		std::uint8_t* line = out.data() + data_start + row_bytes * static_cast<std::size_t>(row);
		for (int col = 0; col < img.width(); ++col)
		{
			if (img(row, col) == static_cast<std::uint8_t>(Label::Foreground))
			{
				line[col / 8] |= static_cast<std::uint8_t>(0x80u >> (col % 8));
			}
		}
	}
	return out;
}

NormImage normalize(const GrayImage& img)
{
	std::vector<double> values(img.size());
	std::transform(img.pixels().begin(), img.pixels().end(), values.begin(),
	               [](std::uint8_t v) { return static_cast<double>(v) / 255.0; });
	return NormImage(img.width(), img.height(), std::move(values));
}

GrayImage read_pgm_file(const std::string& path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
	{
		throw IoError("cannot open " + path);
	}
	std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
	if (in.bad())
	{
		throw IoError("error reading " + path);
	}
	return load_pgm(bytes);
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes)
{
	// Write next to the target and rename so a failed write never leaves a
	// partial file under the final name.
	const std::string tmp = path + ".part";
	{
		std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
		if (!out)
		{
			throw IoError("cannot open " + path + " for writing");
		}
		out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
		out.flush();
		if (!out)
		{
			out.close();
			std::remove(tmp.c_str());
			throw IoError("error writing " + path);
		}
	}
	std::error_code ec;
	std::filesystem::rename(tmp, path, ec);
	if (ec)
	{
		std::remove(tmp.c_str());
		throw IoError("cannot move output into place at " + path + ": " + ec.message());
	}
}

} // namespace adathresh
