#include "adathresh/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <iomanip>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace adathresh
{

std::vector<int> default_sweep_windows()
{
	std::vector<int> windows;
	for (int w = 3; w <= 35; w += 4)
	{
		windows.push_back(w);
	}
	return windows;
}

std::uint64_t checksum(const BinaryImage& img) noexcept
{
	std::uint64_t h = 1469598103934665603ull;
	for (std::uint8_t v : img.pixels())
	{
		h ^= v;
		h *= 1099511628211ull;
	}
	return h;
}

TimingRecord time_method(const GrayImage& img, const MethodParams& params, int repeats)
{
	if (repeats < 3)
	{
		throw ValidationError("repeats must be >= 3, got " + std::to_string(repeats));
	}
	params.validate();

	using clock = std::chrono::steady_clock;
	std::vector<double> seconds;
	seconds.reserve(static_cast<std::size_t>(repeats));
	std::uint64_t first = 0;
	for (int i = 0; i < repeats; ++i)
	{
		const auto start = clock::now();
		const BinaryImage out =
		    params.method == Method::Proposed ? binarize_proposed_fused(img, params) : binarize(img, params);
		const auto stop = clock::now();
		// Consuming the output keeps the timed work observable.
		const std::uint64_t sum = checksum(out);
		if (i == 0)
		{
			first = sum;
		}
		else if (sum != first)
		{
			throw std::logic_error("binarize output changed between timed repeats");
		}
		seconds.push_back(std::chrono::duration<double>(stop - start).count());
	}

	std::sort(seconds.begin(), seconds.end());
	const std::size_t n = seconds.size();
	const double median = n % 2 ? seconds[n / 2] : 0.5 * (seconds[n / 2 - 1] + seconds[n / 2]);
	return {params.method, params.window, img.width(), img.height(), repeats, seconds.front(), median, first};
}

TimingTable run_sweep(const GrayImage& img, const std::vector<Method>& methods, const std::vector<int>& windows,
                      int repeats)
{
	for (int w : windows)
	{
		static_cast<void>(WindowSpec{w});
	}
	if (std::set<int>(windows.begin(), windows.end()).size() != windows.size())
	{
		throw ValidationError("window list contains duplicates");
	}
	if (std::set<Method>(methods.begin(), methods.end()).size() != methods.size())
	{
		throw ValidationError("method list contains duplicates");
	}
	std::vector<int> ascending = windows;
	std::sort(ascending.begin(), ascending.end());

	TimingTable table;
	table.descriptor = std::to_string(img.width()) + "x" + std::to_string(img.height()) + ", " +
	                   std::to_string(repeats) + " repeats, single thread";
	for (Method m : methods)
	{
		for (int w : ascending)
		{
			MethodParams params = MethodParams::defaults(m);
			params.window = w;
			table.records.push_back(time_method(img, params, repeats));
		}
	}
	return table;
}

namespace
{

std::string fixed6(double v)
{
	char buf[64];
	const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 6);
	return std::string(buf, res.ptr);
}

} // namespace

std::string emit_csv(const TimingTable& table)
{
	std::string out = "method,window,width,height,repeats,best_s,median_s\n";
	for (const TimingRecord& r : table.records)
	{
		out += std::string(to_string(r.method)) + ',' + std::to_string(r.window_size) + ',' +
		       std::to_string(r.image_width) + ',' + std::to_string(r.image_height) + ',' +
		       std::to_string(r.repeats) + ',' + fixed6(r.best_seconds) + ',' + fixed6(r.median_seconds) + '\n';
	}
	return out;
}

std::string format_table(const TimingTable& table)
{
	std::vector<Method> methods;
	std::map<int, std::map<Method, double>> cells;
	for (const TimingRecord& r : table.records)
	{
		if (std::find(methods.begin(), methods.end(), r.method) == methods.end())
		{
			methods.push_back(r.method);
		}
		cells[r.window_size][r.method] = r.best_seconds;
	}

	std::ostringstream os;
	os << "Best time in seconds (" << table.descriptor << ")\n";
	os << std::left << std::setw(8) << "window";
	for (Method m : methods)
	{
		os << std::right << std::setw(12) << to_string(m);
	}
	os << '\n';
	for (const auto& [w, row] : cells)
	{
		os << std::left << std::setw(8) << w;
		for (Method m : methods)
		{
			const auto it = row.find(m);
			os << std::right << std::setw(12) << (it == row.end() ? std::string("-") : fixed6(it->second));
		}
		os << '\n';
	}
	return os.str();
}

GrayImage synthetic_document(int width, int height, std::uint32_t seed)
{
	// Raw engine output only: std::mt19937 is fully specified, the
	// distributions are not, so the image is identical on every platform.
	std::mt19937 rng(seed);
	auto uniform = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint32_t>(hi - lo + 1)); };

	GrayImage img(width, height);
	for (int row = 0; row < height; ++row)
	{
		for (int col = 0; col < width; ++col)
		{
			const int ramp = 150 + (80 * col) / width - (40 * row) / height;
			img.at(row, col) = static_cast<std::uint8_t>(std::clamp(ramp + uniform(-10, 10), 0, 255));
		}
	}

	constexpr int line_pitch = 24;
	constexpr int glyph_height = 12;
	for (int top = 6; top + glyph_height < height; top += line_pitch)
	{
		int col = 4 + uniform(0, 8);
		while (col + 4 < width)
		{
			const int stroke_width = uniform(1, 3);
			const int stroke_height = uniform(glyph_height / 2, glyph_height);
			const int stroke_top = top + glyph_height - stroke_height;
			for (int r = stroke_top; r < top + glyph_height; ++r)
			{
				for (int c = col; c < std::min(width, col + stroke_width); ++c)
				{
					img.at(r, c) = static_cast<std::uint8_t>(std::clamp(35 + uniform(-15, 15), 0, 255));
				}
			}
			col += stroke_width + uniform(1, 4) + (uniform(0, 5) == 0 ? 6 : 0);
		}
	}
	return img;
}

} // namespace adathresh
