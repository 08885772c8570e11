#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adathresh/binarize.hpp"
#include "adathresh/raster.hpp"

namespace adathresh
{

struct TimingRecord
{
	Method method;
	int window_size;
	int image_width;
	int image_height;
	int repeats;
	double best_seconds;
	double median_seconds;
	std::uint64_t output_checksum; // FNV-1a of the binarized pixels
};

struct TimingTable
{
	std::vector<TimingRecord> records;
	std::string descriptor;
};

/// Window sizes 3, 7, 11, ..., 35.
std::vector<int> default_sweep_windows();

std::uint64_t checksum(const BinaryImage& img) noexcept;

/// Runs binarize `repeats` times on the calling thread, timing each run
/// with a monotonic clock. Every run must produce the same output; a
/// mismatch throws std::logic_error. repeats < 3 throws ValidationError.
TimingRecord time_method(const GrayImage& img, const MethodParams& params, int repeats);

/// Times methods x windows, method-major with windows ascending. Each
/// method keeps its default k and constants; only the window changes.
TimingTable run_sweep(const GrayImage& img, const std::vector<Method>& methods, const std::vector<int>& windows,
                      int repeats);

/// "method,window,width,height,repeats,best_s,median_s" plus one row per
/// record; seconds with six decimals, independent of the C locale.
std::string emit_csv(const TimingTable& table);

/// Aligned text table: one row per window, one column per method.
std::string format_table(const TimingTable& table);

/// Deterministic synthetic page used in place of a natural test image:
/// a horizontal illumination ramp, rows of dark glyph-like strokes and
/// uniform noise, all driven by std::mt19937 seeded with `seed`.
GrayImage synthetic_document(int width, int height, std::uint32_t seed = 0x5eedu);

} // namespace adathresh
