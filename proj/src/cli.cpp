#include "adathresh/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <optional>
#include <ostream>

#include "adathresh/bench.hpp"
#include "adathresh/binarize.hpp"
#include "adathresh/raster.hpp"

namespace adathresh::cli
{

namespace
{

namespace fs = std::filesystem;

struct MethodFlags
{
	std::string method = "proposed";
	CLI::Option* window = nullptr;
	CLI::Option* k = nullptr;
	CLI::Option* r = nullptr;
	CLI::Option* contrast = nullptr;
	int window_value = 0;
	double k_value = 0.0;
	double r_value = 0.0;
	double contrast_value = 0.0;
};

ImageFormat parse_format(const std::string& name)
{
	if (name == "p5")
	{
		return ImageFormat::P5Gray;
	}
	if (name == "p4")
	{
		return ImageFormat::P4Bitmap;
	}
	throw ValidationError("unknown output format '" + name + "' (expected p5 or p4)");
}

// Method defaults first, then whatever the user passed explicitly.
MethodParams resolve_params(const MethodFlags& flags)
{
	MethodParams params = MethodParams::defaults(parse_method(flags.method));
	if (flags.window->count() > 0)
	{
		params.window = flags.window_value;
	}
	if (flags.k->count() > 0)
	{
		params.k = flags.k_value;
	}
	if (flags.r->count() > 0)
	{
		params.sauvola_r = flags.r_value;
	}
	if (flags.contrast->count() > 0)
	{
		params.bernsen_contrast_min = flags.contrast_value;
	}
	params.validate();
	return params;
}

void remove_quietly(const std::vector<std::string>& paths)
{
	for (const auto& p : paths)
	{
		std::error_code ec;
		fs::remove(p, ec);
	}
}

struct BinarizeConfig
{
	std::string input;
	std::string output;
	std::string format = "p5";
	std::string dump_threshold;
	MethodFlags method;
};

int run_binarize(const BinarizeConfig& cfg, std::ostream& out)
{
	const MethodParams params = resolve_params(cfg.method);
	const ImageFormat format = parse_format(cfg.format);

	const GrayImage img = read_pgm_file(cfg.input);
	const ThresholdMap tmap = compute_threshold_map(img, params);
	const BinaryImage result = apply_threshold(normalize(img), tmap);

	write_file(cfg.output, save_image(result, format));
	if (!cfg.dump_threshold.empty())
	{
		try
		{
			write_file(cfg.dump_threshold, save_image(quantize_threshold_map(tmap), ImageFormat::P5Gray));
		}
		catch (...)
		{
			remove_quietly({cfg.output});
			throw;
		}
	}
	out << to_string(params.method) << " w=" << params.window << ": " << result.count(Label::Foreground) << " of "
	    << result.size() << " pixels foreground -> " << cfg.output << '\n';
	return Ok;
}

struct CompareConfig
{
	std::string input;
	std::string outdir;
	std::string format = "p5";
};

int run_compare(const CompareConfig& cfg, std::ostream& out)
{
	const ImageFormat format = parse_format(cfg.format);
	const GrayImage img = read_pgm_file(cfg.input);
	const std::string stem = fs::path(cfg.input).stem().string();
	const std::string ext = format == ImageFormat::P4Bitmap ? ".pbm" : ".pgm";

	struct Output
	{
		MethodParams params;
		std::string name;
		std::vector<std::uint8_t> bytes;
		double foreground_fraction;
	};
	std::vector<Output> outputs;
	for (Method m : all_methods)
	{
		const MethodParams params = MethodParams::defaults(m);
		const BinaryImage result = binarize(img, params);
		outputs.push_back({params, stem + "." + std::string(to_string(m)) + ext, save_image(result, format),
		                   static_cast<double>(result.count(Label::Foreground)) / static_cast<double>(result.size())});
	}

	nlohmann::ordered_json manifest;
	manifest["input"] = fs::path(cfg.input).filename().string();
	manifest["width"] = img.width();
	manifest["height"] = img.height();
	manifest["outputs"] = nlohmann::ordered_json::array();
	for (const Output& o : outputs)
	{
		nlohmann::ordered_json entry;
		entry["method"] = std::string(to_string(o.params.method));
		entry["file"] = o.name;
		entry["window"] = o.params.window;
		if (o.params.method != Method::Bernsen)
		{
			entry["k"] = o.params.k;
		}
		if (o.params.method == Method::Sauvola)
		{
			entry["R"] = o.params.sauvola_r;
		}
		if (o.params.method == Method::Bernsen)
		{
			entry["contrast_min"] = o.params.bernsen_contrast_min;
		}
		entry["foreground_fraction"] = o.foreground_fraction;
		manifest["outputs"].push_back(entry);
	}
	const std::string manifest_text = manifest.dump(2) + "\n";

	std::error_code ec;
	fs::create_directories(cfg.outdir, ec);
	if (ec)
	{
		throw IoError("cannot create output directory " + cfg.outdir + ": " + ec.message());
	}

	std::vector<std::string> written;
	try
	{
		for (const Output& o : outputs)
		{
			const std::string path = (fs::path(cfg.outdir) / o.name).string();
			write_file(path, o.bytes);
			written.push_back(path);
		}
		const std::string path = (fs::path(cfg.outdir) / (stem + ".manifest.json")).string();
		write_file(path, std::vector<std::uint8_t>(manifest_text.begin(), manifest_text.end()));
		written.push_back(path);
	}
	catch (...)
	{
		remove_quietly(written);
		throw;
	}

	for (const Output& o : outputs)
	{
		out << to_string(o.params.method) << " -> " << o.name << '\n';
	}
	return Ok;
}

struct BenchConfig
{
	std::string input;
	int synthetic = 512;
	std::vector<std::string> methods;
	std::vector<int> windows;
	int repeats = 5;
	std::string csv;
};

int run_bench(const BenchConfig& cfg, std::ostream& out)
{
	std::vector<Method> methods;
	for (const auto& name : cfg.methods)
	{
		methods.push_back(parse_method(name));
	}
	if (methods.empty())
	{
		methods.assign(all_methods.begin(), all_methods.end());
	}
	const std::vector<int> windows = cfg.windows.empty() ? default_sweep_windows() : cfg.windows;
	for (int w : windows)
	{
		static_cast<void>(WindowSpec{w});
	}
	if (cfg.repeats < 3)
	{
		throw ValidationError("repeats must be >= 3, got " + std::to_string(cfg.repeats));
	}
	if (cfg.input.empty() && cfg.synthetic < 1)
	{
		throw ValidationError("synthetic image size must be positive");
	}

	const GrayImage img = cfg.input.empty() ? synthetic_document(cfg.synthetic, cfg.synthetic)
	                                        : read_pgm_file(cfg.input);
	const TimingTable table = run_sweep(img, methods, windows, cfg.repeats);
	if (!cfg.csv.empty())
	{
		const std::string csv = emit_csv(table);
		write_file(cfg.csv, std::vector<std::uint8_t>(csv.begin(), csv.end()));
	}
	out << format_table(table);
	return Ok;
}

void add_method_flags(CLI::App* cmd, MethodFlags& flags)
{
	cmd->add_option("--method", flags.method, "proposed, niblack, sauvola or bernsen")->capture_default_str();
	flags.window = cmd->add_option("-w,--window", flags.window_value, "odd window size >= 3 (method default)");
	flags.k = cmd->add_option("-k,--bias", flags.k_value, "bias k (method default)");
	flags.r = cmd->add_option("-R,--sauvola-r", flags.r_value, "Sauvola dynamic range, normalized (0.5)");
	flags.contrast = cmd->add_option("--bernsen-contrast", flags.contrast_value,
	                                 "Bernsen contrast floor, normalized (15/255)");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
	CLI::App app{"Local adaptive thresholding for grayscale documents", "adathresh"};
	app.require_subcommand(1);

	BinarizeConfig bin;
	auto* bin_cmd = app.add_subcommand("binarize", "Binarize one PGM image");
	bin_cmd->add_option("-i,--input", bin.input, "input PGM (P2 or P5)")->required();
	bin_cmd->add_option("-o,--output", bin.output, "output image")->required();
	bin_cmd->add_option("--format", bin.format, "p5 (graymap) or p4 (bitmap)")->capture_default_str();
	bin_cmd->add_option("--dump-threshold", bin.dump_threshold, "write the threshold map as a P5 image");
	add_method_flags(bin_cmd, bin.method);

	CompareConfig cmp;
	auto* cmp_cmd = app.add_subcommand("compare", "Run all four methods at their default parameters");
	cmp_cmd->add_option("-i,--input", cmp.input, "input PGM (P2 or P5)")->required();
	cmp_cmd->add_option("--outdir", cmp.outdir, "output directory")->required();
	cmp_cmd->add_option("--format", cmp.format, "p5 (graymap) or p4 (bitmap)")->capture_default_str();

	BenchConfig bench;
	auto* bench_cmd = app.add_subcommand("bench", "Time each method across window sizes");
	bench_cmd->add_option("-i,--input", bench.input, "input PGM; a synthetic page is used when omitted");
	bench_cmd->add_option("--synthetic", bench.synthetic, "side length of the synthetic page")
	    ->capture_default_str();
	bench_cmd->add_option("--methods", bench.methods, "comma-separated methods (all)")->delimiter(',');
	bench_cmd->add_option("--windows", bench.windows, "comma-separated odd window sizes (3,7,...,35)")
	    ->delimiter(',');
	bench_cmd->add_option("--repeats", bench.repeats, "timed runs per cell, >= 3")->capture_default_str();
	bench_cmd->add_option("--csv", bench.csv, "write results as CSV");

	std::vector<std::string> argv_storage;
	argv_storage.reserve(args.size() + 1);
	argv_storage.emplace_back("adathresh");
	argv_storage.insert(argv_storage.end(), args.begin(), args.end());
	std::vector<const char*> argv;
	for (const auto& a : argv_storage)
	{
		argv.push_back(a.c_str());
	}

	try
	{
		app.parse(static_cast<int>(argv.size()), argv.data());
	}
	catch (const CLI::CallForHelp&)
	{
		out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
		return Ok;
	}
	catch (const CLI::CallForAllHelp&)
	{
		out << app.help("", CLI::AppFormatMode::All);
		return Ok;
	}
	catch (const CLI::ParseError& e)
	{
		err << "adathresh: " << e.what() << '\n';
		return Usage;
	}

	try
	{
		if (bin_cmd->parsed())
		{
			return run_binarize(bin, out);
		}
		if (cmp_cmd->parsed())
		{
			return run_compare(cmp, out);
		}
		return run_bench(bench, out);
	}
	catch (const ValidationError& e)
	{
		err << "adathresh: invalid parameter: " << e.what() << '\n';
		return Validation;
	}
	catch (const IoError& e)
	{
		err << "adathresh: " << e.what() << '\n';
		return Io;
	}
	catch (const adathresh::ParseError& e)
	{
		err << "adathresh: " << e.what() << '\n';
		return Io;
	}
	catch (const std::exception& e)
	{
		err << "adathresh: " << e.what() << '\n';
		return Usage;
	}
}

} // namespace adathresh::cli
