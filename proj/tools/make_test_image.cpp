// Writes the deterministic synthetic test page as a P5 PGM.
#include <cstdlib>
#include <iostream>
#include <string>

#include "adathresh/bench.hpp"
#include "adathresh/raster.hpp"

int main(int argc, char** argv)
{
	if (argc < 2 || argc > 3)
	{
		std::cerr << "usage: make_test_image OUT.pgm [SIZE]\n";
		return 1;
	}
	const int size = argc == 3 ? std::atoi(argv[2]) : 512;
	try
	{
		const auto img = adathresh::synthetic_document(size, size);
		adathresh::write_file(argv[1], adathresh::save_image(img, adathresh::ImageFormat::P5Gray));
	}
	catch (const std::exception& e)
	{
		std::cerr << "make_test_image: " << e.what() << '\n';
		return 2;
	}
	return 0;
}
