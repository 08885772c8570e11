#include "adathresh/integral.hpp"

namespace adathresh
{

WindowSpec::WindowSpec(int size) : size_(size)
{
	if (size < 3 || size % 2 == 0)
	{
		throw ValidationError("window size must be odd and >= 3, got " + std::to_string(size));
	}
}

} // namespace adathresh
