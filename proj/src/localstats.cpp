#include "adathresh/localstats.hpp"

namespace adathresh
{

namespace
{
std::atomic<std::uint64_t> g_stddev_evaluations{0};
}

std::uint64_t stddev_evaluations() noexcept
{
	return g_stddev_evaluations.load(std::memory_order_relaxed);
}

void reset_stddev_evaluations() noexcept
{
	g_stddev_evaluations.store(0, std::memory_order_relaxed);
}

void detail::note_stddev_evaluation() noexcept
{
	g_stddev_evaluations.fetch_add(1, std::memory_order_relaxed);
}

} // namespace adathresh
