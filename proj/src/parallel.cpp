#include "setalg/parallel.hpp"

namespace setalg {

namespace {
std::atomic<unsigned> g_threads{1};
}

void set_max_threads(unsigned n) noexcept { g_threads.store(n == 0 ? 1 : n); }

unsigned max_threads() noexcept { return g_threads.load(); }

}  // namespace setalg
