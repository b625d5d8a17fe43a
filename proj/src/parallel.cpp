#include "reflexorb/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace reflexorb {

std::size_t thread_cap()
{
    std::size_t cap = 0;
    if (const char* env = std::getenv("REFLEXORB_THREADS")) {
        const char* end = env + std::strlen(env);
        if (std::from_chars(env, end, cap).ec != std::errc{})
            cap = 0;
    }
    if (cap == 0)
        cap = std::thread::hardware_concurrency();
    return cap == 0 ? 1 : cap;
}

}  // namespace reflexorb
