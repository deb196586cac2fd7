#include "isocrit/parallel.hpp"

#include <cstdlib>
#include <string>

namespace isocrit {

std::size_t worker_count() {
    std::size_t n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    // Re-read on every call so tests can vary the cap within one process.
    if (const char* env = std::getenv("ISOCRIT_THREADS")) {
        try {
            const long requested = std::stol(env);
            if (requested >= 1) n = static_cast<std::size_t>(requested);
        } catch (...) {
            // malformed value: keep the default
        }
    }
    return n;
}

} // namespace isocrit
