#include "shufflelab/parallel.hpp"

#include <atomic>
#include <cstdlib>

namespace shufflelab::par {

namespace {
std::atomic<int> g_cap{0};
}

void set_thread_cap(int cap) { g_cap.store(cap < 0 ? 0 : cap); }

int max_threads() {
#ifdef _OPENMP
    int n = omp_get_max_threads();
#else
    int n = 1;
#endif
    int cap = g_cap.load();
    if (cap <= 0) {
        if (const char* env = std::getenv("SHUFFLE_LAB_THREADS")) {
            char* end = nullptr;
            const long v = std::strtol(env, &end, 10);
            if (end != env && *end == '\0' && v > 0) cap = static_cast<int>(v);
        }
    }
    if (cap > 0 && cap < n) n = cap;
    return n < 1 ? 1 : n;
}

}  // namespace shufflelab::par
