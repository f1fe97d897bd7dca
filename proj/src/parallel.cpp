#include "hopset/parallel.hpp"

namespace hopset {

namespace {
std::atomic<unsigned> g_threads{0};
}

void set_thread_count(unsigned threads) { g_threads.store(threads); }

unsigned thread_count() {
    unsigned t = g_threads.load();
    if (t == 0) t = std::thread::hardware_concurrency();
    return t == 0 ? 1 : t;
}

}  // namespace hopset
