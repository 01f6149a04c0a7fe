#include "dmt/limits.hpp"

#include <atomic>

namespace dmt {

namespace {
std::atomic<std::size_t> g_max_faces{default_max_faces};
}

std::size_t max_faces() { return g_max_faces.load(std::memory_order_relaxed); }

std::size_t set_max_faces(std::size_t limit) {
    return g_max_faces.exchange(limit, std::memory_order_relaxed);
}

} // namespace dmt
