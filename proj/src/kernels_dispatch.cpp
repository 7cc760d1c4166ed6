#include "pdeaccel/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace pdeaccel::kernels {

#ifdef PDEACCEL_HAVE_AVX2
namespace detail {
const KernelTable& avx2_impl();
}
#endif

const KernelTable* avx2_table() {
#ifdef PDEACCEL_HAVE_AVX2
    if (__builtin_cpu_supports("avx2"))
        return &detail::avx2_impl();
#endif
    return nullptr;
}

namespace {

std::atomic<const KernelTable*> g_active{nullptr};

const KernelTable* pick_auto() {
    if (const KernelTable* t = avx2_table())
        return t;
    return &scalar_table();
}

const KernelTable* initial_choice() {
    if (const char* env = std::getenv("PDEACCEL_KERNELS")) {
        std::string s(env);
        if (s == "scalar")
            return &scalar_table();
        if (s == "avx2") {
            if (const KernelTable* t = avx2_table())
                return t;
        }
    }
    return pick_auto();
}

} // namespace

const KernelTable& active() {
    const KernelTable* t = g_active.load(std::memory_order_acquire);
    if (!t) {
        t = initial_choice();
        g_active.store(t, std::memory_order_release);
    }
    return *t;
}

bool select(std::string_view name) {
    if (name == "scalar") {
        g_active.store(&scalar_table(), std::memory_order_release);
        return true;
    }
    if (name == "avx2") {
        if (const KernelTable* t = avx2_table()) {
            g_active.store(t, std::memory_order_release);
            return true;
        }
        return false;
    }
    if (name == "auto") {
        g_active.store(pick_auto(), std::memory_order_release);
        return true;
    }
    return false;
}

} // namespace pdeaccel::kernels
