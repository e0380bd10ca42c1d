#include "wgmsim/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

namespace wgmsim::kern {

namespace {

const Kernels* pick_default() {
    if (const char* env = std::getenv("WGMSIM_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return &scalar_kernels();
        if (std::strcmp(env, "avx2") == 0 && avx2_kernels()) return avx2_kernels();
    }
    if (const Kernels* k = avx2_kernels()) return k;
    return &scalar_kernels();
}

std::atomic<const Kernels*>& slot() {
    static std::atomic<const Kernels*> k{pick_default()};
    return k;
}

}  // namespace

const Kernels& active() { return *slot().load(std::memory_order_acquire); }

void select(const char* name) {
    if (std::strcmp(name, "scalar") == 0) {
        slot().store(&scalar_kernels(), std::memory_order_release);
    } else if (std::strcmp(name, "avx2") == 0) {
        const Kernels* k = avx2_kernels();
        if (!k) throw std::runtime_error("avx2 kernels not available on this machine");
        slot().store(k, std::memory_order_release);
    } else if (std::strcmp(name, "auto") == 0) {
        slot().store(pick_default(), std::memory_order_release);
    } else {
        throw std::runtime_error(std::string("unknown kernel backend: ") + name);
    }
}

}  // namespace wgmsim::kern
