#include "framekit/kernels.hpp"

#include <cstdlib>
#include <cstring>

#include "backends.hpp"

namespace framekit::kernels {
namespace {

bool cpu_has_avx2_fma() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

std::vector<const Backend*> build_available() {
    std::vector<const Backend*> list{&scalar_backend()};
    if (cpu_has_avx2_fma()) {
        if (const Backend* avx2 = avx2_backend_or_null())
            list.push_back(avx2);
    }
    return list;
}

const Backend* find_backend(const std::string& name) {
    for (const Backend* b : available_backends())
        if (name == b->name)
            return b;
    return nullptr;
}

const Backend* select_initial() {
    if (const char* env = std::getenv("FRAMEKIT_KERNELS")) {
        if (const Backend* b = find_backend(env))
            return b;
    }
    return available_backends().back(); // widest variant this CPU can run
}

const Backend*& active_slot() {
    static const Backend* active = select_initial();
    return active;
}

} // namespace

const std::vector<const Backend*>& available_backends() {
    static const std::vector<const Backend*> list = build_available();
    return list;
}

const Backend& active_backend() { return *active_slot(); }

bool set_active_backend(const std::string& name) {
    const Backend* b = find_backend(name);
    if (!b)
        return false;
    active_slot() = b;
    return true;
}

} // namespace framekit::kernels
