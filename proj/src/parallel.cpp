#include "plab/parallel.hpp"

#include <cstdlib>
#include <string>

namespace plab {

int max_threads() {
    if (const char* env = std::getenv("PRICING_LAB_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n > 0) return n;
        } catch (...) {
            // fall through to auto
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace plab
