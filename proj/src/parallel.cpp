#include "forceps/parallel.hpp"

#include <cstdlib>
#include <string>

namespace forceps {

int resolve_workers(int requested)
{
    if (requested > 0) return requested;
    if (const char* env = std::getenv("FORCEPS_WORKERS")) {
        try {
            const int n = std::stoi(env);
            if (n > 0) return n;
        } catch (const std::exception&) {
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

} // namespace forceps
