#include "ihxlab/config.hpp"

#include <cstdlib>
#include <string>

#include "ihxlab/errors.hpp"

namespace ihxlab {

namespace {

Limits from_environment() {
    Limits l;
    if (const char* cap = std::getenv("IHXLAB_TERM_CAP")) {
        try {
            auto v = std::stoull(cap);
            if (v > 0) l.term_cap = v;
        } catch (...) {
        }
    }
    if (const char* t = std::getenv("IHXLAB_THREADS")) {
        try {
            auto v = std::stoul(t);
            if (v > 0) l.threads = static_cast<unsigned>(v);
        } catch (...) {
        }
    }
    return l;
}

} // namespace

Limits& limits() {
    static Limits l = from_environment();
    return l;
}

void check_terms(std::uint64_t estimate, const char* what) {
    if (estimate > limits().term_cap) {
        throw CapacityError(std::string(what) + ": estimated " + std::to_string(estimate) +
                            " intermediate terms exceeds cap " + std::to_string(limits().term_cap));
    }
}

} // namespace ihxlab
