#pragma once

#include <cstddef>
#include <cstdint>

namespace ihxlab {

/// Process-wide resource caps. Defaults come from IHXLAB_TERM_CAP / IHXLAB_THREADS
/// when set, otherwise 1e8 intermediate terms and one worker thread.
struct Limits {
    std::uint64_t term_cap = 100'000'000;
    std::uint64_t class_cap = 2'000'000;
    unsigned threads = 1;
};

Limits& limits();

/// Throws CapacityError naming `what` when `estimate` exceeds the term cap.
void check_terms(std::uint64_t estimate, const char* what);

} // namespace ihxlab
