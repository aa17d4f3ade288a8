#pragma once

// Deterministic OpenMP helpers. Reductions are split into fixed-size chunks
// whose boundaries do not depend on the thread count, and the chunk partials
// are combined serially in index order, so results are bitwise identical for
// any number of workers.

#include <cstdint>
#include <functional>

#include "fraczeta/core.hpp"

namespace fraczeta::parallel {

inline constexpr std::int64_t kChunk = 1 << 14;

int workers();
void set_workers(int n);

/// Sets the OpenMP worker count for the lifetime of the object.
class ScopedWorkers {
public:
    explicit ScopedWorkers(int n);
    ~ScopedWorkers();
    ScopedWorkers(const ScopedWorkers&) = delete;
    ScopedWorkers& operator=(const ScopedWorkers&) = delete;

private:
    int saved_;
};

/// Sum_{i=first}^{last} f(i), chunked and reassociated in a fixed order.
Complex chunked_sum(std::int64_t first, std::int64_t last, const std::function<Complex(std::int64_t)>& f);

/// Prod_{i=0}^{count-1} f(i) under the same chunking rule. `check` runs on
/// every chunk partial and on every running product of the final combine.
Complex chunked_product(std::int64_t count, const std::function<Complex(std::int64_t)>& f,
                        const std::function<void(Complex)>& check = {});

}  // namespace fraczeta::parallel
