#include "fraczeta/parallel.hpp"

#include <omp.h>

#include <vector>

namespace fraczeta::parallel {

int workers() { return omp_get_max_threads(); }

void set_workers(int n) { omp_set_num_threads(n < 1 ? 1 : n); }

ScopedWorkers::ScopedWorkers(int n) : saved_(workers()) { set_workers(n); }

ScopedWorkers::~ScopedWorkers() { set_workers(saved_); }

Complex chunked_sum(std::int64_t first, std::int64_t last, const std::function<Complex(std::int64_t)>& f) {
    if (last < first) return {0.0, 0.0};
    const std::int64_t count = last - first + 1;
    const std::int64_t chunks = (count + kChunk - 1) / kChunk;
    std::vector<Complex> partial(static_cast<std::size_t>(chunks));

#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < chunks; ++c) {
        const std::int64_t lo = first + c * kChunk;
        const std::int64_t hi = std::min(last, lo + kChunk - 1);
        Complex s = 0.0;
        for (std::int64_t i = lo; i <= hi; ++i) s += f(i);
        partial[static_cast<std::size_t>(c)] = s;
    }

    Complex total = 0.0;
    for (const Complex& p : partial) total += p;
    return total;
}

Complex chunked_product(std::int64_t count, const std::function<Complex(std::int64_t)>& f,
                        const std::function<void(Complex)>& check) {
    if (count <= 0) return {1.0, 0.0};
    const std::int64_t chunks = (count + kChunk - 1) / kChunk;
    std::vector<Complex> partial(static_cast<std::size_t>(chunks));
    std::vector<char> failed(static_cast<std::size_t>(chunks), 0);

    // Exceptions cannot cross the OpenMP region; the check is replayed serially
    // below for the first failing chunk.
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < chunks; ++c) {
        const std::int64_t lo = c * kChunk;
        const std::int64_t hi = std::min(count - 1, lo + kChunk - 1);
        Complex p = 1.0;
        for (std::int64_t i = lo; i <= hi; ++i) {
            p *= f(i);
            if (check) {
                try {
                    check(p);
                } catch (...) {
                    failed[static_cast<std::size_t>(c)] = 1;
                }
            }
        }
        partial[static_cast<std::size_t>(c)] = p;
    }

    for (std::int64_t c = 0; c < chunks; ++c) {
        if (!failed[static_cast<std::size_t>(c)]) continue;
        const std::int64_t lo = c * kChunk;
        const std::int64_t hi = std::min(count - 1, lo + kChunk - 1);
        Complex p = 1.0;
        for (std::int64_t i = lo; i <= hi; ++i) {
            p *= f(i);
            check(p);
        }
    }

    Complex total = 1.0;
    for (const Complex& p : partial) {
        total *= p;
        if (check) check(total);
    }
    return total;
}

}  // namespace fraczeta::parallel
