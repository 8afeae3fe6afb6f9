#pragma once

#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace trav::core {

// All reductions below combine fixed-size chunks in index order, so the
// result is bitwise identical for any thread count and bitwise identical
// to the *_serial reference variants. Tests assert that equality.

inline constexpr std::int64_t kDefaultChunk = 1024;

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

template <class F>
void parallel_for(std::int64_t n, F&& body) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) body(i);
}

// body(begin, end) over half-open ranges; ranges are fixed-size chunks.
template <class F>
void parallel_for_ranges(std::int64_t n, std::int64_t chunk, F&& body) {
    const std::int64_t nc = (n + chunk - 1) / chunk;
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < nc; ++c) {
        const std::int64_t b = c * chunk;
        const std::int64_t e = (b + chunk < n) ? b + chunk : n;
        body(b, e);
    }
}

template <class F>
void serial_for_ranges(std::int64_t n, std::int64_t chunk, F&& body) {
    const std::int64_t nc = (n + chunk - 1) / chunk;
    for (std::int64_t c = 0; c < nc; ++c) {
        const std::int64_t b = c * chunk;
        const std::int64_t e = (b + chunk < n) ? b + chunk : n;
        body(b, e);
    }
}

namespace detail {

template <class F>
double combine_chunk_sums(std::int64_t n, std::int64_t chunk, F&& term,
                          bool parallel) {
    const std::int64_t nc = (n + chunk - 1) / chunk;
    std::vector<double> partial(static_cast<std::size_t>(nc), 0.0);
    auto chunk_body = [&](std::int64_t c) {
        const std::int64_t b = c * chunk;
        const std::int64_t e = (b + chunk < n) ? b + chunk : n;
        double acc = 0.0;
        for (std::int64_t i = b; i < e; ++i) acc += term(i);
        partial[static_cast<std::size_t>(c)] = acc;
    };
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t c = 0; c < nc; ++c) chunk_body(c);
    } else {
        for (std::int64_t c = 0; c < nc; ++c) chunk_body(c);
    }
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

// body(begin, end, acc) accumulates a chunk's contribution into acc[0..width).
template <class F>
void combine_chunk_accumulate(std::int64_t n, std::int64_t chunk,
                              std::size_t width, double* out, F&& body,
                              bool parallel) {
    const std::int64_t nc = (n + chunk - 1) / chunk;
    std::vector<double> scratch(static_cast<std::size_t>(nc) * width, 0.0);
    auto chunk_body = [&](std::int64_t c) {
        const std::int64_t b = c * chunk;
        const std::int64_t e = (b + chunk < n) ? b + chunk : n;
        body(b, e, scratch.data() + static_cast<std::size_t>(c) * width);
    };
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t c = 0; c < nc; ++c) chunk_body(c);
    } else {
        for (std::int64_t c = 0; c < nc; ++c) chunk_body(c);
    }
    // Per-slot combine preserves chunk order, so it may itself run parallel.
    auto combine = [&](std::int64_t j) {
        double acc = out[j];
        for (std::int64_t c = 0; c < nc; ++c)
            acc += scratch[static_cast<std::size_t>(c) * width +
                           static_cast<std::size_t>(j)];
        out[j] = acc;
    };
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t j = 0; j < static_cast<std::int64_t>(width); ++j)
            combine(j);
    } else {
        for (std::int64_t j = 0; j < static_cast<std::int64_t>(width); ++j)
            combine(j);
    }
}

}  // namespace detail

template <class F>
double chunked_sum(std::int64_t n, F&& term,
                   std::int64_t chunk = kDefaultChunk) {
    return detail::combine_chunk_sums(n, chunk, term, true);
}

template <class F>
double chunked_sum_serial(std::int64_t n, F&& term,
                          std::int64_t chunk = kDefaultChunk) {
    return detail::combine_chunk_sums(n, chunk, term, false);
}

template <class F>
void chunked_accumulate(std::int64_t n, std::int64_t chunk, std::size_t width,
                        double* out, F&& body) {
    detail::combine_chunk_accumulate(n, chunk, width, out, body, true);
}

template <class F>
void chunked_accumulate_serial(std::int64_t n, std::int64_t chunk,
                               std::size_t width, double* out, F&& body) {
    detail::combine_chunk_accumulate(n, chunk, width, out, body, false);
}

}  // namespace trav::core
