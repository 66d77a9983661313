// summation.hpp
//
// Compensated (Neumaier) accumulation and a deterministic chunked reduction:
// terms are grouped into fixed chunks of 4096, each chunk is summed in index
// order, and chunk totals are combined serially in chunk order.  The result
// is bit-identical for any worker count, which the experiments module relies
// on for reproducible CSV output.

#pragma once

#include <atomic>
#include <cmath>
#include <cstddef>
#include <thread>
#include <vector>

namespace hardyz {

struct NeumaierSum {
    double s = 0.0;
    double c = 0.0;

    void add(double x) {
        double t = s + x;
        if (std::fabs(s) >= std::fabs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double value() const { return s + c; }
};

inline constexpr std::size_t kReductionChunk = 4096;

// Run fn(chunk_index, lo, hi) over [0,count) split into fixed chunks.
// Chunk boundaries do not depend on the worker count.
template <class Fn>
void parallel_chunks(std::size_t count, int threads, Fn fn,
                     std::size_t chunk = kReductionChunk) {
    if (count == 0) return;
    const std::size_t nchunks = (count + chunk - 1) / chunk;
    if (threads <= 1 || nchunks == 1) {
        for (std::size_t k = 0; k < nchunks; ++k)
            fn(k, k * chunk, std::min(count, (k + 1) * chunk));
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t k = next.fetch_add(1);
            if (k >= nchunks) return;
            fn(k, k * chunk, std::min(count, (k + 1) * chunk));
        }
    };
    std::vector<std::thread> pool;
    const int nw = std::min<std::size_t>(static_cast<std::size_t>(threads), nchunks);
    pool.reserve(nw);
    for (int i = 0; i < nw; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

// Deterministic sum of term(i) for i in [0,count).
template <class Term>
double chunked_sum(std::size_t count, Term term, int threads = 1,
                   std::size_t chunk = kReductionChunk) {
    if (count == 0) return 0.0;
    const std::size_t nchunks = (count + chunk - 1) / chunk;
    std::vector<double> partial(nchunks, 0.0);
    parallel_chunks(
        count, threads,
        [&](std::size_t k, std::size_t lo, std::size_t hi) {
            NeumaierSum acc;
            for (std::size_t i = lo; i < hi; ++i) acc.add(term(i));
            partial[k] = acc.value();
        },
        chunk);
    NeumaierSum total;
    for (double p : partial) total.add(p);
    return total.value();
}

// Same, but the terms are already materialized.
inline double chunked_sum_of(const std::vector<double>& v, std::size_t count,
                             std::size_t chunk = kReductionChunk) {
    NeumaierSum total;
    std::size_t i = 0;
    while (i < count) {
        std::size_t hi = std::min(count, i + chunk);
        NeumaierSum acc;
        for (; i < hi; ++i) acc.add(v[i]);
        total.add(acc.value());
    }
    return total.value();
}

}  // namespace hardyz
