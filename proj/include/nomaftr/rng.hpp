// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

namespace nomaftr::rng {

using Counter = std::array<std::uint32_t, 4>;
using Key = std::array<std::uint32_t, 2>;

//! Philox4x32 with 10 rounds.
Counter philox4x32(Counter counter, Key key);

/*!
 * Reproducible substream addressed by (seed, chunk, tag).
 *
 * Successive calls walk the low counter word; the chunk and tag occupy the
 * high words, so distinct addresses never overlap.
 */
class Stream {
  public:
    using result_type = std::uint64_t;

    Stream(std::uint64_t seed, std::uint32_t chunk, std::uint32_t tag);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
    result_type operator()();

    //! Uniform on the open interval (0, 1).
    double uniform();
    //! Standard normal (Box-Muller, pairs cached).
    double normal();
    //! Gamma(shape, 1) by Marsaglia-Tsang rejection.
    double gamma(double shape);

  private:
    Counter counter_;
    Key key_;
    Counter block_{};
    int used_ = 4;
    bool has_spare_ = false;
    double spare_ = 0;

    std::uint32_t next32();
};

//! Samples per substream chunk.
inline constexpr std::size_t kChunkSize = std::size_t(1) << 16;

inline std::size_t chunk_count(std::size_t n)
{
    return (n + kChunkSize - 1) / kChunkSize;
}

//! Worker threads: NOMAFTR_THREADS if set, else hardware concurrency.
unsigned worker_count();

//! Runs body(i) for i in [0, n) across the workers; rethrows the first error.
template<class Body>
void parallel_for(std::size_t n, Body&& body)
{
    const unsigned workers = std::min<std::size_t>(worker_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                next = n;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (unsigned w = 1; w < workers; ++w)
        pool.emplace_back(run);
    run();
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

}  // namespace nomaftr::rng
