#ifndef HMW_PARALLEL_HPP
#define HMW_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace hmw {

/// Worker cap: HMW_SPECTRA_THREADS if set to a positive integer, else the
/// hardware concurrency.
inline unsigned thread_limit()
{
    if(const char* env = std::getenv("HMW_SPECTRA_THREADS"))
    {
        try
        {
            const int v = std::stoi(env);
            if(v > 0)
            {
                return static_cast<unsigned>(v);
            }
        }
        catch(const std::exception&)
        {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Evaluates fn(0..count-1) on up to `threads` workers; results keep index order.
/// The first exception thrown by any item is rethrown after all workers join.
template<typename Result, typename Fn>
std::vector<Result> parallel_map(std::size_t count, Fn&& fn, unsigned threads = thread_limit())
{
    std::vector<Result> results(count);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for(std::size_t i = next++; i < count; i = next++)
        {
            try
            {
                results[i] = fn(i);
            }
            catch(...)
            {
                std::lock_guard lock(failure_mutex);
                if(!failure)
                {
                    failure = std::current_exception();
                }
            }
        }
    };

    const auto workers = static_cast<std::size_t>(std::max(1u, threads));
    if(workers == 1 || count < 2)
    {
        worker();
    }
    else
    {
        std::vector<std::jthread> pool;
        for(std::size_t t = 0; t < std::min(workers, count); ++t)
        {
            pool.emplace_back(worker);
        }
    }
    if(failure)
    {
        std::rethrow_exception(failure);
    }
    return results;
}

} // namespace hmw

#endif // HMW_PARALLEL_HPP
