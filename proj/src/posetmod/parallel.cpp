#include "lmod/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace lmod {

int default_jobs() {
    if (const char* e = std::getenv("LMOD_JOBS")) {
        int v = std::atoi(e);
        if (v > 0) return v;
    }
    unsigned h = std::thread::hardware_concurrency();
    return h ? int(h) : 1;
}

void parallel_for(size_t n, int jobs, const std::function<void(size_t)>& body) {
    if (jobs <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr err;
    std::mutex mu;
    auto work = [&] {
        for (size_t i; (i = next++) < n;) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(mu);
                if (!err) err = std::current_exception();
                next = n;
            }
        }
    };
    std::vector<std::thread> ts;
    int k = int(std::min<size_t>(size_t(jobs), n));
    for (int t = 0; t < k; ++t) ts.emplace_back(work);
    for (auto& t : ts) t.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace lmod
