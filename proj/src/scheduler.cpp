#include "inet/scheduler.hpp"

#include <cstdlib>
#include <string>

namespace inet {

namespace {
thread_local bool tls_on_worker = false;
}

worker_pool::worker_pool(int workers) : worker_count_(workers) {
    if (workers < 1)
        throw std::invalid_argument("worker_pool: worker count must be >= 1");
    threads_.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i)
        threads_.emplace_back([this] { run_worker(); });
}

worker_pool::~worker_pool() {
    {
        std::lock_guard lock(mutex_);
        stopping_ = true;
    }
    ready_.notify_all();
    for (auto& t : threads_)
        t.join();
}

void worker_pool::post(std::function<void()> task) {
    {
        std::lock_guard lock(mutex_);
        queue_.push_back(std::move(task));
    }
    ready_.notify_one();
}

void worker_pool::wait_idle() {
    std::unique_lock lock(mutex_);
    idle_.wait(lock, [this] { return queue_.empty() && active_ == 0; });
}

bool worker_pool::on_worker_thread() noexcept { return tls_on_worker; }

void worker_pool::run_worker() {
    tls_on_worker = true;
    std::unique_lock lock(mutex_);
    for (;;) {
        ready_.wait(lock, [this] { return stopping_ || !queue_.empty(); });
        if (queue_.empty()) {
            if (stopping_)
                return;
            continue;
        }
        auto task = std::move(queue_.front());
        queue_.pop_front();
        ++active_;
        lock.unlock();
        task();
        lock.lock();
        --active_;
        if (queue_.empty() && active_ == 0)
            idle_.notify_all();
    }
}

int default_pool_size() {
    if (const char* env = std::getenv("INET_POOL_SIZE")) {
        try {
            int n = std::stoi(env);
            if (n >= 1)
                return n;
        } catch (const std::exception&) {
            // fall through to hardware default
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

} // namespace inet
