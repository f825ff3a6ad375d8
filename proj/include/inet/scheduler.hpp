#pragma once

#include <condition_variable>
#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <semaphore>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

namespace inet {

/// Anything that can accept a zero-argument task for later execution.
class task_sink {
public:
    virtual ~task_sink() = default;
    virtual void post(std::function<void()> task) = 0;
};

/// Fixed-size pool of worker threads draining a shared FIFO queue.
///
/// Every posted task runs exactly once on some worker. The destructor
/// finishes all queued work (including tasks posted by running tasks)
/// before joining.
class worker_pool final : public task_sink {
public:
    explicit worker_pool(int workers);
    ~worker_pool() override;

    worker_pool(const worker_pool&) = delete;
    worker_pool& operator=(const worker_pool&) = delete;

    void post(std::function<void()> task) override;

    int worker_count() const noexcept { return worker_count_; }

    /// Blocks until the queue is empty and no task is executing.
    void wait_idle();

    /// True when called from one of this process's pool worker threads.
    static bool on_worker_thread() noexcept;

private:
    void run_worker();

    std::mutex mutex_;
    std::condition_variable ready_;
    std::condition_variable idle_;
    std::deque<std::function<void()>> queue_;
    int active_ = 0;
    bool stopping_ = false;
    int worker_count_;
    std::vector<std::thread> threads_;
};

/// Default worker count: INET_POOL_SIZE if set, else hardware concurrency.
int default_pool_size();

namespace detail {

/// Single-assignment cell shared by one promise/resolver pair.
///
/// States: empty -> (waiting) -> resolved. Resolution happens at most
/// once; a second resolve is a programming error and throws. Waiters
/// registered before resolution are handed to `sink` when the value
/// arrives (or invoked inline when no sink is configured); waiters
/// registered after resolution run immediately.
template <class T>
class oneshot_cell {
public:
    explicit oneshot_cell(task_sink* sink = nullptr) : sink_(sink) {}

    void resolve(T value) {
        std::vector<std::function<void(const T&)>> waiters;
        {
            std::lock_guard lock(mutex_);
            if (value_.has_value())
                throw std::logic_error("oneshot_cell: resolved twice");
            value_.emplace(std::move(value));
            waiters.swap(waiters_);
        }
        for (auto& k : waiters) {
            if (sink_)
                sink_->post([k = std::move(k), this] { k(*peek()); });
            else
                k(*peek());
        }
    }

    /// Continuation-style await: never blocks the calling thread.
    void on_resolved(std::function<void(const T&)> k) {
        {
            std::lock_guard lock(mutex_);
            if (!value_.has_value()) {
                waiters_.push_back(std::move(k));
                return;
            }
        }
        k(*peek());
    }

    /// Parks the calling thread until resolution. Driver-side only;
    /// calling this from a pool worker can deadlock the pool.
    const T& block() {
        std::binary_semaphore sem{0};
        on_resolved([&sem](const T&) { sem.release(); });
        sem.acquire();
        return *peek();
    }

    const T* peek() const {
        std::lock_guard lock(mutex_);
        return value_.has_value() ? &*value_ : nullptr;
    }

    bool resolved() const { return peek() != nullptr; }

    /// Steals the resolved value (teardown aid; cell becomes unusable).
    std::optional<T> take_value() {
        std::lock_guard lock(mutex_);
        std::optional<T> out;
        out.swap(value_);
        return out;
    }

private:
    mutable std::mutex mutex_;
    std::optional<T> value_;
    std::vector<std::function<void(const T&)>> waiters_;
    task_sink* sink_;
};

} // namespace detail

template <class T>
class resolver;

template <class T>
class promise {
public:
    /// Registers `k` to run with the value; runs immediately if already
    /// resolved. This is the awaiting primitive: it releases the caller
    /// instead of holding a worker idle.
    void await(std::function<void(const T&)> k) const { cell_->on_resolved(std::move(k)); }

    /// Thread-parking read for callers outside the pool.
    const T& block() const { return cell_->block(); }

    const T* try_get() const { return cell_->peek(); }

private:
    template <class U>
    friend std::pair<promise<U>, resolver<U>> make_future(task_sink*);
    explicit promise(std::shared_ptr<detail::oneshot_cell<T>> cell) : cell_(std::move(cell)) {}
    std::shared_ptr<detail::oneshot_cell<T>> cell_;
};

template <class T>
class resolver {
public:
    /// Single assignment: a second call throws std::logic_error.
    void resolve(T value) const { cell_->resolve(std::move(value)); }

private:
    template <class U>
    friend std::pair<promise<U>, resolver<U>> make_future(task_sink*);
    explicit resolver(std::shared_ptr<detail::oneshot_cell<T>> cell) : cell_(std::move(cell)) {}
    std::shared_ptr<detail::oneshot_cell<T>> cell_;
};

/// Creates the two halves of a fresh single-assignment cell. When a sink
/// is given, continuations pending at resolution time are scheduled onto
/// it instead of running in the resolver's thread.
template <class T>
std::pair<promise<T>, resolver<T>> make_future(task_sink* sink = nullptr) {
    auto cell = std::make_shared<detail::oneshot_cell<T>>(sink);
    return {promise<T>(cell), resolver<T>(cell)};
}

} // namespace inet
