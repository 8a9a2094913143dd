#pragma once

#include <cstddef>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace hopfforge {

/// Worker count from HOPFFORGE_THREADS, else the hardware concurrency (at least 1).
int worker_count();

/// Runs fn(0..n-1) on worker_count() threads. The first exception thrown by
/// any call is rethrown after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

/// Concurrent memo table. Values are computed outside the lock; if two
/// threads race on a key the first insertion wins and both see it.
template <class Key, class Value, class Hash = std::hash<Key>>
class MemoTable {
public:
    template <class F>
    const Value& get(const Key& k, F&& compute) const
    {
        {
            std::shared_lock lock(mutex_);
            if (auto it = map_.find(k); it != map_.end())
                return it->second;
        }
        Value v = compute();
        std::unique_lock lock(mutex_);
        return map_.try_emplace(k, std::move(v)).first->second;
    }
    [[nodiscard]] std::size_t size() const
    {
        std::shared_lock lock(mutex_);
        return map_.size();
    }

private:
    mutable std::shared_mutex mutex_;
    mutable std::unordered_map<Key, Value, Hash> map_;
};

} // namespace hopfforge
