#pragma once

#include <atomic>
#include <functional>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <thread>
#include <unordered_map>
#include <vector>

namespace braidlab {

// Insert-if-absent memo table.  Lookups take a shared lock; a missed key is
// computed outside any lock and the first completed insert wins, so values
// must be deterministic functions of the key.
template <typename K, typename V, typename Hash = std::hash<K>>
class ConcurrentMemo {
 public:
  template <typename F>
  const V& get_or_compute(const K& key, F&& compute) const {
    {
      std::shared_lock lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return *it->second;
    }
    auto value = std::make_shared<const V>(compute());
    std::unique_lock lock(mu_);
    auto [it, inserted] = map_.emplace(key, std::move(value));
    return *it->second;
  }

  bool lookup(const K& key, V* out) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return false;
    *out = *it->second;
    return true;
  }

  void insert(const K& key, V value) const {
    auto ptr = std::make_shared<const V>(std::move(value));
    std::unique_lock lock(mu_);
    map_.emplace(key, std::move(ptr));
  }

  size_t size() const {
    std::shared_lock lock(mu_);
    return map_.size();
  }

 private:
  mutable std::shared_mutex mu_;
  mutable std::unordered_map<K, std::shared_ptr<const V>, Hash> map_;
};

// Runs fn(i) for i in [0, count) on `jobs` threads.  Tasks are claimed from a
// shared atomic counter, so idle workers steal whatever remains.  Exceptions
// propagate after all workers finish.
inline void parallel_for(size_t count, unsigned jobs, const std::function<void(size_t)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::scoped_lock lock(error_mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  unsigned n = std::min<size_t>(jobs, count);
  pool.reserve(n);
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace braidlab
