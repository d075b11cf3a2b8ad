#ifndef VOA_UTIL_HPP
#define VOA_UTIL_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace voa {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/* bad algebra name, rank above cap, malformed options: exit code 2 */
struct ConfigError : Error {
  using Error::Error;
};

/* bucket dimension or wall clock cap hit: exit code 3 */
struct ResourceCapError : Error {
  using Error::Error;
};

inline void hash_mix(std::size_t& h, std::size_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
}

/* parallelism cap from VOA_THREADS, default 1 */
int thread_count();

/* static chunking; f(i) must only touch state owned by index i */
template <class F>
void parallel_for(std::size_t n, F&& f) {
  int nt = thread_count();
  if (nt <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::size_t workers = std::min<std::size_t>(nt, n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += workers) f(i);
    });
  for (auto& th : pool) th.join();
}

/* per command resource budget */
class Limits {
 public:
  Limits() : start_(std::chrono::steady_clock::now()) {}
  Limits(long bucket_cap, double time_cap_s)
      : bucket_cap_(bucket_cap),
        time_cap_s_(time_cap_s),
        start_(std::chrono::steady_clock::now()) {}

  void check_bucket(long dim, const std::string& where) const {
    if (bucket_cap_ > 0 && dim > bucket_cap_)
      throw ResourceCapError("bucket dimension cap exceeded (" +
                             std::to_string(dim) + " > " +
                             std::to_string(bucket_cap_) + ") in " + where);
  }
  void check_time(const std::string& where) const {
    if (time_cap_s_ <= 0) return;
    auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start_)
                  .count();
    if (dt > time_cap_s_)
      throw ResourceCapError("wall clock cap exceeded in " + where);
  }

  long bucket_cap() const { return bucket_cap_; }

 private:
  long bucket_cap_ = 20000;
  double time_cap_s_ = 1800.0;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace voa

#endif
