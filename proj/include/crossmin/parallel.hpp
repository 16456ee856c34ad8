#pragma once

#include <exception>
#include <mutex>

namespace crossmin {

/// Caps the number of worker threads used by parallel loops. Values < 1
/// restore the default (all available cores).
void set_thread_count(int threads);
int thread_count();

/// Carries the first exception thrown inside an OpenMP region out of it.
class ExceptionRelay {
 public:
  template <class F>
  void run(F&& f) noexcept {
    try {
      f();
    } catch (...) {
      std::lock_guard lock(mutex_);
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mutex_;
  std::exception_ptr error_;
};

}  // namespace crossmin
