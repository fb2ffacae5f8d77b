#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "dung/error.hpp"

namespace dung {

/// Optional wall-clock limit polled by long-running engines.
///
/// `poll()` is cheap: it only consults the clock every few hundred calls.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;

  static Deadline none() { return {}; }
  static Deadline at(Clock::time_point when) {
    Deadline d;
    d.when_ = when;
    return d;
  }
  template <class Rep, class Period>
  static Deadline after(std::chrono::duration<Rep, Period> budget) {
    return at(Clock::now() + std::chrono::duration_cast<Clock::duration>(budget));
  }

  bool bounded() const noexcept { return when_.has_value(); }
  std::optional<Clock::time_point> when() const noexcept { return when_; }

  bool expired() const { return when_ && Clock::now() >= *when_; }

  /// Throws Timeout if the deadline has passed.
  void check() const {
    if (expired()) throw Timeout();
  }

  /// Amortized `check()`.
  void poll() const {
    if (!when_) return;
    if ((++ticks_ & 0xFF) == 0) check();
  }

 private:
  std::optional<Clock::time_point> when_;
  mutable std::uint32_t ticks_ = 0;
};

}  // namespace dung
