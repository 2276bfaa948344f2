#pragma once
// Streaming windowed sums. ObservationBuffer keeps, per stream, the running
// sum over every window length in the WindowSet, updated in O(1) per
// (stream, window) pair as observations arrive.

#include <cstdint>
#include <span>
#include <vector>

namespace sparsedetect {

/// Window lengths {1..k1} plus the geometric tail {floor(r^j * k1)},
/// truncated at cap, deduplicated, sorted.
struct WindowSet {
  int base = 1;       // k1
  double ratio = 2.0; // r
  int cap = 1;
  std::vector<int> lengths;

  int max_length() const { return lengths.empty() ? 0 : lengths.back(); }
};

WindowSet build_window_set(int k1, double r, int cap);

class ObservationBuffer {
 public:
  ObservationBuffer(int num_streams, WindowSet windows);

  /// Append one observation per stream; advances time by exactly 1.
  void push(std::span<const double> x);

  std::int64_t time() const { return t_; }
  int num_streams() const { return n_; }
  int capacity() const { return cap_; }
  const WindowSet& windows() const { return windows_; }

  /// Sum of the last k observations per stream. k must satisfy
  /// k <= min(time, capacity); any such k is accepted, window lengths in the
  /// set are served from the running sums, others recomputed from the ring.
  void window_sums(int k, std::span<double> out) const;

  /// window_sums scaled by 1/sqrt(k).
  void window_zscores(int k, std::span<double> out) const;

  /// Running total per stream of everything ever pushed.
  std::span<const double> totals() const { return totals_; }

  // Hot-path access: row of running sums for windows_.lengths[k_index].
  std::span<const double> sums_row(int k_index) const {
    return {sums_.data() + static_cast<std::size_t>(k_index) * n_, static_cast<std::size_t>(n_)};
  }

 private:
  void refresh_sums();
  const double* ring_slot(std::int64_t time_index) const {
    return ring_.data() + static_cast<std::size_t>(time_index % (cap_ + 1)) * n_;
  }
  double* ring_slot(std::int64_t time_index) {
    return ring_.data() + static_cast<std::size_t>(time_index % (cap_ + 1)) * n_;
  }

  int n_;
  int cap_;
  WindowSet windows_;
  std::int64_t t_ = 0;
  std::vector<double> ring_;    // (cap_+1) slots of n_ observations
  std::vector<double> sums_;    // |lengths| rows of n_ running window sums
  std::vector<double> totals_;  // prefix sums per stream

  // Incremental add/subtract drifts at the rounding level over very long
  // runs; the rows are recomputed exactly from the ring at this period.
  static constexpr std::int64_t kRefreshPeriod = std::int64_t(1) << 16;
};

}  // namespace sparsedetect
