#include "sparsedetect/window.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sparsedetect {

WindowSet build_window_set(int k1, double r, int cap) {
  if (k1 < 1) throw std::invalid_argument("build_window_set: k1 must be >= 1");
  if (cap < 1) throw std::invalid_argument("build_window_set: cap must be >= 1");
  if (!(r > 1.0)) throw std::invalid_argument("build_window_set: r must be > 1");

  WindowSet ws;
  ws.base = k1;
  ws.ratio = r;
  ws.cap = cap;
  for (int k = 1; k <= std::min(k1, cap); ++k) ws.lengths.push_back(k);
  for (int j = 1;; ++j) {
    const double v = std::pow(r, j) * k1;
    if (v >= static_cast<double>(cap) + 1.0) break;  // first floor(r^j k1) > cap ends the tail
    const int f = static_cast<int>(v);
    if (ws.lengths.empty() || f != ws.lengths.back()) ws.lengths.push_back(f);
  }
  std::sort(ws.lengths.begin(), ws.lengths.end());
  ws.lengths.erase(std::unique(ws.lengths.begin(), ws.lengths.end()), ws.lengths.end());
  return ws;
}

ObservationBuffer::ObservationBuffer(int num_streams, WindowSet windows)
    : n_(num_streams), windows_(std::move(windows)) {
  if (n_ < 1) throw std::invalid_argument("ObservationBuffer: num_streams must be >= 1");
  if (windows_.lengths.empty())
    throw std::invalid_argument("ObservationBuffer: empty window set");
  cap_ = windows_.max_length();
  ring_.assign(static_cast<std::size_t>(cap_ + 1) * n_, 0.0);
  sums_.assign(windows_.lengths.size() * static_cast<std::size_t>(n_), 0.0);
  totals_.assign(n_, 0.0);
}

void ObservationBuffer::push(std::span<const double> x) {
  if (static_cast<int>(x.size()) != n_)
    throw std::invalid_argument("ObservationBuffer::push: length mismatch");

  const std::int64_t t_new = t_ + 1;
  double* slot = ring_slot(t_new);
  std::copy(x.begin(), x.end(), slot);
  for (int i = 0; i < n_; ++i) totals_[i] += x[i];

  const auto& lens = windows_.lengths;
  for (std::size_t ki = 0; ki < lens.size(); ++ki) {
    const int k = lens[ki];
    double* row = sums_.data() + ki * n_;
    const std::int64_t leaving = t_new - k;  // observation dropping out of the window
    if (leaving >= 1) {
      const double* old = ring_slot(leaving);
      for (int i = 0; i < n_; ++i) row[i] += x[i] - old[i];
    } else {
      for (int i = 0; i < n_; ++i) row[i] += x[i];
    }
  }

  t_ = t_new;
  if (t_ % kRefreshPeriod == 0) refresh_sums();
}

void ObservationBuffer::refresh_sums() {
  const auto& lens = windows_.lengths;
  for (std::size_t ki = 0; ki < lens.size(); ++ki) {
    const int k = lens[ki];
    double* row = sums_.data() + ki * n_;
    std::fill(row, row + n_, 0.0);
    const std::int64_t from = std::max<std::int64_t>(1, t_ - k + 1);
    for (std::int64_t u = from; u <= t_; ++u) {
      const double* s = ring_slot(u);
      for (int i = 0; i < n_; ++i) row[i] += s[i];
    }
  }
}

void ObservationBuffer::window_sums(int k, std::span<double> out) const {
  if (static_cast<int>(out.size()) != n_)
    throw std::invalid_argument("window_sums: output length mismatch");
  if (k < 1 || k > cap_ || static_cast<std::int64_t>(k) > t_)
    throw std::out_of_range("window_sums: k must satisfy 1 <= k <= min(time, capacity)");
  const auto& lens = windows_.lengths;
  const auto it = std::lower_bound(lens.begin(), lens.end(), k);
  if (it != lens.end() && *it == k) {
    const auto row = sums_row(static_cast<int>(it - lens.begin()));
    std::copy(row.begin(), row.end(), out.begin());
    return;
  }
  std::fill(out.begin(), out.end(), 0.0);
  for (std::int64_t u = t_ - k + 1; u <= t_; ++u) {
    const double* s = ring_slot(u);
    for (int i = 0; i < n_; ++i) out[i] += s[i];
  }
}

void ObservationBuffer::window_zscores(int k, std::span<double> out) const {
  window_sums(k, out);
  const double inv = 1.0 / std::sqrt(static_cast<double>(k));
  for (double& v : out) v *= inv;
}

}  // namespace sparsedetect
