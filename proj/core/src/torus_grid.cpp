#include "ztau/torus_grid.hpp"

#include <fftw3.h>

#include <algorithm>
#include <memory>
#include <mutex>

#include "ztau/error.hpp"

namespace ztau {
namespace {

// FFTW planning is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct PlanDeleter {
  void operator()(fftw_plan_s* p) const { fftw_destroy_plan(p); }
};
using Plan = std::unique_ptr<fftw_plan_s, PlanDeleter>;

void transform(std::vector<Complex>& data, std::size_t dims, std::size_t points, int sign) {
  if (dims == 0) return;
  std::vector<int> shape(dims, static_cast<int>(points));
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  Plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan.reset(fftw_plan_dft(static_cast<int>(dims), shape.data(), buf, buf, sign, FFTW_ESTIMATE));
  }
  fftw_execute(plan.get());
}

}  // namespace

TorusGrid::TorusGrid(std::vector<MultiIndex::Coordinate> coordinates, std::size_t points_per_dim,
                     std::size_t max_dims)
    : coordinates_(std::move(coordinates)), points_(points_per_dim), total_(1) {
  std::sort(coordinates_.begin(), coordinates_.end());
  coordinates_.erase(std::unique(coordinates_.begin(), coordinates_.end()), coordinates_.end());
  if (points_ < 2) throw Error(ErrorCode::InvalidArgument, "grid needs at least 2 points per dimension");
  if (coordinates_.size() > max_dims)
    throw Error(ErrorCode::DimensionTooLarge,
                std::to_string(coordinates_.size()) + " active coordinates exceed the limit of " +
                    std::to_string(max_dims));
  for (std::size_t i = 0; i < coordinates_.size(); ++i) {
    if (total_ > kMaxTotalPoints / points_)
      throw Error(ErrorCode::DimensionTooLarge,
                  "grid of " + std::to_string(points_) + "^" + std::to_string(coordinates_.size()) +
                      " points is too large");
    total_ *= points_;
  }
}

TorusGrid TorusGrid::for_series(const FourierSeries& f, const GridOptions& options) {
  return TorusGrid(f.active_coordinates(), options.points_per_dim, options.max_dims);
}

std::vector<std::size_t> TorusGrid::steps(std::size_t offset) const {
  std::vector<std::size_t> out(dims());
  for (std::size_t i = dims(); i-- > 0;) {
    out[i] = offset % points_;
    offset /= points_;
  }
  return out;
}

std::vector<Complex> TorusGrid::sample(const FourierSeries& f) const {
  std::vector<Complex> data(total_, Complex{});
  const auto m = static_cast<std::int64_t>(points_);
  for (const auto& [n, c] : f.terms()) {
    std::size_t offset = 0;
    std::size_t axis = 0;
    auto entry = n.entries().begin();
    for (; axis < dims(); ++axis) {
      std::int64_t v = 0;
      if (entry != n.entries().end() && entry->first == coordinates_[axis]) v = (entry++)->second;
      offset = offset * points_ + static_cast<std::size_t>(((v % m) + m) % m);
    }
    if (entry != n.entries().end())
      throw Error(ErrorCode::InvalidArgument,
                  "series index " + n.to_string() + " leaves the grid coordinates");
    data[offset] += c;
  }
  transform(data, dims(), points_, FFTW_BACKWARD);
  return data;
}

TorusGrid::Spectrum TorusGrid::spectrum(std::span<const Complex> values,
                                        double drop_at_or_below) const {
  if (values.size() != total_) throw Error(ErrorCode::InvalidArgument, "sample count does not match grid");
  std::vector<Complex> data(values.begin(), values.end());
  transform(data, dims(), points_, FFTW_FORWARD);

  const double scale = 1.0 / static_cast<double>(total_);
  const auto m = static_cast<std::int64_t>(points_);
  const std::int64_t half = m / 2;
  Spectrum out;
  std::vector<MultiIndex::Entry> entries;
  for (std::size_t offset = 0; offset < total_; ++offset) {
    Complex c = data[offset] * scale;
    if (std::abs(c) <= drop_at_or_below) continue;
    entries.clear();
    bool resolved = true;
    auto s = steps(offset);
    for (std::size_t axis = 0; axis < dims(); ++axis) {
      auto j = static_cast<std::int64_t>(s[axis]);
      std::int64_t freq = j <= half ? j : j - m;
      if (m % 2 == 0 && j == half) resolved = false;
      if (freq != 0) entries.emplace_back(coordinates_[axis], freq);
    }
    auto n = MultiIndex::from_entries(entries);
    (resolved ? out.resolved : out.unresolved).add_term(n, c);
  }
  return out;
}

}  // namespace ztau
