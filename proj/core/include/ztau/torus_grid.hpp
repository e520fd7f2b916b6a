#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ztau/series.hpp"

namespace ztau {

/// Uniform tensor grid on T^d, where the d axes are identified with a fixed
/// list of prime coordinates. Grid point j has z_k = exp(2 pi i j_k / M).
/// Samples are stored row-major with the first coordinate varying slowest.
class TorusGrid {
 public:
  /// Largest number of samples a grid may hold.
  static constexpr std::size_t kMaxTotalPoints = std::size_t{1} << 24;

  /// Throws DimensionTooLarge if coordinates.size() > max_dims or the grid
  /// would exceed kMaxTotalPoints samples.
  TorusGrid(std::vector<MultiIndex::Coordinate> coordinates, std::size_t points_per_dim,
            std::size_t max_dims = kDefaultMaxDims);

  /// Grid over the active coordinates of f.
  static TorusGrid for_series(const FourierSeries& f, const GridOptions& options);

  const std::vector<MultiIndex::Coordinate>& coordinates() const { return coordinates_; }
  std::size_t dims() const { return coordinates_.size(); }
  std::size_t points_per_dim() const { return points_; }
  std::size_t total_points() const { return total_; }

  /// Exact values of f at every grid point (aliasing does not affect point
  /// values). f may only touch the grid's coordinates.
  std::vector<Complex> sample(const FourierSeries& f) const;

  struct Spectrum {
    /// Coefficients whose index has |n_k| <= M/2 - 1 on every axis.
    FourierSeries resolved;
    /// Coefficients at the Nyquist frequency M/2 on some axis; these cannot
    /// be told apart from their aliases.
    FourierSeries unresolved;
  };

  /// Discrete Fourier coefficients of sampled values, with frequencies
  /// read in (-M/2, M/2] per axis. Coefficients with magnitude at or below
  /// drop_at_or_below are omitted.
  Spectrum spectrum(std::span<const Complex> values, double drop_at_or_below = 0.0) const;

  /// Grid point at the given row-major offset, as per-axis integer steps.
  std::vector<std::size_t> steps(std::size_t offset) const;

 private:
  std::vector<MultiIndex::Coordinate> coordinates_;
  std::size_t points_;
  std::size_t total_;
};

}  // namespace ztau
