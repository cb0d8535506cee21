#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "hill/errors.hpp"

namespace hill {

// Row-major batch of points of equal dimension.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t dim, std::size_t count = 0) : dim_(dim), data_(dim * count) {}

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return dim_ == 0 ? 0 : data_.size() / dim_; }
  bool empty() const { return data_.empty(); }

  std::span<double> row(std::size_t i) { return {data_.data() + i * dim_, dim_}; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * dim_, dim_}; }

  void push_back(std::span<const double> x) {
    if (x.size() != dim_) throw DimensionMismatch("PointSet: row length differs from dimension");
    data_.insert(data_.end(), x.begin(), x.end());
  }

  void resize(std::size_t count) { data_.resize(count * dim_); }

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

 private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

// Sampling loops are split into fixed-size blocks, each with its own engine
// seeded from (seed, block). Results are therefore independent of the
// thread schedule and identical between serial and parallel kernels.
inline constexpr std::size_t kSampleBlock = 2048;

inline std::mt19937_64 block_engine(std::uint64_t seed, std::uint64_t block) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
  return std::mt19937_64(seq);
}

inline std::size_t block_count(std::size_t n) { return (n + kSampleBlock - 1) / kSampleBlock; }

}  // namespace hill
