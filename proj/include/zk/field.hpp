#pragma once

#include <complex>
#include <cstdlib>
#include <functional>
#include <new>
#include <span>
#include <vector>

#include "zk/grid.hpp"

namespace zk {

using cplx = std::complex<double>;

template <typename T, std::size_t Alignment = 64>
struct AlignedAllocator {
  using value_type = T;
  template <typename U>
  struct rebind {
    using other = AlignedAllocator<U, Alignment>;
  };

  AlignedAllocator() noexcept = default;
  template <typename U>
  AlignedAllocator(const AlignedAllocator<U, Alignment>&) noexcept {}

  T* allocate(std::size_t count) {
    std::size_t bytes = (count * sizeof(T) + Alignment - 1) / Alignment * Alignment;
    void* p = std::aligned_alloc(Alignment, bytes == 0 ? Alignment : bytes);
    if (p == nullptr) throw std::bad_alloc();
    return static_cast<T*>(p);
  }
  void deallocate(T* p, std::size_t) noexcept { std::free(p); }

  template <typename U>
  bool operator==(const AlignedAllocator<U, Alignment>&) const noexcept {
    return true;
  }
};

using Buffer = std::vector<cplx, AlignedAllocator<cplx>>;

enum class Space { Physical, Frequency };

const char* to_string(Space space);

/// Complex samples of a function on a Grid, tagged with the space they live in.
/// Frequency values use the unnormalised forward DFT (see fft.hpp).
class Field {
 public:
  Field(const Grid& grid, Space space);
  Field(const Grid& grid, Space space, Buffer values);

  static Field from_function(const Grid& grid,
                             const std::function<cplx(const Vec3&)>& fn);

  const Grid& grid() const { return grid_; }
  Space space() const { return space_; }
  std::size_t size() const { return values_.size(); }

  std::span<cplx> values() { return values_; }
  std::span<const cplx> values() const { return values_; }
  cplx& operator[](std::size_t i) { return values_[i]; }
  const cplx& operator[](std::size_t i) const { return values_[i]; }

  void require(Space space, const char* operation) const;

  Field& operator+=(const Field& other);
  Field& operator-=(const Field& other);
  Field& operator*=(cplx scale);

  friend Field operator+(Field a, const Field& b) { return a += b; }
  friend Field operator-(Field a, const Field& b) { return a -= b; }
  friend Field operator*(cplx s, Field a) { return a *= s; }

 private:
  void require_compatible(const Field& other, const char* operation) const;

  Grid grid_;
  Space space_;
  Buffer values_;
};

Field real_part(const Field& field);
Field imag_part(const Field& field);
Field conjugate(const Field& field);

}  // namespace zk
