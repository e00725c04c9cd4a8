#include "zk/field.hpp"

#include <string>

#include "zk/error.hpp"
#include "zk/kernels.hpp"

namespace zk {

const char* to_string(Space space) {
  return space == Space::Physical ? "Physical" : "Frequency";
}

Field::Field(const Grid& grid, Space space)
    : grid_(grid), space_(space), values_(grid.size(), cplx{0.0, 0.0}) {}

Field::Field(const Grid& grid, Space space, Buffer values)
    : grid_(grid), space_(space), values_(std::move(values)) {
  if (values_.size() != grid_.size())
    throw ContractError("field value count " + std::to_string(values_.size()) +
                        " does not match grid size " + std::to_string(grid_.size()));
}

Field Field::from_function(const Grid& grid, const std::function<cplx(const Vec3&)>& fn) {
  Field out(grid, Space::Physical);
  for (std::size_t i = 0; i < grid.size(); ++i) out[i] = fn(grid.position(i));
  return out;
}

void Field::require(Space space, const char* operation) const {
  if (space_ != space)
    throw ContractError(std::string(operation) + ": expected a " + to_string(space) +
                        " field, got " + to_string(space_));
}

void Field::require_compatible(const Field& other, const char* operation) const {
  if (!(grid_ == other.grid_)) throw ContractError(std::string(operation) + ": grid mismatch");
  if (space_ != other.space_)
    throw ContractError(std::string(operation) + ": space mismatch (" + to_string(space_) +
                        " vs " + to_string(other.space_) + ")");
}

Field& Field::operator+=(const Field& other) {
  require_compatible(other, "operator+=");
  kernels::parallel::axpy(1.0, other.values(), values());
  return *this;
}

Field& Field::operator-=(const Field& other) {
  require_compatible(other, "operator-=");
  kernels::parallel::axpy(-1.0, other.values(), values());
  return *this;
}

Field& Field::operator*=(cplx scale) {
  for (auto& v : values_) v *= scale;
  return *this;
}

Field real_part(const Field& field) {
  Field out(field.grid(), field.space());
  for (std::size_t i = 0; i < field.size(); ++i) out[i] = field[i].real();
  return out;
}

Field imag_part(const Field& field) {
  Field out(field.grid(), field.space());
  for (std::size_t i = 0; i < field.size(); ++i) out[i] = field[i].imag();
  return out;
}

Field conjugate(const Field& field) {
  Field out(field.grid(), field.space());
  for (std::size_t i = 0; i < field.size(); ++i) out[i] = std::conj(field[i]);
  return out;
}

}  // namespace zk
