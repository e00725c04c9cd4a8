#pragma once

#include "zk/field.hpp"

namespace zk {

enum class Branch { Plus, Minus };

inline double sign_of(Branch b) { return b == Branch::Plus ? 1.0 : -1.0; }
inline Branch opposite(Branch b) { return b == Branch::Plus ? Branch::Minus : Branch::Plus; }
const char* to_string(Branch b);

/// Schrodinger profile f = e^{-it Delta} u and wave profile g+ = e^{+it Lambda} w+,
/// both in frequency space. g- is never stored: g^-(k) = -conj(g^+(-k)).
struct ProfilePair {
  Field fhat;
  Field gplus_hat;
  double t = 0.0;
};

/// e^{it Delta}: frequency values times exp(-i t |k|^2).
Field schrodinger_group(const Field& field, double t);

/// e^{-+ it Lambda}: frequency values times exp(-+ i t |k|) (Plus -> minus sign).
Field wave_half_group(const Field& field, Branch sign, double t);

Field schrodinger_profile_of(const Field& u, double t);   // f = e^{-it Delta} u
Field schrodinger_physical_of(const Field& f, double t);  // u = e^{it Delta} f
Field wave_profile_of(const Field& w, Branch branch, double t);   // g = e^{+-it Lambda} w
Field wave_physical_of(const Field& g, Branch branch, double t);  // w = e^{-+it Lambda} g

/// g^-(k) = -conj(g^+(-k)), the reality relation w- = -conj(w+) in profile form.
Field minus_profile_from_plus(const Field& gplus_hat);

/// Time before periodic images re-enter: L / (2 v) with v = 2 k for the
/// Schrodinger group and v = 1 for the half-wave group. The no-argument
/// form uses the largest resolved wavenumber of the grid.
double schrodinger_wrap_time(const Grid& grid);
double schrodinger_wrap_time(const Grid& grid, double wavenumber);
double wave_wrap_time(const Grid& grid);

/// Three times the per-axis rms wavenumber of a field's spectrum; the
/// data-aware wavenumber extent used for wrap estimates.
double effective_wavenumber(const Field& field);

}  // namespace zk
