#pragma once

#include "hvb/free_vector.hpp"

#include <compare>
#include <cstdint>
#include <string>

namespace hvb {

/// Basis symbol families, listed in canonical order.
///   L[m], I[m]   one integer index
///   Y[k]         half-integer index r = k + 1/2 (Schrodinger-Virasoro)
///   E[m,n]       t^m D^n, n >= 0 (differential operators)
///   CL, CI, CLI  central charges of the twisted Heisenberg-Virasoro algebra
///   C            Virasoro central charge
enum class Family : std::uint8_t { L, I, Y, E, CL, CI, CLI, C };

struct BasisVector {
    Family family = Family::L;
    int i = 0;
    int j = 0;

    static constexpr BasisVector L(int m) { return {Family::L, m, 0}; }
    static constexpr BasisVector I(int m) { return {Family::I, m, 0}; }
    static constexpr BasisVector Y(int k) { return {Family::Y, k, 0}; }
    static constexpr BasisVector E(int m, int n) { return {Family::E, m, n}; }
    static constexpr BasisVector CL() { return {Family::CL, 0, 0}; }
    static constexpr BasisVector CI() { return {Family::CI, 0, 0}; }
    static constexpr BasisVector CLI() { return {Family::CLI, 0, 0}; }
    static constexpr BasisVector C() { return {Family::C, 0, 0}; }

    bool is_central_symbol() const { return family >= Family::CL; }

    friend constexpr auto operator<=>(const BasisVector&, const BasisVector&) = default;
};

using Element = FreeVector<BasisVector>;

std::string to_string(const BasisVector& b);
std::string family_name(Family f);

inline Element elem(const BasisVector& b, const Scalar& c = 1) { return Element(b, c); }

}  // namespace hvb
