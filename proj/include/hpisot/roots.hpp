#pragma once

#include <vector>

#include "hpisot/bigfloat.hpp"
#include "hpisot/polynomial.hpp"

namespace hpisot {

/// A closed disk in C that provably contains exactly one root.
struct RootDisk {
    Complex center;
    BigFloat radius;
    /// Center on the real axis; the (self-conjugate) disk then holds a real root.
    bool real = false;
};

struct RootIsolation {
    std::vector<RootDisk> disks;  ///< real roots first (ascending), then pairs by real part
    unsigned bits = 0;            ///< working precision that certified the disks
};

/// Certified isolation of all complex roots of a square-free integer
/// polynomial.  Aberth iteration supplies approximations; Weierstrass
/// inclusion disks of radius n|W_i| certify them once pairwise disjoint.
/// Precision doubles from `start_bits` until certification or `max_bits`,
/// after which PrecisionError is thrown.
RootIsolation isolate_roots(const IntPolynomial& p, unsigned start_bits = 128, unsigned max_bits = 4096);

/// Index of the conjugate partner of every disk (itself for real disks).
std::vector<std::size_t> conjugate_partners(const RootIsolation& iso);

}  // namespace hpisot
