#pragma once

#include <cstdint>

namespace crystalline {

// Resource caps for desk-scale runs. CRYSTALLINE_CAPS, when set, overrides
// single fields as a comma list, e.g. "rank=10,points=500000,pm=4611686018427387904".
struct Caps {
    long long max_pm = 1LL << 62;      // largest allowed p^m
    int max_rank = 8;                  // crystal rank cap
    int max_compound = 70;             // exterior-power dimension cap, C(8,4)
    long long max_points = 1 << 20;    // closed-point scan cap (q^{D*k})
    long long max_enum = 1 << 22;      // brute-force enumeration cap (q^{e*n})
};

const Caps& caps();

}  // namespace crystalline
