#pragma once

#include <functional>

#include "pairid/algebra/group.hpp"
#include "pairid/rng.hpp"

namespace pairid::lab {

using algebra::G1Element;
using algebra::G2Element;
using algebra::GroupSuite;

/// Claimed preimage h with e(g, h) = x.
using Inverter = std::function<G1Element(const G1Element& g, const G2Element& x)>;

/// CDH from an inverter: returns inverter(g, e(g^a, g^b)), which is g^ab
/// whenever the inverter is right.
G1Element invert_to_cdh(const Inverter& inverter, const GroupSuite& suite, const G1Element& g, const G1Element& ga,
                        const G1Element& gb);

/// DDH in G2 from an inverter: inverts y, y^a, y^b, y^c over a random base g
/// and compares e(h1, h4) with e(h2, h3).
bool invert_to_ddh(const Inverter& inverter, const GroupSuite& suite, const G2Element& y, const G2Element& ya,
                   const G2Element& yb, const G2Element& yc, Rng& rng);

}  // namespace pairid::lab
