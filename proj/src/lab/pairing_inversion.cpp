#include "pairid/lab/pairing_inversion.hpp"

namespace pairid::lab {

G1Element invert_to_cdh(const Inverter& inverter, const GroupSuite& suite, const G1Element& g, const G1Element& ga,
                        const G1Element& gb) {
  return inverter(g, suite.pairing(ga, gb));
}

bool invert_to_ddh(const Inverter& inverter, const GroupSuite& suite, const G2Element& y, const G2Element& ya,
                   const G2Element& yb, const G2Element& yc, Rng& rng) {
  const G1Element g = suite.random_g1_nonidentity(rng);
  const G1Element h1 = inverter(g, y);
  const G1Element h2 = inverter(g, ya);
  const G1Element h3 = inverter(g, yb);
  const G1Element h4 = inverter(g, yc);
  return suite.pairing(h1, h4) == suite.pairing(h2, h3);
}

}  // namespace pairid::lab
