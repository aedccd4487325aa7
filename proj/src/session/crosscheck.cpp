#include "pairid/session/crosscheck.hpp"

#include "pairid/algebra/transparent.hpp"
#include "pairid/curve/tate.hpp"

namespace pairid::session {

DlogMap::DlogMap(std::uint64_t p)
    : flat_(curve::make_suite(algebra::BackendKind::Transparent, p)),
      curve_(curve::make_suite(algebra::BackendKind::TateCurve, p)) {
  for (std::uint64_t k = 0; k < p; ++k) {
    g1_.push_back(curve_.g1_pow_uncounted(curve_.g1_generator(), curve_.scalar(k)));
    g2_.push_back(curve_.g2_pow_uncounted(curve_.g2_generator(), curve_.scalar(k)));
  }
}

bool DlogMap::bijective() const {
  for (std::size_t i = 0; i < g1_.size(); ++i) {
    for (std::size_t j = i + 1; j < g1_.size(); ++j) {
      if (g1_[i] == g1_[j] || g2_[i] == g2_[j]) return false;
    }
  }
  return true;
}

id::Item DlogMap::item(const id::Item& it) const {
  if (const auto* x = std::get_if<algebra::G1Element>(&it)) return g1(algebra::transparent_log(flat_, *x).value());
  if (const auto* x = std::get_if<algebra::G2Element>(&it)) return g2(algebra::transparent_log(flat_, *x).value());
  return it;
}

id::Message DlogMap::message(const id::Message& m) const {
  id::Message out{m.type, {}};
  for (const auto& it : m.items) out.items.push_back(item(it));
  return out;
}

id::PublicKey DlogMap::public_key(const id::PublicKey& pk) const {
  std::vector<id::Item> items;
  for (const auto& [name, it] : id::public_items(pk)) items.push_back(item(it));
  return id::public_from_items(id::scheme_of(pk), items, &pk);
}

std::vector<id::Item> all_items(const algebra::GroupSuite& flat, id::ItemKind kind, unsigned bits,
                                bool nonzero_scalars) {
  std::vector<id::Item> out;
  const std::uint64_t p = flat.p();
  switch (kind) {
    case id::ItemKind::G1:
      for (std::uint64_t k = 0; k < p; ++k) out.push_back(algebra::transparent_g1(k));
      break;
    case id::ItemKind::G2:
      for (std::uint64_t k = 0; k < p; ++k) out.push_back(algebra::transparent_g2(k));
      break;
    case id::ItemKind::Zp:
      for (std::uint64_t k = nonzero_scalars ? 1 : 0; k < p; ++k) out.push_back(flat.scalar(k));
      break;
    case id::ItemKind::Bits:
      for (std::uint64_t k = 0; k < (1ULL << bits); ++k) out.push_back(BitString{k, bits});
      break;
  }
  return out;
}

std::vector<id::Message> all_messages(const algebra::GroupSuite& flat, id::SchemeId scheme, id::MessageType type,
                                      unsigned bits) {
  std::vector<id::Message> out{{type, {}}};
  for (const auto kind : id::message_layout(scheme, type)) {
    const bool challenge = type == id::MessageType::Challenge;
    auto values = all_items(flat, kind, bits, challenge);
    if (challenge && kind == id::ItemKind::G1) values.erase(values.begin());
    std::vector<id::Message> next;
    for (const auto& m : out) {
      for (const auto& v : values) {
        auto ext = m;
        ext.items.push_back(v);
        next.push_back(std::move(ext));
      }
    }
    out = std::move(next);
  }
  return out;
}

SweepResult cross_backend_sweep(const DlogMap& map, const id::PublicKey& flat_pk) {
  const auto scheme = id::scheme_of(flat_pk);
  const unsigned bits = id::challenge_bits(flat_pk);
  const auto curve_pk = map.public_key(flat_pk);
  const auto flat = map.flat().uncounted();
  const auto curve = map.curve().uncounted();

  std::vector<std::optional<id::Message>> commitments;
  if (id::has_commitment(scheme)) {
    for (auto& m : all_messages(flat, scheme, id::MessageType::Commitment, bits)) commitments.emplace_back(m);
  } else {
    commitments.emplace_back(std::nullopt);
  }
  const auto challenges = all_messages(flat, scheme, id::MessageType::Challenge, bits);
  const auto responses = all_messages(flat, scheme, id::MessageType::Response, bits);

  SweepResult out;
  for (const auto& c : commitments) {
    std::optional<id::Message> cc;
    if (c) cc = map.message(*c);
    for (const auto& ch : challenges) {
      const auto cch = map.message(ch);
      for (const auto& r : responses) {
        const bool a = id::check_messages(flat, flat_pk, c, ch, r);
        const bool b = id::check_messages(curve, curve_pk, cc, cch, map.message(r));
        ++out.cases;
        out.agreements += a == b;
        out.accepts += a;
      }
    }
  }
  return out;
}

}  // namespace pairid::session
