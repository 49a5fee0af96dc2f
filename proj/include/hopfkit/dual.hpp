#pragma once

// Dual Hopf algebra on the dual basis E^i: products come from the coproduct
// of H, coproducts from its product, the antipode is the transpose of S.
// The op and cop variants reverse one structure and use the inverse antipode.

#include <string>

#include "hopfkit/antipode.hpp"
#include "hopfkit/hopf_algebra.hpp"

namespace hopfkit {

enum class DualVariant { Plain, Op, Cop };

inline const char* dual_variant_name(DualVariant v) {
  switch (v) {
    case DualVariant::Plain: return "plain";
    case DualVariant::Op: return "op";
    case DualVariant::Cop: return "cop";
  }
  return "?";
}

inline std::string dual_label(const std::string& label) { return "E(" + label + ")"; }

inline HopfAlgebra dual_hopf(const HopfAlgebra& H, DualVariant variant = DualVariant::Plain) {
  const auto d = H.dim();
  ExactField f = H.field();
  StructureBuilder<ExactField> b(d, f);
  for (std::uint32_t c = 0; c < d; ++c)
    for (const auto& t : H.s.comult[c]) {
      if (variant == DualVariant::Op)
        b.add_mult(t.k, t.j, c, t.coeff);
      else
        b.add_mult(t.j, t.k, c, t.coeff);
    }
  for (std::uint32_t a = 0; a < d; ++a)
    for (const auto& t : H.s.mult[a]) {
      if (variant == DualVariant::Cop)
        b.add_comult(t.k, t.j, a, t.coeff);
      else
        b.add_comult(t.k, a, t.j, t.coeff);
    }
  for (std::uint32_t i = 0; i < d; ++i) b.add_unit(i, H.s.counit[i]);
  for (const auto& u : H.s.unit) b.set_counit(u.index, u.coeff);

  if (variant == DualVariant::Plain) {
    for (std::uint32_t i = 0; i < d; ++i)
      for (const auto& t : H.s.antipode[i]) b.add_antipode(t.index, i, t.coeff);
  } else {
    auto inv = inverse_antipode(H.s, f);
    for (std::uint32_t i = 0; i < d; ++i)
      for (const auto& t : inv[i]) b.add_antipode(t.index, i, t.coeff);
  }

  HopfAlgebra D;
  D.name = "dual(" + H.name + ")" + (variant == DualVariant::Plain ? "" : std::string("^") + dual_variant_name(variant));
  D.conductor = H.conductor;
  D.s = b.finish();
  D.labels.reserve(d);
  for (const auto& l : H.labels) D.labels.push_back(dual_label(l));
  // Group-likes of H are characters of H* and conversely.
  D.grouplikes = H.characters;
  D.characters = H.grouplikes;
  return D;
}

}  // namespace hopfkit
