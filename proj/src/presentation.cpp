#include "chowgen/presentation.hpp"

#include "chowgen/error.hpp"

namespace chowgen {

Presentation::Presentation(GradedRingSpec ring, std::vector<Relation> relations, std::string provenance)
    : ring_(std::move(ring)), provenance_(std::move(provenance)) {
  for (auto& r : relations) {
    if (!(r.poly.ring() == ring_)) throw RingMismatch("Presentation: relation '" + r.label + "' is over another ring");
    if (r.poly.is_zero()) {
      notes_.push_back("dropped zero relation '" + r.label + "'");
      continue;
    }
    if (!r.poly.is_homogeneous()) throw InvalidArgument("Presentation: relation '" + r.label + "' is not homogeneous");
    relations_.push_back(std::move(r));
  }
}

std::vector<Polynomial> Presentation::relation_polys() const {
  std::vector<Polynomial> out;
  out.reserve(relations_.size());
  for (const auto& r : relations_) out.push_back(r.poly);
  return out;
}

Polynomial display_normalized(const Polynomial& p) {
  if (p.is_zero()) return p;
  return display_terms(p).front().second < 0 ? -p : p;
}

std::string render_presentation(const Presentation& p, RenderStyle style) {
  const bool latex = style == RenderStyle::latex;
  if (!latex) style = RenderStyle::compact;
  std::string out = latex ? "\\mathbb{Z}" : "Z";
  if (!p.ring().empty()) {
    out += '[';
    for (std::size_t i = 0; i < p.ring().size(); ++i) {
      if (i) out += latex ? ", " : ",";
      out += render_variable(p.ring().name(i), style);
    }
    out += ']';
  }
  if (p.relations().empty()) return out;
  out += latex ? " / (" : "/(";
  for (std::size_t i = 0; i < p.relations().size(); ++i) {
    if (i) out += ", ";
    out += to_string(display_normalized(p.relations()[i].poly), style);
  }
  out += ')';
  return out;
}

}  // namespace chowgen
