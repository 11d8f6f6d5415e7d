#pragma once

// A graded quotient Z[generators] / (relations).

#include <string>
#include <vector>

#include "chowgen/polyring.hpp"

namespace chowgen {

struct Relation {
  std::string label;
  Polynomial poly;

  friend bool operator==(const Relation&, const Relation&) = default;
};

class Presentation {
 public:
  Presentation() = default;
  /// Every relation must be homogeneous over `ring`; zero relations are
  /// dropped and recorded in notes().
  Presentation(GradedRingSpec ring, std::vector<Relation> relations, std::string provenance);

  const GradedRingSpec& ring() const { return ring_; }
  const std::vector<Relation>& relations() const { return relations_; }
  const std::string& provenance() const { return provenance_; }
  const std::vector<std::string>& notes() const { return notes_; }

  std::vector<Polynomial> relation_polys() const;
  void add_note(std::string note) { notes_.push_back(std::move(note)); }

  friend bool operator==(const Presentation& a, const Presentation& b) {
    return a.ring_ == b.ring_ && a.relations_ == b.relations_ && a.provenance_ == b.provenance_;
  }

 private:
  GradedRingSpec ring_;
  std::vector<Relation> relations_;
  std::string provenance_;
  std::vector<std::string> notes_;
};

/// Relation as displayed: sign flipped so the first displayed term is positive.
Polynomial display_normalized(const Polynomial& p);

/// "Z[c1,c2]/(2c1, c1^2 + 10c2)" (compact) or the LaTeX equivalent.
/// RenderStyle::canonical is treated as compact.
std::string render_presentation(const Presentation& p, RenderStyle style = RenderStyle::compact);

}  // namespace chowgen
