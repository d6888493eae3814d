#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "chordweights/chord_diagram.hpp"

namespace chordweights {

// Arc i runs from endpoint position i to position i + 1 (mod 2k).
struct ArcVisit {
  std::size_t arc = 0;
  bool forward = true;
  friend bool operator==(const ArcVisit &, const ArcVisit &) = default;
};

struct SurgeryTrace {
  std::size_t components = 0;
  std::vector<std::vector<ArcVisit>> cycles;

  std::string to_string() const;
};

// Surgers every chord at once: unmarked chords by untwisted bands, marked
// chords by half-twisted bands, and follows the resulting circles. The
// degree-0 diagram yields one cycle with no arcs. Throws std::logic_error if an
// arc would be traversed twice.
SurgeryTrace surgery_trace(const MarkedChordDiagram &d);

std::size_t boundary_components(const MarkedChordDiagram &d);

} // namespace chordweights
