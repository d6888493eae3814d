#include "chordweights/band_surgery.hpp"

#include <sstream>
#include <stdexcept>

namespace chordweights {

std::string SurgeryTrace::to_string() const {
  std::ostringstream out;
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    out << (c ? " " : "") << '{';
    for (std::size_t i = 0; i < cycles[c].size(); ++i)
      out << (i ? "," : "") << 'a' << cycles[c][i].arc << (cycles[c][i].forward ? "" : "'");
    out << '}';
  }
  return out.str();
}

SurgeryTrace surgery_trace(const MarkedChordDiagram &d) {
  SurgeryTrace trace;
  const std::size_t len = d.length();
  if (len == 0) {
    trace.components = 1;
    trace.cycles.emplace_back();
    return trace;
  }
  std::vector<std::size_t> partner(len);
  for (int c = 0; c < d.degree(); ++c) {
    const auto [p, q] = d.endpoints(c);
    partner[p] = q;
    partner[q] = p;
  }
  const auto prev = [len](std::size_t p) { return (p + len - 1) % len; };

  std::vector<bool> used(len, false);
  for (std::size_t start = 0; start < len; ++start) {
    if (used[start]) continue;
    std::vector<ArcVisit> cycle;
    ArcVisit cur{start, true};
    do {
      if (used[cur.arc]) throw std::logic_error("surgery trace visited an arc twice");
      used[cur.arc] = true;
      cycle.push_back(cur);
      // Endpoint reached at the end of the arc, then jump across the band.
      const std::size_t end = cur.forward ? (cur.arc + 1) % len : cur.arc;
      const std::size_t other = partner[end];
      const bool twisted = d.is_marked(d.label_at(end));
      const bool keep_direction = cur.forward != twisted;
      cur = keep_direction ? ArcVisit{other, true} : ArcVisit{prev(other), false};
    } while (!(cur.arc == start && cur.forward));
    trace.cycles.push_back(std::move(cycle));
  }
  trace.components = trace.cycles.size();
  return trace;
}

std::size_t boundary_components(const MarkedChordDiagram &d) {
  return surgery_trace(d).components;
}

} // namespace chordweights
