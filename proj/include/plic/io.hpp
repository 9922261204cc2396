#pragma once

#include <string>

#include "plic/incidence.hpp"

namespace plic {

struct StructureFile {
  std::string name;
  Realized data;
  bool has_coords = false;
};

// Strict JSON structure files:
//   {
//     "name": "...",
//     "points": ["p0", ...],
//     "lines": [{"id": "l0", "points": ["p0", ...]}, ...],
//     "coords": { "points": {"p0": ["0","1","-1/2"]}, "lines": {...} }
//   }
// "coords" is optional but must cover every id when present. Unknown keys
// are rejected. Saving is deterministic and load/save round-trips exactly.
StructureFile parse_structure_json(const std::string& text);
StructureFile load_structure(const std::string& path);

std::string structure_json(const StructureFile& f);
void save_structure(const std::string& path, const StructureFile& f);

}  // namespace plic
