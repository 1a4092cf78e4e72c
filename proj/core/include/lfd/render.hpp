#pragma once

#include <string>

#include "lfd/diagram.hpp"
#include "lfd/linkdiag.hpp"

namespace lfd {

enum class RenderFormat { svg, ascii };

// deterministic picture of the diagram: byte-identical output for identical
// input. svg draws one path per edge (front) or per component (link) with
// under-strand gaps at crossings; ascii uses a fixed glyph set
std::string render(const FrontDiagram& d, RenderFormat f);
std::string render(const LinkDiagram& l, RenderFormat f);

}  // namespace lfd
