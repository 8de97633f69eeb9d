#pragma once

#include <optional>
#include <string>

#include "wsncov/deployment.hpp"

namespace wsncov {

// Static SVG of a deployment: the field rectangle, one translucent sensing
// disk (class "sensing-disk") and one center dot (class "node") per node, and
// one line (class "link") per communication edge when rc is given.
// Output is byte-identical for identical inputs.
std::string render_svg(const Deployment& dep, std::optional<double> rc = std::nullopt);

}  // namespace wsncov
