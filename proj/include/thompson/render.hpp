#pragma once

#include <string>
#include <string_view>

#include "thompson/group.hpp"

namespace thompson {

enum class RenderFormat { Ascii, Dot };

/// "ascii" / "text" or "dot"; throws Error otherwise.
RenderFormat parse_render_format(std::string_view name);

/// DOT digraph named `name`; nodes are labelled by address, exposed leaves
/// additionally by leaf number.
std::string to_dot(const BinaryTree& t, std::string_view name);

/// Ascii: "negTree | posTree". Dot: digraphs "neg" then "pos".
std::string render_tree_pair(const GroupElement& g, RenderFormat format);

} // namespace thompson
