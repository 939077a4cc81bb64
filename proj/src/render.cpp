#include "thompson/render.hpp"

namespace thompson {

RenderFormat parse_render_format(std::string_view name) {
    if (name == "ascii" || name == "text") return RenderFormat::Ascii;
    if (name == "dot") return RenderFormat::Dot;
    throw Error("unknown render format '" + std::string(name) + "'");
}

namespace {

std::string node_id(const std::string& address) { return "\"n" + address + "\""; }

std::string node_label(const std::string& address) { return address.empty() ? "root" : address; }

void dot_walk(std::string_view code, std::size_t& pos, const std::string& address, std::size_t& leaf,
              std::string& out) {
    if (code[pos++] == '0') {
        out += "  " + node_id(address) + " [shape=box, label=\"" + node_label(address) + "\\nleaf " +
               std::to_string(leaf++) + "\"];\n";
        return;
    }
    out += "  " + node_id(address) + " [shape=circle, label=\"" + node_label(address) + "\"];\n";
    for (const char* side : {"0", "1"}) {
        const std::string child = address + side;
        out += "  " + node_id(address) + " -> " + node_id(child) + ";\n";
        dot_walk(code, pos, child, leaf, out);
    }
}

} // namespace

std::string to_dot(const BinaryTree& t, std::string_view name) {
    std::string out = "digraph " + std::string(name) + " {\n";
    std::size_t pos = 0;
    std::size_t leaf = 0;
    dot_walk(t.preorder(), pos, "", leaf, out);
    out += "}\n";
    return out;
}

std::string render_tree_pair(const GroupElement& g, RenderFormat format) {
    if (format == RenderFormat::Ascii) return to_string(g.pair());
    return to_dot(g.pair().neg, "neg") + to_dot(g.pair().pos, "pos");
}

} // namespace thompson
