#include "digicover/dot.hpp"

#include <sstream>

namespace digicover {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void write_nodes(std::ostream& os, const DigitalImage& img, const std::string& prefix,
                 const std::string& indent) {
  for (std::size_t i = 0; i < img.size(); ++i) {
    os << indent << prefix << i << " [label=" << quoted(to_string(img.point(i))) << "];\n";
  }
}

void write_edges(std::ostream& os, const DigitalImage& img, const std::string& prefix,
                 const std::string& indent, const char* op, const char* attrs) {
  for (const auto& [a, b] : img.edges()) {
    os << indent << prefix << a << ' ' << op << ' ' << prefix << b << attrs << ";\n";
  }
}

}  // namespace

std::string image_to_dot(const DigitalImage& img) {
  std::ostringstream os;
  os << "graph " << quoted(img.label()) << " {\n";
  os << "  node [shape=circle];\n";
  write_nodes(os, img, "n", "  ");
  write_edges(os, img, "n", "  ", "--", "");
  os << "}\n";
  return os.str();
}

std::string map_to_dot(const DigitalMap& f) {
  std::ostringstream os;
  os << "digraph map {\n";
  os << "  node [shape=circle];\n";
  os << "  subgraph cluster_domain {\n";
  os << "    label=" << quoted(f.domain().label()) << ";\n";
  write_nodes(os, f.domain(), "d", "    ");
  write_edges(os, f.domain(), "d", "    ", "->", " [dir=none]");
  os << "  }\n";
  os << "  subgraph cluster_codomain {\n";
  os << "    label=" << quoted(f.codomain().label()) << ";\n";
  write_nodes(os, f.codomain(), "c", "    ");
  write_edges(os, f.codomain(), "c", "    ", "->", " [dir=none]");
  os << "  }\n";
  for (std::size_t i = 0; i < f.domain().size(); ++i) {
    os << "  d" << i << " -> c" << f.at(i) << " [style=dashed];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace digicover
