#include "topolens/dot.hpp"

#include <sstream>

namespace topolens {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

std::string hasse_dot(const std::string& name, const std::vector<std::string>& labels,
                      const std::function<bool(int, int)>& leq) {
  const int k = static_cast<int>(labels.size());
  auto strict = [&](int a, int b) { return a != b && leq(a, b) && !leq(b, a); };
  std::ostringstream out;
  out << "digraph " << quoted(name) << " {\n  rankdir=BT;\n";
  for (int i = 0; i < k; ++i) out << "  n" << i << " [label=" << quoted(labels[i]) << "];\n";
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (!strict(i, j)) continue;
      bool cover = true;
      for (int m = 0; m < k && cover; ++m) {
        if (strict(i, m) && strict(m, j)) cover = false;
      }
      if (cover) out << "  n" << i << " -> n" << j << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace topolens
