#pragma once

#include <functional>
#include <string>
#include <vector>

namespace topolens {

/// Cover relation of the strict part of `leq` over nodes 0..labels.size()-1,
/// as a DOT digraph with edges pointing upward. Nodes and edges come out in
/// index order.
std::string hasse_dot(const std::string& name, const std::vector<std::string>& labels,
                      const std::function<bool(int, int)>& leq);

}  // namespace topolens
