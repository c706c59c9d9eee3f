#include "twsa/tree.hpp"

#include <cctype>

#include "twsa/errors.hpp"

namespace twsa {

std::string toString(const NodeType& type) {
  std::string s = "(";
  s += type.ancestry == Ancestry::Root ? '-' : type.ancestry == Ancestry::Left ? 'l' : 'r';
  s += ',';
  s += type.hasLeft ? '+' : '-';
  s += ',';
  s += type.hasRight ? '+' : '-';
  s += ')';
  return s;
}

TreePath TreePath::parse(std::string_view text) {
  TreePath p;
  if (text == "λ") return p;
  for (char c : text) {
    if (c == 'l') {
      p.push(Side::Left);
    } else if (c == 'r') {
      p.push(Side::Right);
    } else {
      throw Error("invalid tree path '" + std::string(text) + "'");
    }
  }
  return p;
}

TreePath TreePath::child(Side side) const {
  TreePath p = *this;
  p.push(side);
  return p;
}

TreePath TreePath::parent() const {
  TreePath p = *this;
  p.pop();
  return p;
}

std::string TreePath::str() const {
  if (steps_.empty()) return "λ";
  std::string s;
  s.reserve(steps_.size());
  for (Side d : steps_) s += d == Side::Left ? 'l' : 'r';
  return s;
}

GammaTree::GammaTree() {
  nodes_.push_back(Node{kRootLabel, kNoNode, kNoNode, kNoNode, Side::Left, true});
  size_ = 1;
}

NodeType GammaTree::type(NodeId node) const {
  const Node& n = nodes_[node];
  Ancestry anc = node == root() ? Ancestry::Root : n.side == Side::Left ? Ancestry::Left : Ancestry::Right;
  return NodeType{anc, n.left != kNoNode, n.right != kNoNode};
}

NodeId GammaTree::push(NodeId node, Side side, Symbol label) {
  NodeId id;
  if (!free_.empty()) {
    id = free_.back();
    free_.pop_back();
  } else {
    id = static_cast<NodeId>(nodes_.size());
    nodes_.emplace_back();
  }
  nodes_[id] = Node{label, node, kNoNode, kNoNode, side, true};
  (side == Side::Left ? nodes_[node].left : nodes_[node].right) = id;
  ++size_;
  return id;
}

NodeId GammaTree::pop(NodeId node) {
  Node& n = nodes_[node];
  NodeId up = n.parent;
  (n.side == Side::Left ? nodes_[up].left : nodes_[up].right) = kNoNode;
  n.live = false;
  free_.push_back(node);
  --size_;
  return up;
}

std::optional<NodeId> GammaTree::find(const TreePath& path) const {
  NodeId cur = root();
  for (Side d : path.steps()) {
    cur = child(cur, d);
    if (cur == kNoNode) return std::nullopt;
  }
  return cur;
}

NodeId GammaTree::at(const TreePath& path) const {
  if (auto id = find(path)) return *id;
  throw PathAbsent("path " + path.str() + " is not a node of the tree");
}

TreePath GammaTree::pathOf(NodeId node) const {
  std::vector<Side> rev;
  while (node != root()) {
    rev.push_back(nodes_[node].side);
    node = nodes_[node].parent;
  }
  return TreePath(std::vector<Side>(rev.rbegin(), rev.rend()));
}

std::vector<TreePath> GammaTree::domain() const {
  std::vector<TreePath> out;
  out.reserve(size_);
  std::vector<std::pair<NodeId, TreePath>> stack{{root(), TreePath{}}};
  while (!stack.empty()) {
    auto [id, path] = std::move(stack.back());
    stack.pop_back();
    if (nodes_[id].right != kNoNode) stack.emplace_back(nodes_[id].right, path.child(Side::Right));
    if (nodes_[id].left != kNoNode) stack.emplace_back(nodes_[id].left, path.child(Side::Left));
    out.push_back(std::move(path));
  }
  return out;
}

void GammaTree::checkInvariants() const {
  if (nodes_.empty() || !nodes_[root()].live) throw Error("tree has no root");
  if (nodes_[root()].label != kRootLabel) throw Error("root is not labelled ⊥");
  if (nodes_[root()].parent != kNoNode) throw Error("root has a parent");
  std::size_t reached = 0;
  std::vector<NodeId> stack{root()};
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    const Node& n = nodes_[id];
    if (!n.live) throw Error("dead node reachable from the root");
    if (++reached > size_) throw Error("more reachable nodes than size()");
    if (id != root() && n.label == kRootLabel) throw Error("⊥ label below the root");
    for (Side side : {Side::Left, Side::Right}) {
      NodeId c = side == Side::Left ? n.left : n.right;
      if (c == kNoNode) continue;
      if (nodes_[c].parent != id || nodes_[c].side != side) throw Error("parent/child links disagree");
      stack.push_back(c);
    }
  }
  if (reached != size_) throw Error("size() does not match the reachable node count");
}

bool operator==(const GammaTree& a, const GammaTree& b) {
  if (a.size_ != b.size_) return false;
  std::vector<std::pair<NodeId, NodeId>> stack{{GammaTree::root(), GammaTree::root()}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    const auto& nx = a.nodes_[x];
    const auto& ny = b.nodes_[y];
    if (nx.label != ny.label) return false;
    if ((nx.left == kNoNode) != (ny.left == kNoNode)) return false;
    if ((nx.right == kNoNode) != (ny.right == kNoNode)) return false;
    if (nx.left != kNoNode) stack.emplace_back(nx.left, ny.left);
    if (nx.right != kNoNode) stack.emplace_back(nx.right, ny.right);
  }
  return true;
}

namespace detail {

void TreeTextCursor::skipSpace() {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

bool TreeTextCursor::consume(char c) {
  if (pos < text.size() && text[pos] == c) {
    ++pos;
    return true;
  }
  return false;
}

std::string_view TreeTextCursor::token() {
  skipSpace();
  std::size_t begin = pos;
  while (pos < text.size() && text[pos] != '(' && text[pos] != ')' &&
         !std::isspace(static_cast<unsigned char>(text[pos]))) {
    ++pos;
  }
  return text.substr(begin, pos - begin);
}

void TreeTextCursor::fail(const std::string& what) const {
  throw Error("malformed tree at offset " + std::to_string(pos) + ": " + what);
}

}  // namespace detail
}  // namespace twsa
