#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twsa/symbols.hpp"

namespace twsa {

enum class Side : std::uint8_t { Left, Right };

/// First component of a node type: root, left descendant or right descendant.
enum class Ancestry : std::uint8_t { Root, Left, Right };

/// The part of a node the transition function can see besides its label.
struct NodeType {
  Ancestry ancestry = Ancestry::Root;
  bool hasLeft = false;
  bool hasRight = false;

  /// Dense index in [0, kCount).
  constexpr std::size_t index() const noexcept {
    return static_cast<std::size_t>(ancestry) * 4 + (hasLeft ? 2 : 0) + (hasRight ? 1 : 0);
  }
  static constexpr std::size_t kCount = 12;
  static constexpr NodeType fromIndex(std::size_t i) noexcept {
    return NodeType{static_cast<Ancestry>(i / 4), (i & 2) != 0, (i & 1) != 0};
  }

  friend constexpr bool operator==(const NodeType&, const NodeType&) = default;
  friend constexpr auto operator<=>(const NodeType& a, const NodeType& b) noexcept {
    return a.index() <=> b.index();
  }
};

/// Renders as "(-,+,-)".
std::string toString(const NodeType& type);

/// A word over {l, r}; the empty path is the root.
class TreePath {
 public:
  TreePath() = default;
  explicit TreePath(std::vector<Side> steps) : steps_(std::move(steps)) {}

  /// Parses "llr"; "" and "λ" denote the root. Throws Error on other characters.
  static TreePath parse(std::string_view text);

  bool isRoot() const noexcept { return steps_.empty(); }
  std::size_t depth() const noexcept { return steps_.size(); }
  const std::vector<Side>& steps() const noexcept { return steps_; }

  TreePath child(Side side) const;
  TreePath parent() const;  // precondition: !isRoot()

  void push(Side side) { steps_.push_back(side); }
  void pop() { steps_.pop_back(); }

  /// "llr", or "λ" for the root.
  std::string str() const;

  friend bool operator==(const TreePath&, const TreePath&) = default;
  friend auto operator<=>(const TreePath&, const TreePath&) = default;

 private:
  std::vector<Side> steps_;
};

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = 0xFFFFFFFFu;

/// Finite prefix-closed binary tree with a ⊥-labelled root. Nodes live in a
/// pool so navigation and push/pop at a known node are O(1); popped slots
/// are recycled.
class GammaTree {
 public:
  /// The single-node tree T0.
  GammaTree();

  static constexpr NodeId root() noexcept { return 0; }

  std::size_t size() const noexcept { return size_; }

  Symbol label(NodeId node) const { return nodes_[node].label; }
  NodeId parent(NodeId node) const { return nodes_[node].parent; }
  NodeId child(NodeId node, Side side) const {
    return side == Side::Left ? nodes_[node].left : nodes_[node].right;
  }
  bool hasChild(NodeId node, Side side) const { return child(node, side) != kNoNode; }
  bool isRoot(NodeId node) const noexcept { return node == root(); }
  bool isLeaf(NodeId node) const {
    return nodes_[node].left == kNoNode && nodes_[node].right == kNoNode;
  }
  /// Which side of its parent the node hangs on; precondition: not the root.
  Side sideOf(NodeId node) const { return nodes_[node].side; }

  NodeType type(NodeId node) const;

  /// Appends a fresh leaf; precondition: the side is free.
  NodeId push(NodeId node, Side side, Symbol label);
  /// Removes a non-root leaf and returns its parent.
  NodeId pop(NodeId node);

  std::optional<NodeId> find(const TreePath& path) const;
  bool contains(const TreePath& path) const { return find(path).has_value(); }
  /// Throws PathAbsent when the path is not a node.
  NodeId at(const TreePath& path) const;
  NodeType type(const TreePath& path) const { return type(at(path)); }

  TreePath pathOf(NodeId node) const;

  /// Depth-first listing of the domain (root, left subtree, right subtree).
  std::vector<TreePath> domain() const;

  /// Structural check of the pool: parent/child links agree, the root is the
  /// only ⊥ node, live-node count matches size(). Throws Error with a
  /// description of the first inconsistency.
  void checkInvariants() const;

  /// Snapshot format "(label left right)" with "." for an absent child.
  /// `labelName` maps non-root labels to text; the root prints as ROOT.
  template <typename LabelName>
  std::string serialize(LabelName&& labelName) const {
    std::string out;
    serializeFrom(root(), out, labelName);
    return out;
  }

  /// Same shape and labels (slot numbering ignored).
  friend bool operator==(const GammaTree& a, const GammaTree& b);

 private:
  struct Node {
    Symbol label = kRootLabel;
    NodeId parent = kNoNode;
    NodeId left = kNoNode;
    NodeId right = kNoNode;
    Side side = Side::Left;
    bool live = false;
  };

  template <typename LabelName>
  void serializeFrom(NodeId node, std::string& out, LabelName& labelName) const {
    if (node == kNoNode) {
      out += '.';
      return;
    }
    out += '(';
    out += isRoot(node) ? std::string("ROOT") : std::string(labelName(label(node)));
    out += ' ';
    serializeFrom(nodes_[node].left, out, labelName);
    out += ' ';
    serializeFrom(nodes_[node].right, out, labelName);
    out += ')';
  }

  std::vector<Node> nodes_;
  std::vector<NodeId> free_;
  std::size_t size_ = 0;
};

/// Parses the snapshot format back into a tree. `labelOf` maps label text to
/// a Symbol (throwing on unknown names). Throws Error on malformed text.
template <typename LabelOf>
GammaTree parseTree(std::string_view text, LabelOf&& labelOf);

/// Tree pointer: the current node plus its path, kept in sync so both the
/// node reference and the printed path are O(1) to obtain.
struct TreePointer {
  NodeId node = GammaTree::root();
  TreePath path;

  friend bool operator==(const TreePointer&, const TreePointer&) = default;
};

// ---------------------------------------------------------------------------

namespace detail {
struct TreeTextCursor {
  std::string_view text;
  std::size_t pos = 0;
  void skipSpace();
  bool consume(char c);
  std::string_view token();  // run of chars other than space and parens
  [[noreturn]] void fail(const std::string& what) const;
};
}  // namespace detail

template <typename LabelOf>
GammaTree parseTree(std::string_view text, LabelOf&& labelOf) {
  GammaTree tree;
  detail::TreeTextCursor cur{text};
  auto parseChildren = [&](auto&& self, NodeId node) -> void {
    for (Side side : {Side::Left, Side::Right}) {
      cur.skipSpace();
      if (cur.consume('.')) continue;
      if (!cur.consume('(')) cur.fail("expected '(' or '.'");
      std::string_view name = cur.token();
      if (name.empty()) cur.fail("missing label");
      if (name == "ROOT") cur.fail("ROOT label below the root");
      NodeId child = tree.push(node, side, labelOf(name));
      self(self, child);
      cur.skipSpace();
      if (!cur.consume(')')) cur.fail("expected ')'");
    }
  };
  cur.skipSpace();
  if (!cur.consume('(')) cur.fail("expected '('");
  if (cur.token() != "ROOT") cur.fail("tree must start with (ROOT");
  parseChildren(parseChildren, GammaTree::root());
  cur.skipSpace();
  if (!cur.consume(')')) cur.fail("expected ')'");
  cur.skipSpace();
  if (cur.pos != cur.text.size()) cur.fail("trailing characters");
  return tree;
}

}  // namespace twsa
