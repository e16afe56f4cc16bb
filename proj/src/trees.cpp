// Copyright 2026 The stabinv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stabinv/trees.hpp"

#include <algorithm>
#include <stdexcept>

#include "stabinv/errors.hpp"

namespace stabinv::trees {

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  BinaryTree run() {
    skip_space();
    parse_node();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters after tree");
    return BinaryTree::from_children(std::move(left_), std::move(right_));
  }

 private:
  int parse_node() {
    expect('(');
    const int id = static_cast<int>(left_.size());
    left_.push_back(BinaryTree::kNoChild);
    right_.push_back(BinaryTree::kNoChild);
    skip_space();
    if (peek() == 'L') {
      ++pos_;
      skip_space();
      const int child = parse_node();
      left_[id] = child;
      skip_space();
    }
    if (peek() == 'R') {
      ++pos_;
      skip_space();
      const int child = parse_node();
      right_[id] = child;
      skip_space();
    }
    expect(')');
    return id;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }
  void expect(char ch) {
    skip_space();
    if (peek() != ch) fail(std::string("expected '") + ch + "' at offset " + std::to_string(pos_));
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("tree \"" + std::string(text_) + "\": " + what, 0);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<int> left_;
  std::vector<int> right_;
};

void append_serialization(const BinaryTree& t, std::size_t node, std::string& out) {
  out.push_back('(');
  if (t.left(node) != BinaryTree::kNoChild) {
    out.push_back('L');
    append_serialization(t, static_cast<std::size_t>(t.left(node)), out);
  }
  if (t.right(node) != BinaryTree::kNoChild) {
    out.push_back('R');
    append_serialization(t, static_cast<std::size_t>(t.right(node)), out);
  }
  out.push_back(')');
}

std::vector<std::string> shapes(std::size_t r) {
  std::vector<std::string> out;
  if (r == 0) {
    out.push_back("");
  } else {
    for (std::size_t l = 0; l < r; ++l) {
      const auto lefts = shapes(l);
      const auto rights = shapes(r - 1 - l);
      for (const auto& a : lefts) {
        for (const auto& b : rights) {
          std::string s = "(";
          if (l > 0) s += "L" + a;
          if (r - 1 - l > 0) s += "R" + b;
          s += ")";
          out.push_back(std::move(s));
        }
      }
    }
  }
  return out;
}

}  // namespace

BinaryTree::BinaryTree() : left_{kNoChild}, right_{kNoChild} {}

BinaryTree::BinaryTree(std::vector<int> left, std::vector<int> right)
    : left_(std::move(left)), right_(std::move(right)) {}

BinaryTree BinaryTree::from_children(std::vector<int> left, std::vector<int> right) {
  const std::size_t r = left.size();
  if (r == 0) throw std::invalid_argument("BinaryTree: a tree needs at least one node");
  if (right.size() != r) throw std::invalid_argument("BinaryTree: left/right arrays differ in length");
  std::vector<int> fathers(r, kNoChild);
  auto attach = [&](std::size_t f, int child) {
    if (child == kNoChild) return;
    if (child < 0 || static_cast<std::size_t>(child) >= r) {
      throw std::invalid_argument("BinaryTree: child index out of range");
    }
    if (fathers[static_cast<std::size_t>(child)] != kNoChild || child == 0) {
      throw std::invalid_argument("BinaryTree: node " + std::to_string(child + 1) + " has more than one father");
    }
    fathers[static_cast<std::size_t>(child)] = static_cast<int>(f);
  };
  for (std::size_t i = 0; i < r; ++i) {
    attach(i, left[i]);
    attach(i, right[i]);
  }
  // Preorder from node 0 must visit 0, 1, ..., r-1 in that order.
  std::vector<std::size_t> stack{0};
  std::size_t next = 0;
  while (!stack.empty()) {
    const std::size_t node = stack.back();
    stack.pop_back();
    if (node != next) throw std::invalid_argument("BinaryTree: labels are not the preorder traversal");
    ++next;
    if (right[node] != kNoChild) stack.push_back(static_cast<std::size_t>(right[node]));
    if (left[node] != kNoChild) stack.push_back(static_cast<std::size_t>(left[node]));
  }
  if (next != r) throw std::invalid_argument("BinaryTree: tree is not connected");
  return BinaryTree(std::move(left), std::move(right));
}

BinaryTree BinaryTree::parse(std::string_view text) { return TreeParser(text).run(); }

BinaryTree BinaryTree::identity_tree(std::size_t r) {
  std::vector<int> left(r, kNoChild), right(r, kNoChild);
  for (std::size_t i = 0; i + 1 < r; ++i) left[i] = static_cast<int>(i + 1);
  return from_children(std::move(left), std::move(right));
}

BinaryTree BinaryTree::right_chain(std::size_t r) {
  std::vector<int> left(r, kNoChild), right(r, kNoChild);
  for (std::size_t i = 0; i + 1 < r; ++i) right[i] = static_cast<int>(i + 1);
  return from_children(std::move(left), std::move(right));
}

int BinaryTree::father(std::size_t node) const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (left_[i] == static_cast<int>(node) || right_[i] == static_cast<int>(node)) return static_cast<int>(i);
  }
  return kNoChild;
}

bool BinaryTree::is_right_son(std::size_t node) const {
  return std::find(right_.begin(), right_.end(), static_cast<int>(node)) != right_.end();
}

std::string BinaryTree::serialize() const {
  std::string out;
  append_serialization(*this, 0, out);
  return out;
}

std::vector<BinaryTree> enumerate_trees(std::size_t r) {
  std::vector<std::string> sorted = r == 0 ? std::vector<std::string>{} : shapes(r);
  std::sort(sorted.begin(), sorted.end());
  std::vector<BinaryTree> out;
  out.reserve(sorted.size());
  for (const auto& s : sorted) out.push_back(BinaryTree::parse(s));
  return out;
}

std::size_t catalan(std::size_t r) {
  std::size_t c = 1;
  for (std::size_t i = 0; i < r; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

RightPathDecomposition maximal_right_paths(const BinaryTree& tree) {
  RightPathDecomposition out;
  const std::size_t r = tree.size();
  out.path_index.assign(r, 0);
  std::vector<bool> right_son(r, false);
  for (std::size_t i = 0; i < r; ++i) {
    if (tree.right(i) != BinaryTree::kNoChild) right_son[static_cast<std::size_t>(tree.right(i))] = true;
  }
  // Increasing start labels give the required path order.
  for (std::size_t start = 0; start < r; ++start) {
    if (right_son[start]) continue;
    std::vector<std::size_t> path;
    for (int v = static_cast<int>(start); v != BinaryTree::kNoChild; v = tree.right(static_cast<std::size_t>(v))) {
      out.path_index[static_cast<std::size_t>(v)] = out.paths.size();
      path.push_back(static_cast<std::size_t>(v));
    }
    out.paths.push_back(std::move(path));
  }
  return out;
}

Permutation permutation_of(const BinaryTree& tree) {
  const RightPathDecomposition dec = maximal_right_paths(tree);
  Permutation perm(tree.size());
  for (const auto& path : dec.paths) {
    for (std::size_t i = 0; i < path.size(); ++i) perm[path[i]] = path[(i + 1) % path.size()];
  }
  return perm;
}

std::string cycle_notation(const Permutation& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    out.push_back('(');
    std::size_t v = i;
    bool first = true;
    while (!seen[v]) {
      seen[v] = true;
      if (!first) out.push_back(' ');
      out += std::to_string(v + 1);
      first = false;
      v = perm[v];
    }
    out.push_back(')');
  }
  return out;
}

gf2::GF2Matrix r_matrix(const BinaryTree& tree) {
  const RightPathDecomposition dec = maximal_right_paths(tree);
  gf2::GF2Matrix m(tree.size(), dec.count());
  for (std::size_t j = 0; j < dec.count(); ++j) {
    for (std::size_t i : dec.paths[j]) m.set(i, j, true);
  }
  return m;
}

gf2::GF2Matrix d_matrix(const BinaryTree& tree) {
  const RightPathDecomposition dec = maximal_right_paths(tree);
  gf2::GF2Matrix m(tree.size(), tree.size());
  for (std::size_t j = 0; j < tree.size(); ++j) {
    for (std::size_t i : dec.path_of(j)) {
      if (i <= j) m.set(i, j, true);
    }
  }
  return m;
}

std::size_t v_space_dimension(const BinaryTree& tree) { return tree.size() - maximal_right_paths(tree).count(); }

BinaryTree delete_singleton(const BinaryTree& tree, std::size_t node) {
  const std::size_t r = tree.size();
  if (r < 2) throw std::invalid_argument("delete_singleton: cannot delete the only node");
  if (node >= r || tree.is_right_son(node) || tree.right(node) != BinaryTree::kNoChild) {
    throw std::invalid_argument("delete_singleton: node is not a singleton maximal right path");
  }
  auto relabel = [node](int v) {
    if (v == BinaryTree::kNoChild) return v;
    return v > static_cast<int>(node) ? v - 1 : v;
  };
  const int father = tree.father(node);
  const int heir = tree.left(node);
  std::vector<int> left, right;
  left.reserve(r - 1);
  right.reserve(r - 1);
  for (std::size_t i = 0; i < r; ++i) {
    if (i == node) continue;
    int l = tree.left(i);
    if (static_cast<int>(i) == father) l = heir;  // node is always a left son here
    left.push_back(relabel(l));
    right.push_back(relabel(tree.right(i)));
  }
  return BinaryTree::from_children(std::move(left), std::move(right));
}

BinaryTree append_singleton(const BinaryTree& tree) {
  const std::size_t r = tree.size();
  std::vector<int> left, right;
  for (std::size_t i = 0; i < r; ++i) {
    left.push_back(tree.left(i));
    right.push_back(tree.right(i));
  }
  // The last node in preorder is a leaf.
  left[r - 1] = static_cast<int>(r);
  left.push_back(BinaryTree::kNoChild);
  right.push_back(BinaryTree::kNoChild);
  return BinaryTree::from_children(std::move(left), std::move(right));
}

std::vector<BinaryTree> read_tree_file(std::string_view text) {
  std::vector<BinaryTree> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (line.empty() || line.front() == '#') continue;
    try {
      out.push_back(BinaryTree::parse(line));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return out;
}

}  // namespace stabinv::trees
