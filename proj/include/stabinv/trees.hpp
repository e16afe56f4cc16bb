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

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "stabinv/gf2.hpp"

namespace stabinv::trees {

/// Image array of a permutation on {0, ..., r-1}: perm[i] is the image of i.
using Permutation = std::vector<std::size_t>;

/// Ordered binary tree on r nodes with canonical preorder labels.
///
/// Nodes are numbered 0..r-1 in the order root, left subtree, right subtree,
/// so the root is 0 and a left son of i, when present, is i+1. Every
/// constructor checks this labelling; an instance is always canonical.
///
/// Serialized form: each node is "(" [ "L" child ] [ "R" child ] ")", so the
/// single-node tree is "()" and the two 2-node trees are "(L())" and "(R())".
class BinaryTree {
 public:
  static constexpr int kNoChild = -1;

  /// Single node.
  BinaryTree();

  /// Throws std::invalid_argument unless the arrays describe a connected
  /// binary tree whose labels are its preorder.
  static BinaryTree from_children(std::vector<int> left, std::vector<int> right);
  /// Parses the parenthesis form; throws ParseError.
  static BinaryTree parse(std::string_view text);

  /// r singleton right paths (a left chain); its permutation is the identity.
  static BinaryTree identity_tree(std::size_t r);
  /// One right path through all r nodes; its permutation is an r-cycle.
  static BinaryTree right_chain(std::size_t r);

  std::size_t size() const { return left_.size(); }
  int left(std::size_t node) const { return left_[node]; }
  int right(std::size_t node) const { return right_[node]; }
  /// Father of `node`, or kNoChild for the root.
  int father(std::size_t node) const;
  bool is_right_son(std::size_t node) const;

  std::string serialize() const;

  bool operator==(const BinaryTree& other) const = default;

 private:
  BinaryTree(std::vector<int> left, std::vector<int> right);
  std::vector<int> left_;
  std::vector<int> right_;
};

/// The maximal right paths of a tree, ordered by start node. Together the
/// paths partition the nodes.
struct RightPathDecomposition {
  std::vector<std::vector<std::size_t>> paths;
  /// node -> index into `paths`.
  std::vector<std::size_t> path_index;

  std::size_t count() const { return paths.size(); }
  std::size_t start(std::size_t p) const { return paths[p].front(); }
  std::size_t finish(std::size_t p) const { return paths[p].back(); }
  std::size_t length(std::size_t p) const { return paths[p].size(); }
  const std::vector<std::size_t>& path_of(std::size_t node) const { return paths[path_index[node]]; }
};

/// All canonically labelled binary trees on r nodes in increasing order of
/// their serialization; Catalan(r) of them. r = 0 yields an empty list.
std::vector<BinaryTree> enumerate_trees(std::size_t r);

/// Catalan number C(r).
std::size_t catalan(std::size_t r);

RightPathDecomposition maximal_right_paths(const BinaryTree& tree);

/// Product over maximal right paths (v0 v1 ... vs) of the cycle v0 -> v1 -> ... -> vs -> v0.
Permutation permutation_of(const BinaryTree& tree);

/// 1-based cycle notation including fixed points, e.g. "(1 3 9 10)(2)(4 7 8)(5 6)".
std::string cycle_notation(const Permutation& perm);

/// r x t matrix whose column j is the indicator of the j-th maximal right path.
gf2::GF2Matrix r_matrix(const BinaryTree& tree);

/// r x r matrix whose column j marks the nodes on j's right path with label <= j.
gf2::GF2Matrix d_matrix(const BinaryTree& tree);

/// dim of the null space of r_matrix(tree)^T, i.e. r - t.
std::size_t v_space_dimension(const BinaryTree& tree);

/// Deletes `node`, which must form a singleton maximal right path (not a right
/// son, no right son). Its left subtree, if any, takes its place; labels above
/// `node` shift down by one.
BinaryTree delete_singleton(const BinaryTree& tree, std::size_t node);

/// Appends node r as the left son of the last node in preorder, giving a new
/// singleton maximal right path and keeping labels canonical.
BinaryTree append_singleton(const BinaryTree& tree);

/// Tree file: one serialization per line; blank lines and '#' comments skipped.
std::vector<BinaryTree> read_tree_file(std::string_view text);

}  // namespace stabinv::trees
