// Copyright 2026 The reslve Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RESLVE_KNOWLEDGE_GRAPH_H_
#define RESLVE_KNOWLEDGE_GRAPH_H_

// Knowledge base as a directed graph of topics and categories, and the
// bipartite topic-interest graphs derived from it.
//
// Topics (articles) point at the categories they belong to; categories point
// at their broader categories. Topic nodes never have incoming edges. The
// category subgraph may contain cycles.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace reslve {

using TopicId = std::string;
using CategoryId = std::string;

inline constexpr int kDefaultMaxDepth = 4;

struct CategoryNode {
  CategoryId id;
  std::vector<CategoryId> parents;  // "broader" relations, sorted, unique
};

struct TopicNode {
  TopicId id;
  std::string description;
  std::vector<CategoryId> categories;  // sorted, unique
};

// Human-readable title for an identifier: underscores become spaces and a
// leading "Category:" namespace is dropped.
std::string TitleFromId(std::string_view id);

class KnowledgeGraph {
 public:
  class Builder {
   public:
    Builder& AddTopic(TopicId id, std::vector<CategoryId> categories,
                      std::string description = {});
    Builder& AddCategory(CategoryId id, std::vector<CategoryId> parents = {});
    Builder& SetDescription(const TopicId& id, std::string description);

    // Validates that every edge endpoint exists. Throws InputError naming the
    // first dangling reference.
    KnowledgeGraph Build() &&;

   private:
    std::map<TopicId, TopicNode> topics_;
    std::map<CategoryId, CategoryNode> categories_;
  };

  KnowledgeGraph() = default;

  const TopicNode* FindTopic(std::string_view id) const;
  const CategoryNode* FindCategory(std::string_view id) const;
  bool HasTopic(std::string_view id) const { return FindTopic(id) != nullptr; }
  bool HasCategory(std::string_view id) const {
    return FindCategory(id) != nullptr;
  }

  const std::map<TopicId, TopicNode, std::less<>>& topics() const {
    return topics_;
  }
  const std::map<CategoryId, CategoryNode, std::less<>>& categories() const {
    return categories_;
  }
  std::size_t edge_count() const { return edge_count_; }

  // Dense category indexing used by traversals. Index order follows sorted
  // category id order.
  std::optional<std::size_t> CategoryIndex(std::string_view id) const;
  const CategoryId& CategoryAt(std::size_t index) const {
    return category_ids_[index];
  }
  std::span<const std::size_t> ParentIndices(std::size_t index) const {
    return parent_indices_[index];
  }
  std::size_t category_count() const { return category_ids_.size(); }

 private:
  std::map<TopicId, TopicNode, std::less<>> topics_;
  std::map<CategoryId, CategoryNode, std::less<>> categories_;
  std::vector<CategoryId> category_ids_;
  std::vector<std::vector<std::size_t>> parent_indices_;
  std::unordered_map<std::string, std::size_t> category_index_;
  std::size_t edge_count_ = 0;
};

// Exact edge weight 1/p for a shortest path of p edges. Ordering follows the
// numeric weight, so a shorter path compares greater.
class PathWeight {
 public:
  explicit PathWeight(int path_length);

  int path_length() const { return path_length_; }
  double value() const { return 1.0 / static_cast<double>(path_length_); }

  friend bool operator==(PathWeight, PathWeight) = default;
  friend std::strong_ordering operator<=>(PathWeight a, PathWeight b) {
    return b.path_length_ <=> a.path_length_;
  }

 private:
  int path_length_;
};

// Length of the shortest directed path from a topic to a category, following
// outgoing edges without a depth bound. Absent when unreachable. Throws
// InputError on unknown ids.
std::optional<int> ShortestPathLength(const KnowledgeGraph& graph,
                                      std::string_view from_topic,
                                      std::string_view to_category);

// Bipartite graph linking one root topic to every category reachable within
// max_depth edges, weighted by 1/shortest-path-length.
struct TopicInterestGraph {
  TopicId root;
  std::map<CategoryId, PathWeight> edges;
};

// Throws InputError if root is not a topic or max_depth < 1.
TopicInterestGraph BuildTopicInterestGraph(const KnowledgeGraph& graph,
                                           std::string_view root,
                                           int max_depth = kDefaultMaxDepth);

// Union of topic-interest graphs with duplicate category nodes merged.
class AggregatedInterestGraph {
 public:
  using EdgeKey = std::pair<TopicId, CategoryId>;

  const std::map<EdgeKey, PathWeight>& edges() const { return edges_; }
  const std::set<TopicId>& topics() const { return topics_; }
  const std::set<CategoryId>& categories() const { return categories_; }
  bool empty() const { return topics_.empty(); }

  std::optional<PathWeight> Weight(const TopicId& topic,
                                   const CategoryId& category) const;

  // Records an edge; a repeated (topic, category) pair keeps the greater
  // weight.
  void AddEdge(const TopicId& topic, const CategoryId& category,
               PathWeight weight);
  void AddTopic(const TopicId& topic) { topics_.insert(topic); }

  friend bool operator==(const AggregatedInterestGraph&,
                         const AggregatedInterestGraph&) = default;

 private:
  std::map<EdgeKey, PathWeight> edges_;
  std::set<TopicId> topics_;
  std::set<CategoryId> categories_;
};

AggregatedInterestGraph Aggregate(std::span<const TopicInterestGraph> graphs);

// Topic-by-category edge-weight matrix. Rows and columns are sorted by id.
struct InterestMatrix {
  std::vector<TopicId> rows;
  std::vector<CategoryId> columns;
  std::vector<double> values;  // row-major, rows.size() * columns.size()

  double at(std::size_t row, std::size_t column) const {
    return values[row * columns.size() + column];
  }
};

InterestMatrix ToMatrix(const AggregatedInterestGraph& aggregate);

}  // namespace reslve

#endif  // RESLVE_KNOWLEDGE_GRAPH_H_
