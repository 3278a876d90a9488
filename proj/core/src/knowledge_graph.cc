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

#include "reslve/knowledge_graph.h"

#include <algorithm>
#include <deque>

#include "reslve/errors.h"

namespace reslve {
namespace {

void SortUnique(std::vector<std::string>& ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
}

constexpr std::string_view kCategoryPrefix = "Category:";

// Depth-bounded BFS over the category subgraph starting from the direct
// categories of a topic. Returns shortest path length per category index, 0
// meaning not reached.
std::vector<int> CategoryDistances(const KnowledgeGraph& graph,
                                   const TopicNode& topic, int max_depth) {
  std::vector<int> dist(graph.category_count(), 0);
  std::deque<std::size_t> frontier;
  for (const CategoryId& c : topic.categories) {
    std::size_t index = *graph.CategoryIndex(c);
    if (dist[index] == 0) {
      dist[index] = 1;
      frontier.push_back(index);
    }
  }
  while (!frontier.empty()) {
    std::size_t current = frontier.front();
    frontier.pop_front();
    int next_depth = dist[current] + 1;
    if (next_depth > max_depth) continue;
    for (std::size_t parent : graph.ParentIndices(current)) {
      // First visit in BFS order is the shortest path, so a revisit can never
      // raise the weight 1/p and the max-merge keeps the existing value.
      if (dist[parent] != 0) continue;
      dist[parent] = next_depth;
      frontier.push_back(parent);
    }
  }
  return dist;
}

}  // namespace

std::string TitleFromId(std::string_view id) {
  if (id.starts_with(kCategoryPrefix)) id.remove_prefix(kCategoryPrefix.size());
  std::string title(id);
  std::replace(title.begin(), title.end(), '_', ' ');
  return title;
}

KnowledgeGraph::Builder& KnowledgeGraph::Builder::AddTopic(
    TopicId id, std::vector<CategoryId> categories, std::string description) {
  SortUnique(categories);
  auto [it, inserted] = topics_.try_emplace(id);
  if (!inserted) throw InputError("duplicate topic id: " + id);
  it->second = TopicNode{std::move(id), std::move(description),
                         std::move(categories)};
  return *this;
}

KnowledgeGraph::Builder& KnowledgeGraph::Builder::AddCategory(
    CategoryId id, std::vector<CategoryId> parents) {
  SortUnique(parents);
  auto [it, inserted] = categories_.try_emplace(id);
  if (!inserted) throw InputError("duplicate category id: " + id);
  it->second = CategoryNode{std::move(id), std::move(parents)};
  return *this;
}

KnowledgeGraph::Builder& KnowledgeGraph::Builder::SetDescription(
    const TopicId& id, std::string description) {
  auto it = topics_.find(id);
  if (it == topics_.end()) throw InputError("description for unknown topic: " + id);
  it->second.description = std::move(description);
  return *this;
}

KnowledgeGraph KnowledgeGraph::Builder::Build() && {
  KnowledgeGraph graph;
  for (auto& [id, topic] : topics_) {
    for (const CategoryId& c : topic.categories) {
      if (!categories_.contains(c)) {
        throw InputError("topic " + id + " references unknown category " + c);
      }
    }
    graph.edge_count_ += topic.categories.size();
  }
  for (auto& [id, category] : categories_) {
    for (const CategoryId& parent : category.parents) {
      if (!categories_.contains(parent)) {
        throw InputError("category " + id + " references unknown category " +
                         parent);
      }
    }
    graph.edge_count_ += category.parents.size();
  }

  graph.category_ids_.reserve(categories_.size());
  for (const auto& [id, category] : categories_) {
    graph.category_index_.emplace(id, graph.category_ids_.size());
    graph.category_ids_.push_back(id);
  }
  graph.parent_indices_.resize(graph.category_ids_.size());
  std::size_t index = 0;
  for (const auto& [id, category] : categories_) {
    auto& parents = graph.parent_indices_[index++];
    for (const CategoryId& parent : category.parents) {
      parents.push_back(graph.category_index_.at(parent));
    }
  }

  for (auto& [id, topic] : topics_) graph.topics_.emplace(id, std::move(topic));
  for (auto& [id, category] : categories_) {
    graph.categories_.emplace(id, std::move(category));
  }
  topics_.clear();
  categories_.clear();
  return graph;
}

const TopicNode* KnowledgeGraph::FindTopic(std::string_view id) const {
  auto it = topics_.find(id);
  return it == topics_.end() ? nullptr : &it->second;
}

const CategoryNode* KnowledgeGraph::FindCategory(std::string_view id) const {
  auto it = categories_.find(id);
  return it == categories_.end() ? nullptr : &it->second;
}

std::optional<std::size_t> KnowledgeGraph::CategoryIndex(
    std::string_view id) const {
  auto it = category_index_.find(std::string(id));
  if (it == category_index_.end()) return std::nullopt;
  return it->second;
}

PathWeight::PathWeight(int path_length) : path_length_(path_length) {
  if (path_length < 1) {
    throw InvariantError("path length must be positive, got " +
                         std::to_string(path_length));
  }
}

std::optional<int> ShortestPathLength(const KnowledgeGraph& graph,
                                      std::string_view from_topic,
                                      std::string_view to_category) {
  const TopicNode* topic = graph.FindTopic(from_topic);
  if (topic == nullptr) {
    throw InputError("unknown topic: " + std::string(from_topic));
  }
  std::optional<std::size_t> target = graph.CategoryIndex(to_category);
  if (!target) throw InputError("unknown category: " + std::string(to_category));

  // Unbounded: every simple path has at most category_count() edges.
  int bound = static_cast<int>(graph.category_count());
  std::vector<int> dist = CategoryDistances(graph, *topic, std::max(bound, 1));
  if (dist[*target] == 0) return std::nullopt;
  return dist[*target];
}

TopicInterestGraph BuildTopicInterestGraph(const KnowledgeGraph& graph,
                                           std::string_view root,
                                           int max_depth) {
  if (max_depth < 1) throw InputError("max_depth must be at least 1");
  const TopicNode* topic = graph.FindTopic(root);
  if (topic == nullptr) {
    throw InputError("root is not a topic: " + std::string(root));
  }
  TopicInterestGraph result{topic->id, {}};
  std::vector<int> dist = CategoryDistances(graph, *topic, max_depth);
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (dist[i] != 0) result.edges.emplace(graph.CategoryAt(i), PathWeight(dist[i]));
  }
  return result;
}

std::optional<PathWeight> AggregatedInterestGraph::Weight(
    const TopicId& topic, const CategoryId& category) const {
  auto it = edges_.find({topic, category});
  if (it == edges_.end()) return std::nullopt;
  return it->second;
}

void AggregatedInterestGraph::AddEdge(const TopicId& topic,
                                      const CategoryId& category,
                                      PathWeight weight) {
  topics_.insert(topic);
  categories_.insert(category);
  auto [it, inserted] = edges_.try_emplace({topic, category}, weight);
  if (!inserted && weight > it->second) it->second = weight;
}

AggregatedInterestGraph Aggregate(std::span<const TopicInterestGraph> graphs) {
  AggregatedInterestGraph aggregate;
  for (const TopicInterestGraph& g : graphs) {
    aggregate.AddTopic(g.root);
    for (const auto& [category, weight] : g.edges) {
      aggregate.AddEdge(g.root, category, weight);
    }
  }
  return aggregate;
}

InterestMatrix ToMatrix(const AggregatedInterestGraph& aggregate) {
  InterestMatrix matrix;
  matrix.rows.assign(aggregate.topics().begin(), aggregate.topics().end());
  matrix.columns.assign(aggregate.categories().begin(),
                        aggregate.categories().end());
  matrix.values.assign(matrix.rows.size() * matrix.columns.size(), 0.0);
  std::map<std::string_view, std::size_t> column_of;
  for (std::size_t j = 0; j < matrix.columns.size(); ++j) {
    column_of.emplace(matrix.columns[j], j);
  }
  // Edges are keyed (topic, category), so rows come out in sorted order.
  std::size_t row = 0;
  for (const auto& [key, weight] : aggregate.edges()) {
    while (matrix.rows[row] != key.first) ++row;
    matrix.values[row * matrix.columns.size() + column_of.at(key.second)] =
        weight.value();
  }
  return matrix;
}

}  // namespace reslve
