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

#include "reslve/evaluation.h"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include <json.hpp>

#include "reslve/errors.h"
#include "reslve/tsv.h"

namespace reslve {
namespace {

std::uint64_t SplitMix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

__extension__ using Uint128 = unsigned __int128;

std::uint64_t Rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

std::string FormatPrecision(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.4f", value);
  return buffer;
}

std::vector<TopicId> Topics(const std::vector<CandidateMeaning>& ranked) {
  std::vector<TopicId> order;
  order.reserve(ranked.size());
  for (const CandidateMeaning& c : ranked) order.push_back(c.topic);
  return order;
}

std::vector<TopicId> Topics(const RankedResult& result) {
  std::vector<TopicId> order;
  order.reserve(result.ranked.size());
  for (const ScoredCandidate& s : result.ranked) order.push_back(s.candidate.topic);
  return order;
}

std::set<Platform> PlatformsOf(const EvalReport& report) {
  std::set<Platform> platforms;
  for (const auto& [method, by_platform] : report.grid) {
    for (const auto& [platform, tally] : by_platform) platforms.insert(platform);
  }
  return platforms;
}

std::size_t CodePointCount(std::string_view text) {
  std::size_t count = 0;
  for (char c : text) {
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++count;
  }
  return count;
}

}  // namespace

std::uint64_t MixSeed(std::uint64_t seed, std::string_view salt) {
  std::uint64_t hash = 0xCBF29CE484222325ULL;  // FNV-1a
  for (char c : salt) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001B3ULL;
  }
  std::uint64_t state = seed ^ hash;
  return SplitMix64(state);
}

SeededRandom::SeededRandom(std::uint64_t seed) {
  for (std::uint64_t& word : state_) word = SplitMix64(seed);
}

std::uint64_t SeededRandom::Next() {
  // xoshiro256**
  const std::uint64_t result = Rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = Rotl(state_[3], 45);
  return result;
}

std::uint64_t SeededRandom::Below(std::uint64_t bound) {
  if (bound == 0) throw InvariantError("SeededRandom::Below(0)");
  // Lemire's multiply-and-reject.
  Uint128 m = static_cast<Uint128>(Next()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<Uint128>(Next()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

std::vector<GoldLabel> ParseGoldDataset(std::string_view text) {
  std::vector<GoldLabel> labels;
  std::set<std::string> ids;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    std::string context = "gold line " + std::to_string(number);
    std::vector<std::string> f = SplitTabs(line);
    if (f.size() != 9) throw InputError(context + ": expected 9 tab-separated fields");

    GoldLabel g;
    g.entity_id = f[0];
    if (!ids.insert(g.entity_id).second) {
      throw InputError(context + ": duplicate entity id " + g.entity_id);
    }
    g.utterance_id = f[1];
    g.platform = ParsePlatform(f[2]);
    g.kind = ParseUtteranceKind(f[3]);
    g.user = f[4];
    g.entity.surface = f[5];
    g.entity.utterance_id = g.utterance_id;
    std::set<TopicId> topics;
    for (const std::string& field : SplitWhitespace(f[6])) {
      std::size_t eq = field.rfind('=');
      if (eq == std::string::npos || eq == 0) {
        throw InputError(context + ": bad candidate '" + field + "'");
      }
      CandidateMeaning c;
      c.topic = field.substr(0, eq);
      std::string scores = field.substr(eq + 1);
      std::size_t comma = scores.find(',');
      c.prior = ParseDouble(scores.substr(0, comma), context);
      if (comma != std::string::npos) {
        c.confidence = ParseDouble(scores.substr(comma + 1), context);
      }
      if (!topics.insert(c.topic).second) {
        throw InputError(context + ": duplicate candidate " + c.topic);
      }
      g.entity.candidates.push_back(std::move(c));
    }
    g.annotator_labels = SplitWhitespace(f[7]);
    g.gold_topic = Trim(f[8]);
    if (g.gold_topic != kNoSense && !topics.contains(g.gold_topic)) {
      throw InputError(context + ": gold topic " + g.gold_topic +
                       " is not among the candidates");
    }

    bool unanimous = !g.annotator_labels.empty() &&
                     std::all_of(g.annotator_labels.begin(), g.annotator_labels.end(),
                                 [&](const std::string& l) { return l == g.annotator_labels[0]; });
    if (g.gold_topic == kNoSense) {
      g.excluded = true;
      g.exclusion_reason = "no correct sense";
    } else if (!unanimous) {
      g.excluded = true;
      g.exclusion_reason = "annotators not unanimous";
    } else if (g.annotator_labels[0] != g.gold_topic) {
      g.excluded = true;
      g.exclusion_reason = "gold topic differs from annotator consensus";
    }
    labels.push_back(std::move(g));
  }
  return labels;
}

std::vector<GoldLabel> LoadGoldDataset(const std::filesystem::path& path) {
  return ParseGoldDataset(ReadFile(path));
}

double PrecisionAtOne(std::span<const EntityRanking> rankings,
                      const std::map<std::string, TopicId>& gold) {
  std::vector<std::string> missing;
  std::size_t hits = 0;
  for (const EntityRanking& r : rankings) {
    auto it = gold.find(r.entity_id);
    if (it == gold.end()) {
      missing.push_back(r.entity_id);
      continue;
    }
    if (!r.order.empty() && r.order.front() == it->second) ++hits;
  }
  if (!missing.empty()) {
    std::string message = "no gold label for entities:";
    for (const std::string& id : missing) message += " " + id;
    throw InputError(message);
  }
  if (rankings.empty()) return 0.0;
  return static_cast<double>(hits) / static_cast<double>(rankings.size());
}

std::vector<CandidateMeaning> RandomCandidateRank(const AmbiguousEntity& entity,
                                                  std::uint64_t seed) {
  std::vector<CandidateMeaning> ranked = entity.candidates;
  SeededRandom rng(seed);
  for (std::size_t i = ranked.size(); i > 1; --i) {
    std::size_t j = rng.Below(i);
    std::swap(ranked[i - 1], ranked[j]);
  }
  return ranked;
}

std::vector<CandidateMeaning> PriorFrequencyBaseline(const AmbiguousEntity& entity) {
  return PriorFrequencyRank(entity);
}

std::vector<CandidateMeaning> ProviderRank(const AmbiguousEntity& entity) {
  std::vector<CandidateMeaning> ranked = entity.candidates;
  auto score = [](const CandidateMeaning& c) { return c.confidence.value_or(c.prior); };
  std::stable_sort(ranked.begin(), ranked.end(),
                   [&](const CandidateMeaning& a, const CandidateMeaning& b) {
                     if (score(a) != score(b)) return score(a) > score(b);
                     return a.topic < b.topic;
                   });
  return ranked;
}

std::string SelectRandomUser(std::span<const std::string> pool,
                             std::string_view author, std::uint64_t seed) {
  std::vector<std::string> others;
  for (const std::string& user : pool) {
    if (user != author) others.push_back(user);
  }
  std::sort(others.begin(), others.end());
  others.erase(std::unique(others.begin(), others.end()), others.end());
  if (pool.size() < 2 || others.empty()) {
    throw InputError("random-user baseline needs a pool of at least two users "
                     "besides the author " + std::string(author));
  }
  SeededRandom rng(seed);
  return others[rng.Below(others.size())];
}

AgreementStats ComputeAgreement(const std::vector<std::vector<std::string>>& labels) {
  if (labels.empty()) throw InputError("agreement needs at least one item");
  const std::size_t n = labels.front().size();
  if (n < 2) throw InputError("agreement needs at least two annotators per item");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].size() != n) {
      throw InputError("ragged annotation matrix at item " + std::to_string(i));
    }
  }
  std::map<std::string, std::size_t> category_totals;
  double observed_sum = 0.0;
  for (const auto& item : labels) {
    std::map<std::string, std::size_t> counts;
    for (const std::string& label : item) ++counts[label];
    std::size_t agreeing_pairs = 0;
    for (const auto& [label, count] : counts) {
      agreeing_pairs += count * (count - 1);
      category_totals[label] += count;
    }
    observed_sum += static_cast<double>(agreeing_pairs) / static_cast<double>(n * (n - 1));
  }
  AgreementStats stats;
  stats.items = labels.size();
  stats.annotators = n;
  stats.observed = observed_sum / static_cast<double>(labels.size());
  const double total = static_cast<double>(labels.size() * n);
  for (const auto& [label, count] : category_totals) {
    double p = static_cast<double>(count) / total;
    stats.expected += p * p;
  }
  if (stats.expected >= 1.0) {
    // Every annotator used a single category everywhere.
    stats.kappa = 1.0;
  } else {
    stats.kappa = (stats.observed - stats.expected) / (1.0 - stats.expected);
  }
  return stats;
}

AmbiguityReport ComputeAmbiguityStats(std::span<const AnnotatedText> corpus) {
  AmbiguityReport report;
  std::vector<AmbiguousEntity> ambiguous;
  for (const AnnotatedText& text : corpus) {
    if (text.utterance.non_english) {
      ++report.non_english_texts;
      continue;
    }
    AmbiguityGroup& group = report.groups[{text.utterance.platform, text.utterance.kind}];
    ++group.texts;
    std::size_t bin = CodePointCount(text.utterance.raw) / kLengthBinWidth * kLengthBinWidth;
    ++group.length_histogram[bin];
    bool has_ambiguous = false;
    for (const AmbiguousEntity& e : text.entities) {
      if (e.candidates.empty()) continue;
      // Validity filters other than the ambiguity requirement.
      AmbiguousEntity probe = e;
      if (probe.candidates.size() < 2) probe.candidates.resize(2, probe.candidates.front());
      if (!PassesEntityFilters(probe)) continue;
      ++group.entities;
      if (e.candidates.size() < 2) continue;
      ++group.ambiguous_entities;
      has_ambiguous = true;
      ambiguous.push_back(e);
      double top = ProviderRank(e).front().confidence.value_or(ProviderRank(e).front().prior);
      std::size_t confidence_bin = std::min<std::size_t>(9, static_cast<std::size_t>(top * 10.0));
      ++report.top_confidence_histogram[confidence_bin];
    }
    if (has_ambiguous) ++group.texts_with_ambiguous;
  }
  report.candidate_counts = ComputeCandidateCountStats(ambiguous);
  return report;
}

std::string FormatAmbiguityReport(const AmbiguityReport& report) {
  auto percent = [](std::size_t part, std::size_t whole) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.1f%%",
                  whole == 0 ? 0.0 : 100.0 * static_cast<double>(part) / static_cast<double>(whole));
    return std::string(buffer);
  };
  std::ostringstream out;
  out << "# ambiguity\n";
  out << "platform\tkind\ttexts\ttexts_with_ambiguous\t(a)\tentities\tambiguous_entities\t(b)\n";
  for (const auto& [key, g] : report.groups) {
    out << ToString(key.first) << '\t' << ToString(key.second) << '\t' << g.texts << '\t'
        << g.texts_with_ambiguous << '\t' << percent(g.texts_with_ambiguous, g.texts) << '\t'
        << g.entities << '\t' << g.ambiguous_entities << '\t'
        << percent(g.ambiguous_entities, g.entities) << '\n';
  }
  out << "# non_english_texts\t" << report.non_english_texts << '\n';
  out << "# candidate_counts\n";
  out << "entities\tmin\tmean\tmedian\tmax\n";
  const CandidateCountStats& c = report.candidate_counts;
  out << c.entities << '\t' << c.min << '\t' << FormatDouble(c.mean) << '\t'
      << FormatDouble(c.median) << '\t' << c.max << '\n';
  out << "# top_candidate_confidence\n";
  out << "bin\tentities\n";
  for (std::size_t i = 0; i < report.top_confidence_histogram.size(); ++i) {
    char bin[32];
    std::snprintf(bin, sizeof(bin), "%.1f-%.1f", static_cast<double>(i) / 10.0,
                  static_cast<double>(i + 1) / 10.0);
    out << bin << '\t' << report.top_confidence_histogram[i] << '\n';
  }
  out << "# text_length_chars\n";
  out << "platform\tkind\tbin_start\ttexts\n";
  for (const auto& [key, g] : report.groups) {
    for (const auto& [bin, count] : g.length_histogram) {
      out << ToString(key.first) << '\t' << ToString(key.second) << '\t' << bin << '\t'
          << count << '\n';
    }
  }
  return out.str();
}

EvalReport EvaluateDataset(std::span<const GoldLabel> gold,
                           const std::map<std::string, UserInterestModel>& models,
                           const KnowledgeGraph& graph,
                           const EvaluationOptions& options) {
  ValidateAlpha(options.ranking.alpha);
  EvalReport report;
  for (std::string_view method : kMethods) report.grid[std::string(method)];

  std::vector<std::string> pool;
  for (const auto& [user, model] : models) pool.push_back(user);

  struct Cached {
    const GoldLabel* label;
    const UserInterestModel* model;
    std::vector<ScoredCandidate> scored;
  };
  std::vector<Cached> cached;

  for (const GoldLabel& g : gold) {
    if (g.excluded) {
      ++report.excluded;
      continue;
    }
    auto model_it = models.find(g.user);
    if (model_it == models.end()) {
      report.skipped.push_back(g.entity_id + ": no interest model for user " + g.user);
      continue;
    }
    const UserInterestModel& model = model_it->second;
    EntityEvaluation e;
    e.entity_id = g.entity_id;
    e.platform = g.platform;
    e.gold = g.gold_topic;

    std::vector<ScoredCandidate> scored =
        ScoreCandidates(model, g.entity, graph, options.ranking);
    RankedResult reslve = RankAtAlpha(scored, options.ranking.alpha);
    e.rankings["RESLVE"] = Topics(reslve);
    e.reslve_scores = reslve.ranked;
    e.rankings["RC"] =
        Topics(RandomCandidateRank(g.entity, MixSeed(options.rc_seed, g.entity_id)));
    e.rankings["PF"] = Topics(PriorFrequencyBaseline(g.entity));
    e.random_user = SelectRandomUser(pool, g.user, MixSeed(options.ru_seed, g.entity_id));
    e.rankings["RU"] =
        Topics(RankCandidates(models.at(e.random_user), g.entity, graph, options.ranking));
    e.rankings["PROVIDER"] = Topics(ProviderRank(g.entity));

    for (const auto& [method, order] : e.rankings) {
      Tally& cell = report.grid[method][g.platform];
      Tally& all = report.overall[method];
      ++cell.total;
      ++all.total;
      if (!order.empty() && order.front() == g.gold_topic) {
        ++cell.hits;
        ++all.hits;
      }
    }
    report.entities.push_back(std::move(e));
    cached.push_back({&g, &model, std::move(scored)});
  }

  if (options.alpha_sweep) {
    for (int k = 0; k <= 10; ++k) {
      AlphaSweepPoint point;
      point.alpha = static_cast<double>(k) / 10.0;
      RankingOptions at_alpha = options.ranking;
      at_alpha.alpha = point.alpha;
      for (const Cached& c : cached) {
        RankedResult reranked = RankAtAlpha(c.scored, point.alpha);
        RankedResult direct = RankCandidates(*c.model, c.label->entity, graph, at_alpha);
        if (Topics(reranked) != Topics(direct)) point.consistent = false;
        bool hit = reranked.top().candidate.topic == c.label->gold_topic;
        Tally& cell = point.by_platform[c.label->platform];
        ++cell.total;
        ++point.overall.total;
        if (hit) {
          ++cell.hits;
          ++point.overall.hits;
        }
      }
      report.sweep.push_back(std::move(point));
    }
  }

  std::vector<std::vector<std::string>> matrix;
  for (const GoldLabel& g : gold) {
    if (g.annotator_labels.size() >= 2) matrix.push_back(g.annotator_labels);
  }
  if (!matrix.empty()) {
    try {
      report.agreement = ComputeAgreement(matrix);
    } catch (const InputError&) {
      report.agreement.reset();  // ragged: annotator counts differ per item
    }
  }
  return report;
}

std::string FormatPrecisionGrid(const EvalReport& report) {
  std::set<Platform> platforms = PlatformsOf(report);
  std::ostringstream out;
  out << "method";
  for (Platform p : platforms) out << '\t' << ToString(p);
  out << "\tall\n";
  for (std::string_view method : kMethods) {
    const auto& row = report.grid.at(std::string(method));
    out << method;
    for (Platform p : platforms) {
      auto it = row.find(p);
      out << '\t' << FormatPrecision(it == row.end() ? 0.0 : it->second.Precision());
    }
    auto all = report.overall.find(std::string(method));
    out << '\t' << FormatPrecision(all == report.overall.end() ? 0.0 : all->second.Precision())
        << '\n';
  }
  return out.str();
}

std::string FormatAlphaSweep(const EvalReport& report) {
  std::set<Platform> platforms;
  for (const AlphaSweepPoint& point : report.sweep) {
    for (const auto& [p, tally] : point.by_platform) platforms.insert(p);
  }
  std::ostringstream out;
  out << "alpha";
  for (Platform p : platforms) out << '\t' << ToString(p);
  out << "\tall\tconsistent\n";
  for (const AlphaSweepPoint& point : report.sweep) {
    char alpha[16];
    std::snprintf(alpha, sizeof(alpha), "%.1f", point.alpha);
    out << alpha;
    for (Platform p : platforms) {
      auto it = point.by_platform.find(p);
      out << '\t' << FormatPrecision(it == point.by_platform.end() ? 0.0 : it->second.Precision());
    }
    out << '\t' << FormatPrecision(point.overall.Precision()) << '\t'
        << (point.consistent ? "yes" : "no") << '\n';
  }
  return out.str();
}

std::string FormatEvalReportJson(const EvalReport& report) {
  using nlohmann::ordered_json;
  auto tally_json = [](const Tally& t) {
    ordered_json j;
    j["hits"] = t.hits;
    j["total"] = t.total;
    j["p_at_1"] = t.Precision();
    return j;
  };
  ordered_json j;
  ordered_json grid = ordered_json::object();
  for (std::string_view method : kMethods) {
    ordered_json row = ordered_json::object();
    for (const auto& [platform, tally] : report.grid.at(std::string(method))) {
      row[std::string(ToString(platform))] = tally_json(tally);
    }
    auto all = report.overall.find(std::string(method));
    row["all"] = tally_json(all == report.overall.end() ? Tally{} : all->second);
    grid[std::string(method)] = std::move(row);
  }
  j["p_at_1"] = std::move(grid);
  j["excluded"] = report.excluded;
  j["skipped"] = report.skipped;
  if (report.agreement) {
    ordered_json a;
    a["items"] = report.agreement->items;
    a["annotators"] = report.agreement->annotators;
    a["observed"] = report.agreement->observed;
    a["expected"] = report.agreement->expected;
    a["fleiss_kappa"] = report.agreement->kappa;
    j["agreement"] = std::move(a);
  }
  ordered_json sweep = ordered_json::array();
  for (const AlphaSweepPoint& point : report.sweep) {
    ordered_json p;
    p["alpha"] = point.alpha;
    for (const auto& [platform, tally] : point.by_platform) {
      p[std::string(ToString(platform))] = tally_json(tally);
    }
    p["all"] = tally_json(point.overall);
    p["consistent"] = point.consistent;
    sweep.push_back(std::move(p));
  }
  j["alpha_sweep"] = std::move(sweep);
  ordered_json entities = ordered_json::array();
  for (const EntityEvaluation& e : report.entities) {
    ordered_json r;
    r["entity_id"] = e.entity_id;
    r["platform"] = ToString(e.platform);
    r["gold"] = e.gold;
    r["random_user"] = e.random_user;
    ordered_json rankings;
    for (std::string_view method : kMethods) {
      rankings[std::string(method)] = e.rankings.at(std::string(method));
    }
    r["rankings"] = std::move(rankings);
    ordered_json scores = ordered_json::array();
    for (const ScoredCandidate& s : e.reslve_scores) {
      scores.push_back(ordered_json::array(
          {s.candidate.topic, s.scores.content, s.scores.category, s.scores.combined}));
    }
    r["reslve_scores"] = std::move(scores);
    entities.push_back(std::move(r));
  }
  j["entities"] = std::move(entities);
  return j.dump(1, ' ', false, nlohmann::json::error_handler_t::replace) + "\n";
}

}  // namespace reslve
