#include "vocabsweep/oracle.hpp"

#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "vocabsweep/error.hpp"

namespace vocabsweep::oracle {

namespace {

// Content keys of one document, with repetitions, in token order.
std::vector<std::string> document_keys(const Document& doc, const FilterConfig& config) {
  std::vector<std::string> keys;
  for (const auto& sentence : doc.sentences)
    for (const auto& token : sentence.tokens)
      if (auto key = normalize(token, config)) keys.push_back(*key);
  return keys;
}

std::map<std::string, long> count(const std::vector<std::string>& keys) {
  std::map<std::string, long> counts;
  for (const auto& k : keys) counts[k] += 1;
  return counts;
}

// Selection by repeated arg-max: pick the best remaining key (highest score,
// then smallest key) until `percent` of the candidates are taken.
std::set<std::string> select_best(const std::map<std::string, double>& scores, int percent) {
  const long total = static_cast<long>(scores.size());
  long wanted = 0;
  while (wanted * 100 < percent * total) ++wanted;

  std::set<std::string> chosen;
  for (long round = 0; round < wanted; ++round) {
    const std::string* best = nullptr;
    double best_score = 0;
    for (const auto& [key, score] : scores) {
      if (chosen.count(key)) continue;
      // std::map iterates keys ascending, so strict '>' keeps the smaller key on ties.
      if (best == nullptr || score > best_score) {
        best = &key;
        best_score = score;
      }
    }
    chosen.insert(*best);
  }
  return chosen;
}

}  // namespace

Lexicon oracle_extract(const Corpus& corpus, const FilterConfig& config, const MeasureSpec& spec) {
  if (spec.kind != MeasureKind::InterdocFreq && (spec.threshold < 1 || spec.threshold > 100))
    throw ContractError("oracle: percent out of range");
  if (spec.kind == MeasureKind::InterdocFreq && spec.threshold < 1)
    throw ContractError("oracle: min_docs out of range");

  std::vector<std::vector<std::string>> docs;
  for (const auto& doc : corpus.documents) docs.push_back(document_keys(doc, config));
  const double n_docs = static_cast<double>(docs.size());

  std::set<std::string> result;
  switch (spec.kind) {
    case MeasureKind::CollectionFreq: {
      std::map<std::string, double> freq;
      for (const auto& keys : docs)
        for (const auto& k : keys) freq[k] += 1;
      result = select_best(freq, spec.threshold);
      break;
    }
    case MeasureKind::DocumentFreq: {
      for (const auto& keys : docs) {
        std::map<std::string, double> freq;
        for (const auto& [k, c] : count(keys)) freq[k] = static_cast<double>(c);
        for (const auto& k : select_best(freq, spec.threshold)) result.insert(k);
      }
      break;
    }
    case MeasureKind::TfIdf: {
      for (const auto& keys : docs) {
        std::map<std::string, double> weight;
        for (const auto& [k, tf] : count(keys)) {
          long containing = 0;
          for (const auto& other : docs) {
            bool present = false;
            for (const auto& o : other) present = present || o == k;
            containing += present ? 1 : 0;
          }
          weight[k] = static_cast<double>(tf) * std::log(n_docs / static_cast<double>(containing));
        }
        for (const auto& k : select_best(weight, spec.threshold)) result.insert(k);
      }
      break;
    }
    case MeasureKind::InterdocFreq: {
      std::map<std::string, std::set<std::size_t>> seen_in;
      for (std::size_t d = 0; d < docs.size(); ++d)
        for (const auto& k : docs[d]) seen_in[k].insert(d);
      for (const auto& [k, where] : seen_in)
        if (where.size() >= static_cast<std::size_t>(spec.threshold)) result.insert(k);
      break;
    }
  }
  return Lexicon(std::vector<std::string>(result.begin(), result.end()));
}

}  // namespace vocabsweep::oracle
