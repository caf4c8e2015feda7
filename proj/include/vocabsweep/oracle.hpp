#pragma once

#include "vocabsweep/corpus.hpp"
#include "vocabsweep/lexicon.hpp"
#include "vocabsweep/measures.hpp"

namespace vocabsweep::oracle {

/// Brute-force re-derivation of an extraction straight from the tokens: no
/// CorpusIndex, no shared ranking code, only `normalize` in common with the
/// fast path. Quadratic in places; meant for small corpora (about 50 documents
/// and 500 distinct words).
Lexicon oracle_extract(const Corpus& corpus, const FilterConfig& config, const MeasureSpec& spec);

}  // namespace vocabsweep::oracle
