#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sparselex {

/// Supported BM25 scoring variants.
///
/// robertson, atire and lucene assign score 0 to a term that does not occur
/// in a document; bm25l, bm25plus and tfldp assign a nonzero
/// length-independent "non-occurrence" score, which the index restores to
/// sparsity by shifting (see build_index).
enum class Variant {
    robertson,
    atire,
    lucene,
    bm25l,
    bm25plus,
    tfldp,  // TF 1+ln(1+ln(.)) with length normalization and lower-bound delta
};

Variant variant_from_string(std::string_view name);
std::string_view to_string(Variant v);

/// True for variants whose score vanishes at tf = 0.
bool is_sparse_variant(Variant v);

struct BM25Params {
    Variant variant = Variant::lucene;
    double k1 = 1.5;
    double b = 0.75;
    double delta = 0.0;  // used by bm25l / bm25plus / tfldp only

    /// The delta the variant's originating description recommends:
    /// 0.5 for bm25l, 1.0 for bm25plus, 0.5 for tfldp, 0 otherwise.
    static double default_delta(Variant v);

    /// Params with the variant's default delta filled in.
    static BM25Params for_variant(Variant v, double k1 = 1.5, double b = 0.75);

    /// Throws std::invalid_argument unless k1 > 0, 0 <= b <= 1, delta >= 0,
    /// and (for tfldp) delta > 1/e so the non-occurrence score is defined.
    void validate() const;
};

struct CorpusStats {
    uint32_t num_docs = 0;
    double avg_len = 0.0;  // mean token count over the corpus
    std::vector<uint32_t> doc_lengths;
};

/// Per-variant inverse document frequency. Natural log throughout.
/// Requires 1 <= df <= num_docs (out-of-vocabulary terms never score).
double idf(Variant v, uint32_t df, uint32_t num_docs);

/// Per-variant term-frequency component. For bm25l/bm25plus/tfldp this is
/// the variant's full TF expression including delta, so that
/// score = idf * tf_component for every variant.
double tf_component(double tf, double doc_len, const CorpusStats& stats,
                    const BM25Params& params);

/// Full impact score S(t, D) = idf * tf_component.
double score(double tf, uint32_t df, double doc_len, const CorpusStats& stats,
             const BM25Params& params);

/// Score of a term against a document that does not contain it; independent
/// of document length. Exactly 0 for robertson/atire/lucene.
double nonoccurrence_score(uint32_t df, uint32_t num_docs,
                           const BM25Params& params);

}  // namespace sparselex
