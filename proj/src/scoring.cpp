#include "sparselex/bm25.hpp"

#include <cmath>
#include <stdexcept>

namespace sparselex {

Variant variant_from_string(std::string_view name) {
    if (name == "robertson") return Variant::robertson;
    if (name == "atire") return Variant::atire;
    if (name == "lucene") return Variant::lucene;
    if (name == "bm25l") return Variant::bm25l;
    if (name == "bm25plus") return Variant::bm25plus;
    if (name == "tfldp") return Variant::tfldp;
    throw std::invalid_argument("unknown BM25 variant: " + std::string(name));
}

std::string_view to_string(Variant v) {
    switch (v) {
        case Variant::robertson: return "robertson";
        case Variant::atire: return "atire";
        case Variant::lucene: return "lucene";
        case Variant::bm25l: return "bm25l";
        case Variant::bm25plus: return "bm25plus";
        case Variant::tfldp: return "tfldp";
    }
    throw std::invalid_argument("invalid Variant value");
}

bool is_sparse_variant(Variant v) {
    return v == Variant::robertson || v == Variant::atire || v == Variant::lucene;
}

double BM25Params::default_delta(Variant v) {
    switch (v) {
        case Variant::bm25l: return 0.5;
        case Variant::bm25plus: return 1.0;
        case Variant::tfldp: return 0.5;
        default: return 0.0;
    }
}

BM25Params BM25Params::for_variant(Variant v, double k1, double b) {
    return BM25Params{v, k1, b, default_delta(v)};
}

void BM25Params::validate() const {
    if (!(k1 > 0.0)) throw std::invalid_argument("BM25Params: k1 must be > 0");
    if (!(b >= 0.0 && b <= 1.0))
        throw std::invalid_argument("BM25Params: b must be in [0, 1]");
    if (!(delta >= 0.0))
        throw std::invalid_argument("BM25Params: delta must be >= 0");
    // tfldp evaluates ln(1 + ln(delta)) at tf = 0, defined only for
    // delta > 1/e.
    if (variant == Variant::tfldp && !(delta > std::exp(-1.0)))
        throw std::invalid_argument(
            "BM25Params: tfldp requires delta > exp(-1)");
}

double idf(Variant v, uint32_t df, uint32_t num_docs) {
    if (df == 0 || df > num_docs)
        throw std::invalid_argument("idf: df must satisfy 1 <= df <= num_docs");
    const double n = static_cast<double>(num_docs);
    const double d = static_cast<double>(df);
    switch (v) {
        case Variant::lucene:
            return std::log(1.0 + (n - d + 0.5) / (d + 0.5));
        case Variant::robertson:
            return std::log((n - d + 0.5) / (d + 0.5));
        case Variant::atire:
            return std::log(n / d);
        case Variant::bm25l:
            return std::log((n + 1.0) / (d + 0.5));
        case Variant::bm25plus:
        case Variant::tfldp:
            return std::log((n + 1.0) / d);
    }
    throw std::invalid_argument("invalid Variant value");
}

double tf_component(double tf, double doc_len, const CorpusStats& stats,
                    const BM25Params& params) {
    if (tf < 0.0) throw std::invalid_argument("tf_component: tf must be >= 0");
    if (!(stats.avg_len > 0.0))
        throw std::invalid_argument("tf_component: avg_len must be > 0");
    const double norm = 1.0 - params.b + params.b * doc_len / stats.avg_len;
    switch (params.variant) {
        case Variant::lucene:
            return tf / (tf + params.k1 * norm);
        case Variant::robertson:
        case Variant::atire:
            return ((params.k1 + 1.0) * tf) / (tf + params.k1 * norm);
        case Variant::bm25l: {
            const double c = tf / norm;
            return ((params.k1 + 1.0) * (c + params.delta)) /
                   (params.k1 + c + params.delta);
        }
        case Variant::bm25plus: {
            const double c = tf / norm;
            return ((params.k1 + 1.0) * c) / (params.k1 + c) + params.delta;
        }
        case Variant::tfldp: {
            const double c = tf / norm;
            if (c + params.delta <= 0.0)
                throw std::invalid_argument("tf_component: tfldp needs c + delta > 0");
            const double inner = 1.0 + std::log(c + params.delta);
            if (inner <= 0.0)
                throw std::invalid_argument(
                    "tf_component: tfldp needs 1 + ln(c + delta) > 0");
            return 1.0 + std::log(inner);
        }
    }
    throw std::invalid_argument("invalid Variant value");
}

double score(double tf, uint32_t df, double doc_len, const CorpusStats& stats,
             const BM25Params& params) {
    // robertson/atire/lucene vanish at tf = 0 without touching idf's
    // preconditions; the shifted variants need the full product.
    if (tf == 0.0 && is_sparse_variant(params.variant)) return 0.0;
    return idf(params.variant, df, stats.num_docs) *
           tf_component(tf, doc_len, stats, params);
}

double nonoccurrence_score(uint32_t df, uint32_t num_docs,
                           const BM25Params& params) {
    if (is_sparse_variant(params.variant)) return 0.0;
    const double i = idf(params.variant, df, num_docs);
    switch (params.variant) {
        case Variant::bm25l:
            return i * ((params.k1 + 1.0) * params.delta) /
                   (params.k1 + params.delta);
        case Variant::bm25plus:
            return i * params.delta;
        case Variant::tfldp: {
            const double inner = 1.0 + std::log(params.delta);
            if (inner <= 0.0)
                throw std::invalid_argument(
                    "nonoccurrence_score: tfldp needs delta > exp(-1)");
            return i * (1.0 + std::log(inner));
        }
        default:
            return 0.0;
    }
}

}  // namespace sparselex
