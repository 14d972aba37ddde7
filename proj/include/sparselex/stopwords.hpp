#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <unordered_set>

namespace sparselex {

/// The bundled English stopword set (mirrors data/stopwords_en.txt).
const std::unordered_set<std::string>& english_stopwords();

/// Loads a stopword file: one lowercase token per line, UTF-8;
/// blank lines and lines starting with '#' are ignored.
std::unordered_set<std::string> load_stopwords(const std::filesystem::path& path);

/// Order-independent FNV-1a hash of the set, recorded in index metadata so
/// a loaded index can be checked against the active stopword configuration.
uint64_t stopwords_hash(const std::unordered_set<std::string>& words);

}  // namespace sparselex
