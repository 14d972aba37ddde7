#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sparselex {

/// Bidirectional token <-> id map with per-token document frequency.
/// Ids are dense, assigned in first-encounter order during indexing.
/// Tokens are stored post-stemming when stemming is enabled.
class Vocabulary {
public:
    uint32_t size() const { return static_cast<uint32_t>(id_to_token_.size()); }

    std::optional<uint32_t> lookup(std::string_view token) const {
        auto it = token_to_id_.find(std::string(token));
        return it == token_to_id_.end() ? std::nullopt
                                        : std::optional<uint32_t>(it->second);
    }

    /// Returns the existing id or assigns the next free one.
    uint32_t add_or_get(std::string token) {
        auto [it, inserted] = token_to_id_.try_emplace(std::move(token), size());
        if (inserted) {
            id_to_token_.push_back(it->first);
            doc_frequency_.push_back(0);
        }
        return it->second;
    }

    const std::string& token(uint32_t id) const { return id_to_token_[id]; }

    uint32_t doc_frequency(uint32_t id) const { return doc_frequency_[id]; }
    void bump_doc_frequency(uint32_t id) { ++doc_frequency_[id]; }
    void set_doc_frequency(uint32_t id, uint32_t df) { doc_frequency_[id] = df; }

    const std::vector<std::string>& tokens() const { return id_to_token_; }
    const std::vector<uint32_t>& doc_frequencies() const { return doc_frequency_; }

private:
    std::unordered_map<std::string, uint32_t> token_to_id_;
    std::vector<std::string> id_to_token_;
    std::vector<uint32_t> doc_frequency_;
};

}  // namespace sparselex
