#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace mnemos {

// Index-side analyzer: lowercase, split on non-alphanumeric, no stemming.
std::vector<std::string> tokenize(const std::string& text);

// Same, with the fixed 50-word stopword list removed.
std::vector<std::string> tokenize_no_stop(const std::string& text);

bool is_stopword(const std::string& lowercase_token);

// Default token-cost accounting: whitespace-separated chunks. A custom
// counter can be plugged in to mirror a specific backbone's tokenizer.
size_t whitespace_token_count(const std::string& text);

using TokenCounter = std::function<size_t(const std::string&)>;

// FNV-1a, used for deterministic content keys and feature hashing.
uint64_t fnv1a64(std::string_view data);

}  // namespace mnemos
