#pragma once

#include <stdexcept>
#include <string>

namespace ewaq {

// Raised when a resource file (lexicon, corpus, test set) fails to parse.
// The message carries file name and 1-based line number where applicable.
class LoadError : public std::runtime_error {
public:
    explicit LoadError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace ewaq
