#ifndef NEWSSENT_ERROR_HPP_
#define NEWSSENT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace newssent {

// Base class for everything this library throws on bad input.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Corpus / file ingestion failures (missing root, unreadable file, ...).
class IngestError : public Error {
public:
    explicit IngestError(const std::string& what) : Error(what) {}
};

// Lexicon parsing failures (not a SentiWordNet file, unreadable path).
class LexiconError : public Error {
public:
    explicit LexiconError(const std::string& what) : Error(what) {}
};

}  // namespace newssent

#endif  // NEWSSENT_ERROR_HPP_
