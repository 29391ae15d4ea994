#pragma once

#include <stdexcept>
#include <string>

namespace sonet {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed corpus input: bad JSONL line, duplicate document id, unreadable file.
class CorpusError : public Error {
 public:
  using Error::Error;
};

/// A document or actor id that is not present.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Two terms (or actors) that must differ are the same.
class InvalidPairError : public Error {
 public:
  using Error::Error;
};

/// A probability was requested over a universe with zero documents.
class EmptyUniverseError : public Error {
 public:
  using Error::Error;
};

/// A relation prior was requested over a network with no edges.
class EmptyRelationSpaceError : public Error {
 public:
  using Error::Error;
};

/// Index file whose version tag is not supported by this build.
class UnsupportedVersionError : public Error {
 public:
  using Error::Error;
};

/// Index file that is truncated or internally inconsistent.
class CorruptIndexError : public Error {
 public:
  using Error::Error;
};

}  // namespace sonet
