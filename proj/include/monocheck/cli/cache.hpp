#pragma once

#include "monocheck/intfactor.hpp"

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>

namespace monocheck::cli {

/// "p^e*q" for a complete factorization of a positive integer.
std::string format_factorization(const FactoredInt& f);
/// Inverse of format_factorization for `value`; nullopt when the text is
/// malformed, names a non-prime, or does not multiply out to value.
std::optional<FactoredInt> parse_factorization(const Integer& value, const std::string& text);

/// Append-only file of `n<TAB>factorization` lines. Reads the whole file on
/// construction, skipping corrupt lines with a warning. Appends take an
/// advisory lock so concurrent processes do not interleave lines.
class FileFactorCache : public FactorCache {
 public:
  explicit FileFactorCache(std::string path, std::ostream* warnings = nullptr);

  std::optional<FactoredInt> lookup(const Integer& abs_value) override;
  void store(const FactoredInt& f) override;

  std::size_t entries() const;
  std::size_t skipped_lines() const { return skipped_; }

  /// Values below this are cheap to refactor and never written.
  static const Integer& min_stored_value();

 private:
  std::string path_;
  mutable std::mutex mu_;
  std::map<Integer, FactoredInt> memo_;
  std::size_t skipped_ = 0;
};

}  // namespace monocheck::cli
